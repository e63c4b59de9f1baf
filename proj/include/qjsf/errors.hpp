#pragma once

#include <stdexcept>
#include <string>

namespace qjsf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by exact zero") {}
};

class IncompatibleKinds : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PoleEncountered : public Error {
 public:
  using Error::Error;
};

class CoincidentPoints : public Error {
 public:
  CoincidentPoints() : Error("coordinates are not pairwise distinct") {}
};

class NTooSmall : public Error {
 public:
  using Error::Error;
};

/// Raised by parameter classification; `clause()` names the violated condition.
class InadmissibleParameters : public Error {
 public:
  explicit InadmissibleParameters(std::string clause)
      : Error("inadmissible parameters: " + clause), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

class NonPositiveWeight : public Error {
 public:
  using Error::Error;
};

class ZeroCParameter : public Error {
 public:
  ZeroCParameter() : Error("parameter c (gamma) must be nonzero on this path") {}
};

class DegenerateMoments : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace qjsf

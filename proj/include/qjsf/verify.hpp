#pragma once

// Self-checking property suites. Each suite recomputes a family of identities
// with independent code paths and reports exact agreement or tolerance margins.

#include <cstdint>
#include <string>
#include <vector>

#include "qjsf/scalar.hpp"

namespace qjsf::verify {

struct Options {
  Rational q{1, 2};
  int max_size = 4;
  std::uint64_t seed = 20240611;
};

struct Outcome {
  std::string suite;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Every suite name accepted by run(), in execution order ("all" excluded).
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Unknown names throw std::invalid_argument.
std::vector<Outcome> run(const std::string& suite, const Options& opts = {});

}  // namespace qjsf::verify

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qjsf/scalar.hpp"

namespace qjsf {

/// Weakly decreasing sequence of positive parts; the empty sequence is the
/// empty partition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Trailing zeros are dropped; throws std::invalid_argument if not a partition.
  explicit Partition(std::vector<int> parts);

  /// Parses "2,1" or "-" (the empty partition).
  static Partition parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  /// 1-based row access; rows past the length read as 0.
  int operator[](std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Graded order: by size, then reverse-lexicographic within a size.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

using Box = std::pair<int, int>;  // (row, column), 1-based

Partition conjugate(const Partition& lambda);
/// n(lambda) = sum (i-1) lambda_i
long n_stat(const Partition& lambda);
/// True iff mu is contained in lambda.
bool contains(const Partition& lambda, const Partition& mu);
std::map<Box, int> hook_lengths(const Partition& lambda);
/// Each box replaced by a 2x2 square: (2l1, 2l1, 2l2, 2l2, ...).
Partition doubled(const Partition& lambda);

/// All partitions with |lambda| <= max_size, graded then reverse-lexicographic.
std::vector<Partition> enumerate_partitions(int max_size);
/// Partitions of exactly n, reverse-lexicographic.
std::vector<Partition> partitions_of(int n);
/// All nu with nu contained in lambda, in graded order.
std::vector<Partition> subpartitions(const Partition& lambda);

/// Filling of a shape whose entries weakly decrease along rows and strictly
/// decrease down columns.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // rows[i-1][j-1] = T(i,j)

  int at(int i, int j) const { return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
};

/// Reverse tableaux of shape mu with entries in {1..N}; empty if N < l(mu).
std::vector<Tableau> enumerate_reverse_tableaux(const Partition& mu, int n_vars);

/// Coordinates q^{-lambda_i + i - 1}, i = 1..n_vars. Throws NTooSmall if n_vars < l(lambda).
std::vector<Scalar> node_vector(const Partition& lambda, int n_vars, const Rational& q);

/// Lazily evaluated X(lambda); coordinate(i) for i >= 1.
class NodeRule {
 public:
  NodeRule(Partition lambda, Rational q) : lambda_(std::move(lambda)), q_(std::move(q)) {}
  Scalar coordinate(std::size_t i) const;
  std::vector<Scalar> prefix(std::size_t n) const;

 private:
  Partition lambda_;
  Rational q_;
};

}  // namespace qjsf

template <>
struct std::hash<qjsf::Partition> {
  std::size_t operator()(const qjsf::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : p.parts()) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

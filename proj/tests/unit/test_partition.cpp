#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <functional>

#include "qjsf/interp.hpp"
#include "qjsf/partition.hpp"

using namespace qjsf;

namespace {

// lambda'_j = #{i : lambda_i >= j}
Partition column_counts(const Partition& l) {
  std::vector<int> cols;
  for (int j = 1; j <= l[1]; ++j) {
    int c = 0;
    for (int v : l.parts()) c += v >= j;
    cols.push_back(c);
  }
  return Partition(cols);
}

// number of standard Young tableaux by filling boxes 1..n one at a time
long standard_tableaux(std::vector<int> shape) {
  long count = 0;
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> filled(shape.size(), 0);
  std::function<void(int)> go = [&](int placed) {
    if (placed == n) {
      ++count;
      return;
    }
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (filled[i] < shape[i] && (i == 0 || filled[i - 1] > filled[i])) {
        ++filled[i];
        go(placed + 1);
        --filled[i];
      }
    }
  };
  go(0);
  return count;
}

// all fillings with entries 1..n, filtered by the reverse-tableau rule
long reverse_fillings(const Partition& mu, int n) {
  std::vector<std::pair<int, int>> boxes;
  for (int i = 1; i <= static_cast<int>(mu.length()); ++i) {
    for (int j = 1; j <= mu[static_cast<std::size_t>(i)]; ++j) boxes.emplace_back(i, j);
  }
  std::vector<int> v(boxes.size(), 1);
  long count = 0;
  while (true) {
    auto at = [&](int i, int j) {
      for (std::size_t k = 0; k < boxes.size(); ++k) {
        if (boxes[k] == std::make_pair(i, j)) return v[k];
      }
      return -1;
    };
    bool ok = true;
    for (const auto& [i, j] : boxes) {
      if (j > 1 && at(i, j - 1) < at(i, j)) ok = false;
      if (i > 1 && at(i - 1, j) <= at(i, j)) ok = false;
    }
    count += ok;
    std::size_t k = 0;
    while (k < v.size() && v[k] == n) v[k++] = 1;
    if (k == v.size()) break;
    ++v[k];
  }
  return count;
}

}  // namespace

TEST_CASE("construction and serialization") {
  CHECK(Partition{2, 1, 0}.length() == 2);
  CHECK_THROWS(Partition{1, 2});
  CHECK(Partition::parse("-").empty());
  CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
  CHECK(Partition{3, 1, 1}.to_string() == "3,1,1");
  CHECK(Partition{}.to_string() == "-");
  CHECK(Partition{4, 2}.size() == 6);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate(Partition{3}) == Partition{1, 1, 1});
  CHECK(conjugate(Partition{4, 2, 1}) == column_counts(Partition{4, 2, 1}));
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
  for (const Partition& l : enumerate_partitions(8)) {
    CHECK(conjugate(l) == column_counts(l));
    CHECK(conjugate(conjugate(l)) == l);
  }
}

TEST_CASE("n statistic") {
  CHECK(n_stat(Partition{}) == 0);
  CHECK(n_stat(Partition{1, 1}) == 1);
  CHECK(n_stat(Partition{4, 2, 1}) == 0 * 4 + 1 * 2 + 2 * 1);
  for (const Partition& l : enumerate_partitions(8)) {
    long binom = 0;
    for (int v : l.parts()) binom += v * (v - 1) / 2;
    CHECK(n_stat(conjugate(l)) == binom);
  }
}

TEST_CASE("containment") {
  CHECK(contains(Partition{2, 1}, Partition{1, 1}));
  CHECK_FALSE(contains(Partition{2}, Partition{1, 1}));
  CHECK(contains(Partition{3, 2}, Partition{3, 2}));
  CHECK(contains(Partition{1}, Partition{}));
}

TEST_CASE("hook lengths") {
  CHECK(hook_lengths(Partition{1}) == std::map<Box, int>{{{1, 1}, 1}});
  CHECK(hook_lengths(Partition{2, 1}) == std::map<Box, int>{{{1, 1}, 3}, {{1, 2}, 1}, {{2, 1}, 1}});
  // hook-length formula against direct enumeration of standard tableaux
  for (const Partition& l : enumerate_partitions(7)) {
    long hooks = 1;
    for (const auto& [box, h] : hook_lengths(l)) hooks *= h;
    long fact = 1;
    for (int k = 2; k <= l.size(); ++k) fact *= k;
    CHECK(fact / hooks == standard_tableaux(l.parts()));
  }
  CHECK(standard_tableaux({3, 2}) == 5);
}

TEST_CASE("doubled diagram") {
  CHECK(doubled(Partition{}) == Partition{});
  CHECK(doubled(Partition{1}) == Partition{2, 2});
  CHECK(doubled(Partition{2, 1}) == Partition{4, 4, 2, 2});
}

TEST_CASE("node vectors") {
  CHECK(node_vector(Partition{}, 3, Rational(1, 2)) == std::vector<Scalar>{Scalar(1), Scalar(1, 2), Scalar(1, 4)});
  CHECK(node_vector(Partition{1}, 2, Rational(1, 2)) == std::vector<Scalar>{Scalar(2), Scalar(1, 2)});
  CHECK_THROWS_AS(node_vector(Partition{1, 1}, 1, Rational(1, 2)), NTooSmall);
  const NodeRule rule(Partition{2, 1}, Rational(1, 3));
  CHECK(rule.coordinate(1) == Scalar(9));
  CHECK(rule.coordinate(2) == Scalar(1));
  CHECK(rule.coordinate(5) == Scalar(1, 81));
}

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(2) == std::vector<Partition>{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}});
  // p(0..5) = 1, 1, 2, 3, 5, 7 via the recurrence p(n, k) = p(n, k-1) + p(n-k, k)
  std::function<long(int, int)> p = [&](int n, int k) -> long {
    if (n == 0) return 1;
    if (n < 0 || k == 0) return 0;
    return p(n, k - 1) + p(n - k, k);
  };
  long expected = 0;
  for (int n = 0; n <= 5; ++n) expected += p(n, n);
  CHECK(enumerate_partitions(5).size() == static_cast<std::size_t>(expected));
  CHECK(expected == 19);
  const auto all = enumerate_partitions(6);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("reverse tableaux") {
  CHECK(enumerate_reverse_tableaux(Partition{1}, 3).size() == 3);
  const auto t = enumerate_reverse_tableaux(Partition{1, 1}, 2);
  REQUIRE(t.size() == 1);
  CHECK(t[0].at(1, 1) == 2);
  CHECK(t[0].at(2, 1) == 1);
  CHECK(enumerate_reverse_tableaux(Partition{2, 1}, 3).size() == static_cast<std::size_t>(reverse_fillings(Partition{2, 1}, 3)));
  CHECK(reverse_fillings(Partition{2, 1}, 3) == 8);
  CHECK(enumerate_reverse_tableaux(Partition{1, 1, 1}, 2).empty());
  for (const Partition& mu : enumerate_partitions(4)) {
    for (int n = 1; n <= 3; ++n) {
      const auto ones = std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(1));
      CHECK(Scalar(static_cast<long>(enumerate_reverse_tableaux(mu, n).size())) == schur_eval_jacobi_trudi(mu, ones));
    }
  }
}

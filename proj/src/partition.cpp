#include "qjsf/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qjsf {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
  }
}

Partition Partition::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty() || text == "-" || text == "0") return {};
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view tok = text.substr(start, comma - start);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(std::string(tok)));
    start = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // within a size, lexicographically larger comes first
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda[1]), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

long n_stat(const Partition& lambda) {
  long n = 0;
  for (std::size_t i = 1; i <= lambda.length(); ++i) n += static_cast<long>(i - 1) * lambda[i];
  return n;
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 1; i <= mu.length(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

std::map<Box, int> hook_lengths(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::map<Box, int> hooks;
  for (int i = 1; i <= static_cast<int>(lambda.length()); ++i) {
    for (int j = 1; j <= lambda[static_cast<std::size_t>(i)]; ++j) {
      hooks[{i, j}] = lambda[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i + 1;
    }
  }
  return hooks;
}

Partition doubled(const Partition& lambda) {
  std::vector<int> out;
  out.reserve(2 * lambda.length());
  for (int part : lambda.parts()) {
    out.push_back(2 * part);
    out.push_back(2 * part);
  }
  return Partition(std::move(out));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur(lambda.length(), 0);
  // odometer over rows, each row bounded by the row above and by lambda
  auto rec = [&](auto&& self, std::size_t row) -> void {
    if (row == lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    const int cap = row == 0 ? lambda[1] : std::min(lambda[row + 1], cur[row - 1]);
    for (int v = 0; v <= cap; ++v) {
      cur[row] = v;
      self(self, row + 1);
    }
    cur[row] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> enumerate_reverse_tableaux(const Partition& mu, int n_vars) {
  std::vector<Tableau> out;
  if (n_vars < static_cast<int>(mu.length())) return out;
  Tableau t{mu, {}};
  for (int part : mu.parts()) t.rows.emplace_back(static_cast<std::size_t>(part), 0);
  std::vector<Box> boxes;
  for (int i = 1; i <= static_cast<int>(mu.length()); ++i) {
    for (int j = 1; j <= mu[static_cast<std::size_t>(i)]; ++j) boxes.emplace_back(i, j);
  }
  const Partition conj = conjugate(mu);
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == boxes.size()) {
      out.push_back(t);
      return;
    }
    const auto [i, j] = boxes[k];
    int hi = n_vars;
    if (j > 1) hi = std::min(hi, t.at(i, j - 1));      // weak decrease along the row
    if (i > 1) hi = std::min(hi, t.at(i - 1, j) - 1);  // strict decrease down the column
    // the rest of the column below needs room for strictly smaller entries
    const int below = conj[static_cast<std::size_t>(j)] - i;
    for (int v = hi; v >= 1 + below; --v) {
      t.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
      self(self, k + 1);
    }
  };
  fill(fill, 0);
  return out;
}

std::vector<Scalar> node_vector(const Partition& lambda, int n_vars, const Rational& q) {
  if (n_vars < static_cast<int>(lambda.length())) {
    throw NTooSmall("node vector needs N >= l(lambda) = " + std::to_string(lambda.length()));
  }
  return NodeRule(lambda, q).prefix(static_cast<std::size_t>(n_vars));
}

Scalar NodeRule::coordinate(std::size_t i) const {
  return Scalar(q_).pow(-static_cast<long>(lambda_[i]) + static_cast<long>(i) - 1);
}

std::vector<Scalar> NodeRule::prefix(std::size_t n) const {
  std::vector<Scalar> xs;
  xs.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) xs.push_back(coordinate(i));
  return xs;
}

}  // namespace qjsf

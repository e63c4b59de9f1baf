#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "qjsf/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* title;
  std::vector<std::string> suites;
  double budget_seconds;  // 0 = no runtime requirement
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden examples", {"golden"}, 1.0},
      {2, "vanishing and extra vanishing", {"vanishing"}, 60.0},
      {3, "normalization", {"normalization"}, 0.0},
      {4, "three-way agreement", {"agreement"}, 0.0},
      {5, "projective consistency", {"projective"}, 0.0},
      {6, "expansion consistency", {"expansion"}, 0.0},
      {7, "orthogonality", {"orthogonality"}, 300.0},
      {8, "fast path", {"fastpath"}, 0.0},
      {9, "norm limit", {"norm_limit"}, 0.0},
      {10, "realness and unitriangularity", {"realness", "unitriangularity"}, 0.0},
      {11, "exceptional case", {"exceptional"}, 0.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    bool ok = true;
    double seconds = 0.0;
    std::string detail;
    for (const std::string& suite : c.suites) {
      try {
        for (const auto& o : qjsf::verify::run(suite)) {
          ok = ok && o.passed;
          seconds += o.seconds;
          if (!detail.empty()) detail += "; ";
          detail += o.suite + ": " + o.detail;
        }
      } catch (const std::exception& e) {
        ok = false;
        detail += suite + ": threw " + e.what();
      }
    }
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    std::printf("%s criterion %2d  %-32s %8.2fs  %s\n", ok ? "PASS" : "FAIL", c.number, c.title, seconds,
                detail.c_str());
    std::fflush(stdout);
    failures += !ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

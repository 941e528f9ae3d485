#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "liegra/verify.hpp"

using namespace liegra;

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double limit_s;
};

const std::vector<Criterion> kCriteria{
    {1, "Basis counts", "basis", 1},
    {2, "Composition golden files", "composition", 1},
    {3, "Operad axioms", "operad-axioms", 30},
    {4, "Exponential coefficients", "exp", 10},
    {5, "Logarithm coefficients", "log", 10},
    {6, "Group law", "group", 60},
    {7, "BCH", "bch", 60},
    {8, "Flow equation", "flow", 10},
    {9, "Gauge action", "action", 120},
    {10, "dg identity", "dg", 60},
    {11, "Non-connected product", "nc", 120},
    {12, "Reductions", "reductions", 30},
    {13, "Growth", "growth", 300},
};

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<IdentityReport> reports;
    std::string error;
    try {
      reports = run_suite(c.suite);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t checks = 0;
    std::vector<const IdentityReport*> bad;
    for (const IdentityReport& r : reports) {
      if (r.informational) continue;
      ++checks;
      if (!r.pass) bad.push_back(&r);
    }
    const bool pass = error.empty() && bad.empty() && checks > 0 && secs <= c.limit_s;
    if (!pass) ++failed;
    std::printf("[%s] %2d %-26s %3zu checks  %7.2f s (limit %g s)\n", pass ? "PASS" : "FAIL", c.id, c.title, checks,
                secs, c.limit_s);
    if (!error.empty()) std::printf("       error: %s\n", error.c_str());
    for (const IdentityReport* r : bad) std::printf("       %s\n", to_text(*r).c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  return failed == 0 ? 0 : 1;
}

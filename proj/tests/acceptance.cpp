// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <string>

#include "catnorm/app/commands.hpp"
#include "catnorm/app/suites.hpp"
#include "catnorm/finalg/construct.hpp"
#include "catnorm/normalizer/normalizer.hpp"

using namespace catnorm;

namespace {

constexpr double kTimeLimit = 120.0;  // seconds, criteria 1 and 4
constexpr int kMaxOrder = 16;
constexpr std::uint64_t kSeed = 20240601;

bool all_ok = true;

void line(int n, std::string const& what, bool pass, std::string const& detail) {
  all_ok = all_ok && pass;
  std::printf("criterion %2d %-22s %s  %s\n", n, what.c_str(), pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

struct Timed {
  Report report;
  double seconds;
};

Timed timed(std::string const& suite) {
  auto start = std::chrono::steady_clock::now();
  auto r = run_suite(suite, kMaxOrder, kSeed);
  return {r, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

std::string counts(Report const& r) {
  return std::to_string(r.passed()) + "/" + std::to_string(r.cases.size()) + " cases, " + r.bound;
}

std::string secs(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s (limit %.0f s)", s, kTimeLimit);
  return buf;
}

void suite_line(int n, std::string const& suite, bool timed_limit = false) {
  auto t = timed(suite);
  bool pass = t.report.ok() && !t.report.cases.empty();
  std::string detail = counts(t.report);
  if (timed_limit) {
    pass = pass && t.seconds < kTimeLimit;
    detail += ", " + secs(t.seconds);
  }
  line(n, suite, pass, detail);
}

// Largest subgroup between U and T in which U is normal, by scanning all
// subgroups, against the normalizer engine.
void maximal_line(int n) {
  int cases = 0, bad = 0;
  std::string first;
  for (auto const& t : builtin_groups(12))
    for (auto const& u : subgroups(t)) {
      Subgroup best = u;
      for (auto const& h : subgroups(t)) {
        if (!u.is_subset_of(h) || h.order() <= best.order()) continue;
        bool normal = true;
        for (elem_t x : h.elements()) normal = normal && u.normalized_by(x);
        if (normal) best = h;
      }
      ++cases;
      if (!(normalizer(u).N == best)) {
        ++bad;
        if (first.empty()) first = " first: " + t.name();
      }
    }
  line(n, "normalizer-maximal", bad == 0,
       std::to_string(cases - bad) + "/" + std::to_string(cases) + " subgroup pairs, order <= 12" + first);
}

}  // namespace

int main() {
  suite_line(1, "fibrancy", true);
  suite_line(2, "monicity");
  {
    auto t = timed("normalizer-universal");
    line(3, "normalizer-universal", t.report.ok() && !t.report.cases.empty(), counts(t.report));
    maximal_line(3);
  }
  suite_line(4, "eccentric-faithful", true);
  suite_line(5, "product-distinctive");
  suite_line(6, "faithful-cover");
  suite_line(7, "centralizers");
  {
    auto t = timed("pullback-stability");
    bool pass = t.report.ok() && t.report.cases.size() >= 200;
    line(8, "pullback-stability", pass, counts(t.report) + " (at least 200 required)");
  }
  suite_line(9, "mset");
  suite_line(10, "topological");
  {
    SuiteConfig cfg;
    cfg.max_order = kMaxOrder;
    cfg.suites = suite_names();
    cfg.seed = kSeed;
    auto a = cmd_suite(cfg);
    auto b = cmd_suite(cfg);
    line(11, "determinism", a.document == b.document && !a.document.empty(),
         std::to_string(a.document.size()) + " bytes, identical: " + (a.document == b.document ? "yes" : "no"));
  }
  return all_ok ? 0 : 1;
}

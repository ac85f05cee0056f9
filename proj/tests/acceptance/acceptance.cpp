// One line per acceptance criterion. Tolerances, sample counts and time limits
// are pinned here and applied to the suite reports independently of the
// tolerances the suites themselves record.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "sbolab/quadrature.hpp"

using namespace sbolab;
using namespace sbolab::cli;

namespace {

struct Selection {
  std::string name;
  double tolerance;
  std::size_t min_cases;
};

struct Tally {
  std::size_t cases = 0, failed = 0;
  double max_error = 0.0;
  double seconds = 0.0;
  std::string problem;
};

Report timed_run(const RunConfig& cfg, double& seconds) {
  EvaluationBudget budget(cfg.budget);
  const auto t0 = std::chrono::steady_clock::now();
  Report r = run_suite(cfg, budget);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void collect(const Report& r, const Selection& sel, Tally& t) {
  std::size_t hits = 0;
  for (const auto& c : r.cases) {
    if (c.name != sel.name) continue;
    ++hits;
    const bool rel_ok = std::isfinite(c.error) && c.error <= sel.tolerance;
    const bool abs_ok = !c.abs_error || (std::isfinite(*c.abs_error) && *c.abs_error <= c.abs_tolerance);
    if (!rel_ok || !abs_ok) ++t.failed;
    t.max_error = std::isfinite(c.error) ? std::max(t.max_error, c.error) : c.error;
  }
  t.cases += hits;
  if (hits < sel.min_cases) {
    t.problem += " '" + sel.name + "' has " + std::to_string(hits) + " < " + std::to_string(sel.min_cases) +
                 " cases;";
  }
}

RunConfig suite(const std::string& name) {
  RunConfig c;
  c.suite = name;
  c.seed = 20240607;
  return c;
}

struct Criterion {
  int id;
  std::string title;
  double tolerance;  // reported; per-selection tolerances are what is checked
  double time_limit_s;
  std::function<void(Tally&)> body;
};

// Runs `cfg` and folds the selected cases into the tally; the suite's time counts toward the limit.
void check(Tally& t, const RunConfig& cfg, std::vector<Selection> sels) {
  double s = 0.0;
  const Report r = timed_run(cfg, s);
  t.seconds += s;
  for (const auto& sel : sels) collect(r, sel, t);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "even-degree Gegenbauer polynomial as a terminating 2F1, l <= 6", 1e-12, 1.0, [](Tally& t) {
                        RunConfig c = suite("specfun");
                        c.l = IntRange{0, 6};
                        check(t, c,
                              {{"even-degree Gegenbauer identity", 1e-12, 50},
                               {"even-degree Gegenbauer identity, real argument", 1e-12, 50}});
                      }});
  criteria.push_back({2, "inflated Gegenbauer sum form vs Gamma-quotient form, l <= 6", 1e-11, 1.0, [](Tally& t) {
                        RunConfig c = suite("specfun");
                        c.l = IntRange{0, 6};
                        check(t, c, {{"inflated Gegenbauer two-line equality", 1e-11, 50}});
                      }});
  criteria.push_back({3, "Kummer relation, 100 real z in (-0.9, 0.9)", 1e-10, 1.0, [](Tally& t) {
                        check(t, suite("specfun"), {{"Kummer relation", 1e-10, 100}});
                      }});
  criteria.push_back({4, "algebraic Fourier transform: exact homomorphism, F_c intertwining", 1e-9, 1.0, [](Tally& t) {
                        check(t, suite("weyl"),
                              {{"algebraic Fourier transform homomorphism", 0.0, 100},
                               {"Fourier transform intertwines S and hat(S)", 1e-9, 20}});
                      }});
  criteria.push_back({5, "conformal factor cocycle and group action, 1000 samples", 1e-10, 5.0, [](Tally& t) {
                        check(t, suite("geometry"),
                              {{"conformal factor cocycle", 1e-10, 1000},
                               {"principal series is a representation", 1e-10, 1000},
                               {"flat generators match the Lorentz action", 1e-10, 1}});
                      }});
  criteria.push_back({6, "F-method: dim 1, exact proportionality to the Juhl table, n 2..5, l <= 4", 0.0, 30.0,
                      [](Tally& t) {
                        RunConfig c = suite("fmethod");
                        c.n = IntRange{2, 5};
                        c.l = IntRange{0, 4};
                        c.samples = 10;
                        check(t, c, {{"F-method solution space", 0.0, 4 * 5 * 10}});
                      }});
  criteria.push_back({7, "residue formula on cone grids, l <= 4, n <= 5, 10 lambdas, 50 points", 1e-10, 10.0,
                      [](Tally& t) {
                        RunConfig c = suite("residue");
                        c.n = IntRange{2, 5};
                        c.l = IntRange{0, 4};
                        c.samples = 10;
                        c.grid = 50;
                        check(t, c, {{"residue formula", 1e-10, 4 * 5 * 10}});
                      }});
  criteria.push_back({8, "functional equations T A and A T, n 2..4, 10 samples, 50 points", 1e-10, 10.0, [](Tally& t) {
                        RunConfig c = suite("functional-eq");
                        c.n = IntRange{2, 4};
                        c.samples = 10;
                        c.grid = 50;
                        check(t, c,
                              {{"functional equation T A", 1e-10, 30}, {"functional equation A T", 1e-10, 30}});
                      }});
  criteria.push_back({9, "numeric Fourier transforms of the A and Riesz kernels, n = 2", 1e-4, 600.0, [](Tally& t) {
                        check(t, suite("fourier-kernel"),
                              {{"Fourier transform of the A kernel", 1e-4, 3},
                               {"Fourier transform of the Riesz kernel", 1e-4, 3}});
                      }});
  criteria.push_back({10, "covariance: juhl 1e-10 (inversion 1e-6), aop dilation/rotation 1e-5", 1e-5, 600.0,
                      [](Tally& t) {
                        RunConfig juhl = suite("covariance");
                        juhl.n = IntRange{2, 2};
                        juhl.l = IntRange{0, 2};
                        check(t, juhl,
                              {{"juhl covariance under translation", 1e-10, 3},
                               {"juhl covariance under rotation", 1e-10, 3},
                               {"juhl covariance under dilation", 1e-10, 3},
                               {"juhl covariance under reflection", 1e-10, 3}});
                        juhl.generator = "inversion";
                        check(t, juhl, {{"juhl covariance under inversion", 1e-6, 3}});
                        RunConfig aop = suite("covariance");
                        aop.op = "aop";
                        aop.n = IntRange{2, 2};
                        for (const char* gen : {"dilation", "rotation"}) {
                          aop.generator = gen;
                          check(t, aop, {{std::string("aop covariance under ") + gen, 1e-5, 1}});
                        }
                      }});
  criteria.push_back({11, "A-symbol vanishes on 5 points of L_even", 1e-12, 1.0, [](Tally& t) {
                        RunConfig c = suite("residue");
                        c.n = IntRange{2, 5};
                        c.l = IntRange{0, 0};
                        c.samples = 1;
                        check(t, c, {{"zero set L_even", 1e-12, 5 * 4}});
                      }});

  int failures = 0;
  for (const auto& cr : criteria) {
    Tally t;
    try {
      cr.body(t);
    } catch (const std::exception& e) {
      t.problem += std::string(" exception: ") + e.what();
    }
    const bool in_time = t.seconds < cr.time_limit_s;
    const bool ok = t.failed == 0 && t.problem.empty() && in_time && t.cases > 0;
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s | cases %zu, failed %zu, max error %.3e, tol %.0e, time %.3f s (limit %g s)%s%s\n",
                ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(), t.cases, t.failed, t.max_error, cr.tolerance, t.seconds,
                cr.time_limit_s, in_time ? "" : " [too slow]", t.problem.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_SUITE_HPP
#define STRIPSPEC_SUITE_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "stripspec/catalog.hpp"
#include "stripspec/diagnostics.hpp"
#include "stripspec/harmonic.hpp"
#include "stripspec/projection.hpp"
#include "stripspec/riesz.hpp"

namespace stripspec::diag {

/**
 * \brief Configuration of the batch verification suite.
 *
 * `tolerances` overrides the per-check defaults by check name. The seed
 * drives the randomized reconstruction trials and is recorded in the
 * report, which is deterministic given config + seed.
 */
struct SuiteConfig {
  std::vector<std::string> catalog = catalog_names();
  std::vector<int> N_list{8, 16, 32, 64};
  std::vector<double> p_list{1.5, 2.0, 3.0};
  std::vector<double> hy_p_list{1.25, 1.5, 2.0};
  std::vector<int> dims{1, 3};
  int reconstruction_trials = 100;
  int grid_nx = 64, grid_ny = 64;
  double xi = 5.0;
  unsigned seed = 94631;
  SeriesConvention convention = SeriesConvention::harmonic_consistent;
  std::map<std::string, double> tolerances;

  double tol(const std::string& name) const;
  void validate() const;
};

/// One executed check. `measured <= tolerance` is the pass condition for
/// every record; inequality-style checks store their violation as
/// `measured` so the condition is uniform.
struct CheckRecord {
  std::string name;
  std::string anchor;  // property family the check certifies
  std::string inputs;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool xfail = false;  // expected failure: excluded from ok()
};

struct Report {
  std::vector<CheckRecord> checks;
  std::string quadrature;
  std::string convention;
  unsigned seed = 0;

  int total() const { return static_cast<int>(checks.size()); }
  int passed() const {
    int n = 0;
    for (const auto& c : checks) n += (c.pass && !c.xfail) ? 1 : 0;
    return n;
  }
  int failed() const {
    int n = 0;
    for (const auto& c : checks) n += (!c.pass && !c.xfail) ? 1 : 0;
    return n;
  }
  int xfailed() const {
    int n = 0;
    for (const auto& c : checks) n += c.xfail ? 1 : 0;
    return n;
  }
  bool ok() const { return failed() == 0; }
};

inline const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> defaults{
      {"gram-identity", 1e-10},
      {"spectral-residual", 1e-12},
      {"reconstruction", 1e-9},
      {"riesz-plateau", 0.05},
      {"projector-identity", 1e-9},
      {"mode-partition", 0.0},
      {"compatibility", 1e-9},
      {"compatibility-flags", 0.5},
      {"harmonicity", 1e-11},
      {"fd-order", 0.2},
      {"boundary-conditions", 1e-12},
      {"trace-identity", 1e-12},
      {"trace-decay", 1e-15},
      {"hausdorff-young", 1e-8},
      {"parseval", 1e-9},
      {"apriori-finite", 1e6},
      {"apriori-scaling", 1e-12},
      {"apriori-refinement", 1e-3},
      {"decay-monotone", 1e-12},
      {"decay-rate", 0.01},
      {"strict-paper-defect", 1e-12},
  };
  return defaults;
}

inline double SuiteConfig::tol(const std::string& name) const {
  if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
  auto it = default_tolerances().find(name);
  if (it == default_tolerances().end())
    throw lookup_error("SuiteConfig: unknown check name '" + name + "'");
  return it->second;
}

inline void SuiteConfig::validate() const {
  if (catalog.empty())
    throw parameter_error("SuiteConfig: catalog subset must not be empty");
  if (N_list.empty() || p_list.empty() || hy_p_list.empty() || dims.empty())
    throw parameter_error("SuiteConfig: parameter lists must not be empty");
  for (const auto& [name, t] : tolerances) {
    if (default_tolerances().find(name) == default_tolerances().end())
      throw parameter_error("SuiteConfig: unknown tolerance override '" + name + "'");
    if (!(t >= 0.0))
      throw parameter_error("SuiteConfig: tolerance for '" + name + "' must be >= 0");
  }
  if (reconstruction_trials < 1 || grid_nx < 4 || grid_ny < 4 || !(xi > 0.0))
    throw parameter_error("SuiteConfig: bad sizes");
}

namespace detail {

inline void push(Report& rep, const SuiteConfig& cfg, const std::string& name,
                 const std::string& anchor, const std::string& inputs,
                 double measured, bool xfail = false) {
  CheckRecord rec;
  rec.name = name;
  rec.anchor = anchor;
  rec.inputs = inputs;
  rec.measured = measured;
  rec.tolerance = cfg.tol(name);
  rec.pass = measured <= rec.tolerance;
  rec.xfail = xfail;
  rep.checks.push_back(std::move(rec));
}

/// Growth of a ratio ladder relative to its value at the anchor index,
/// with a floor so identically-vanishing projections do not divide by 0.
inline double ladder_growth(const std::vector<double>& r, std::size_t anchor) {
  double growth = 0.0;
  for (std::size_t i = anchor + 1; i < r.size(); ++i)
    growth = std::max(growth, (r[i] - r[anchor]) / std::max(r[anchor], 1e-9));
  return growth;
}

inline std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return out;
}

}  // namespace detail

/**
 * \brief Execute every library invariant as a recorded check.
 *
 * Individual check failures are recorded, never abort the suite;
 * configuration errors abort. Runs each public operation of the basis and
 * solver modules at least once.
 */
inline Report run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const QuadratureRule rule = default_rule();
  Report rep;
  rep.quadrature = rule.describe();
  rep.convention = to_string(cfg.convention);
  rep.seed = cfg.seed;

  const int maxN = *std::max_element(cfg.N_list.begin(), cfg.N_list.end());

  // --- biorthogonality: Gram matrix vs identity -------------------------
  detail::push(rep, cfg, "gram-identity", "biorthogonality",
               "N=16, default rule",
               gram_identity_error(gram_matrix(16, rule)));

  // --- spectral problem: eigen/associated residuals ---------------------
  {
    std::vector<double> xs;
    xs.reserve(1024);
    for (int i = 0; i < 1024; ++i) xs.push_back(two_pi * i / 1023);
    double worst = 0.0;
    for (int n = 1; n <= 64; ++n) {
      auto [r1, r2] = spectral_residual(n, xs);
      worst = std::max({worst, r1, r2});
    }
    detail::push(rep, cfg, "spectral-residual", "spectral-problem",
                 "n=1..64, 1024-point grid", worst);
  }

  // --- exactness on the span: random finite combinations ----------------
  {
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> dim_pick(0, cfg.dims.size() - 1);
    std::uniform_int_distribution<int> order_pick(1, 12);
    double worst = 0.0;
    for (int trial = 0; trial < cfg.reconstruction_trials; ++trial) {
      const int d = cfg.dims[dim_pick(rng)];
      const int N = order_pick(rng);
      RootCoefficients rc = RootCoefficients::zeros(d, N);
      for (int c = 0; c < d; ++c) {
        rc.a0[c] = coeff(rng);
        for (int k = 0; k < N; ++k) {
          rc.a[k][c] = coeff(rng);
          rc.b[k][c] = coeff(rng);
        }
      }
      const VectorFunction g = combination_function(rc, "trial");
      const RootCoefficients back = root_coeffs(g, N, rule);
      for (int i = 0; i < 512; ++i) {
        const double x = two_pi * i / 511;
        const Vec u = reconstruct(back, x);
        const Vec v = g(x);
        for (int c = 0; c < d; ++c)
          worst = std::max(worst, std::abs(u[c] - v[c]));
      }
    }
    detail::push(rep, cfg, "reconstruction", "basis-expansion",
                 std::to_string(cfg.reconstruction_trials) +
                     " seeded random combinations, d<=4, N<=12, 512-grid",
                 worst);
  }

  // --- Riesz property: projector norm plateau ---------------------------
  {
    const std::vector<int> ladder{8, 16, 32, 64, 128, 256};
    const QuadratureRule fine = rule_for_modes(ladder.back());
    double worst = 0.0;
    std::string worst_case = "-";
    for (const auto& name : cfg.catalog) {
      const VectorFunction f = catalog(name, 1);
      const RootCoefficients full = root_coeffs(f, ladder.back(), fine);
      for (double p : cfg.p_list) {
        const double fnorm = lp_norm(f, p, fine);
        for (bool cos_side : {true, false}) {
          std::vector<double> ratios;
          for (int n : ladder) {
            RootCoefficients part = full.truncated(n);
            if (cos_side)
              for (auto& bk : part.b) bk.assign(part.dim, 0.0);
            else {
              part.a0.assign(part.dim, 0.0);
              for (auto& ak : part.a) ak.assign(part.dim, 0.0);
            }
            const double pn =
                lp_norm(combination_function(std::move(part), "partial"), p, fine);
            ratios.push_back(fnorm > 0.0 ? pn / fnorm : 0.0);
          }
          const double growth = detail::ladder_growth(ratios, 3);  // anchor n=64
          if (growth > worst) {
            worst = growth;
            worst_case = name + (cos_side ? " cos" : " sin") +
                         " p=" + std::to_string(p);
          }
        }
      }
    }
    detail::push(rep, cfg, "riesz-plateau", "projector-bound",
                 "n=8..256 vs n=64, worst: " + worst_case, worst);
  }

  // --- projector operators reproduce their own modes ---------------------
  {
    const VectorFunction pc = projector_cos(catalog("cos_2", 1), 2, rule);
    const VectorFunction ps = projector_sin(catalog("xsin_3", 1), 3, rule);
    double worst = 0.0;
    for (int i = 0; i < 256; ++i) {
      const double x = two_pi * i / 255;
      worst = std::max(worst, std::abs(pc(x)[0] - std::cos(2 * x)));
      worst = std::max(worst, std::abs(ps(x)[0] - x * std::sin(3 * x)));
    }
    detail::push(rep, cfg, "projector-identity", "projector-bound",
                 "P_2^c cos_2 and P_3^s xsin_3 reproduce the data", worst);
  }

  // --- Riesz projections: mode partition --------------------------------
  {
    double worst = 0.0;
    for (int d : cfg.dims) {
      const VectorFunction f = catalog("combo", d);
      const TrigCoefficients tc = trig_coeffs(f, 8, rule);
      const ComplexTrigCoefficients whole = to_exponential(tc);
      for (int m : {-5, -1, 0, 2, 5}) {
        const auto plus = riesz_projection(tc, m, RieszSign::plus);
        const auto minus = riesz_projection(tc, m, RieszSign::minus);
        for (int n = -8; n <= 8; ++n)
          for (int c = 0; c < tc.dim; ++c)
            worst = std::max(worst, std::abs(plus.mode(n)[c] + minus.mode(n)[c] -
                                             whole.mode(n)[c]));
      }
    }
    detail::push(rep, cfg, "mode-partition", "riesz-projections",
                 "combo at each configured dim, m in {-5,-1,0,2,5}", worst);
  }

  // --- compatibility conditions ------------------------------------------
  {
    const auto repc = check_compatibility(catalog("xsin_3", 1), rule);
    const double worst = std::max(
        {euclidean_norm(repc.f_at_0), euclidean_norm(repc.f_at_2pi),
         euclidean_norm(repc.fprime_at_0), euclidean_norm(repc.weighted_integral)});
    detail::push(rep, cfg, "compatibility", "trace-hypotheses",
                 "xsin_3: all four quantities vanish", worst);

    // flag behaviour: cos_2 violates the endpoint value, one violates the
    // weighted integral (value 2*pi^2), xsin_3 satisfies everything
    const auto rep_cos = check_compatibility(catalog("cos_2", 1), rule);
    const auto rep_one = check_compatibility(catalog("one", 1), rule);
    const bool flags_ok =
        repc.all_satisfied() && !rep_cos.ok_value_at_0 &&
        rep_cos.ok_weighted_integral && !rep_one.ok_weighted_integral &&
        std::abs(rep_one.weighted_integral[0] - 2.0 * std::numbers::pi *
                                                    std::numbers::pi) < 1e-9;
    detail::push(rep, cfg, "compatibility-flags", "trace-hypotheses",
                 "xsin_3 clean; cos_2 endpoint flagged; one weighted=2pi^2",
                 flags_ok ? 0.0 : 1.0);
  }

  // --- harmonicity of solve outputs --------------------------------------
  {
    const StripGrid grid = make_strip_grid(cfg.grid_nx, cfg.grid_ny, cfg.xi);
    double worst = 0.0;
    for (const auto& name : cfg.catalog)
      for (int N : cfg.N_list) {
        const HarmonicSolution sol =
            solve(catalog(name, 1), N, rule_for_modes(N), cfg.convention);
        for (double x : grid.xs)
          for (double y : grid.ys)
            worst = std::max(worst, euclidean_norm(laplacian(sol, x, y)));
      }
    detail::push(rep, cfg, "harmonicity", "laplace-equation",
                 "catalog x N_list, " + std::to_string(cfg.grid_nx) + "x" +
                     std::to_string(cfg.grid_ny) + " grid on [0,2pi]x(0," +
                     std::to_string(cfg.xi) + "]",
                 worst, cfg.convention == SeriesConvention::strict_paper);
  }

  // --- independent 5-point-stencil oracle: observed order ~ 2 ------------
  {
    const HarmonicSolution sol = solve(catalog("xsin_3", 1), 8, rule);
    const auto pts = fd_probe_points();
    std::vector<std::pair<double, double>> pairs;
    for (double h : {0.16, 0.08, 0.04, 0.02})
      pairs.emplace_back(h, fd_pointset_residual(sol, h, pts));
    const double slope = convergence_order(pairs);
    detail::push(rep, cfg, "fd-order", "laplace-equation",
                 "5-point stencil, h=0.16..0.02, slope=" + std::to_string(slope),
                 std::abs(slope - 2.0));
  }

  // --- lateral boundary conditions ---------------------------------------
  {
    const std::vector<double> ys{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
    double worst = 0.0;
    for (const auto& name : cfg.catalog) {
      const HarmonicSolution sol = solve(catalog(name, 1), maxN, rule_for_modes(maxN));
      const auto [nonlocal, flux] = boundary_residuals(sol, ys);
      worst = std::max({worst, nonlocal, flux});
    }
    detail::push(rep, cfg, "boundary-conditions", "nonlocal-conditions",
                 "catalog solutions, ys in {0.1..10}", worst);
  }

  // --- trace at y = 0 and decay toward the datum -------------------------
  {
    double worst = 0.0;
    for (const auto& name : cfg.catalog) {
      const VectorFunction f = catalog(name, 1);
      const HarmonicSolution sol = solve(f, maxN, rule_for_modes(maxN));
      worst = std::max(worst, trace_error(sol, f, 0.0, 2.0, rule));
    }
    detail::push(rep, cfg, "trace-identity", "trace-condition",
                 "catalog, y=0 against the reconstruction", worst);

    const VectorFunction f = catalog("xsin_3", 1);
    const HarmonicSolution sol = solve(f, 8, rule);
    const double e1 = trace_error(sol, f, 1.0, 2.0, rule);
    const double e01 = trace_error(sol, f, 0.1, 2.0, rule);
    const double e001 = trace_error(sol, f, 0.01, 2.0, rule);
    detail::push(rep, cfg, "trace-decay", "trace-condition",
                 "xsin_3, y in {1, 0.1, 0.01}: errors decrease",
                 std::max(0.0, std::max(e01 - e1, e001 - e01)));
  }

  // --- Hausdorff-Young inequality -----------------------------------------
  {
    double violation = 0.0;
    for (const auto& name : cfg.catalog)
      for (double p : cfg.hy_p_list) {
        const double gap =
            hausdorff_young_gap(catalog(name, 1), p, 32, rule_for_modes(32));
        violation = std::max(violation, -gap);
      }
    detail::push(rep, cfg, "hausdorff-young", "coefficient-inequality",
                 "catalog x p in {1.25, 1.5, 2}, N=32",
                 std::max(0.0, violation));
    detail::push(rep, cfg, "parseval", "coefficient-inequality",
                 "cos_2, p=2: equality case",
                 std::abs(hausdorff_young_gap(catalog("cos_2", 1), 2.0, 8, rule)));
  }

  // --- a-priori estimate ---------------------------------------------------
  {
    const NormParams params(2.0, cfg.xi);
    const StripGrid grid = make_strip_grid(cfg.grid_nx + 1, cfg.grid_ny + 1, cfg.xi);
    double cap = 0.0, scaling = 0.0, refinement = 0.0;
    for (const auto& name : cfg.catalog) {
      if (name == "zero") continue;  // degenerate by contract
      const VectorFunction f = catalog(name, 1);
      const HarmonicSolution sol = solve(f, 16, rule);
      const double r = apriori_ratio(f, sol, params, rule, grid);
      cap = std::max(cap, std::isfinite(r) ? r : 1e300);
      const VectorFunction f3 = scaled(f, 3.0);
      const HarmonicSolution sol3 = solve(f3, 16, rule);
      scaling = std::max(scaling,
                         std::abs(apriori_ratio(f3, sol3, params, rule, grid) / r - 1.0));
      const QuadratureRule fine = refined(rule, 2);
      const HarmonicSolution sol_f = solve(f, 16, fine);
      const StripGrid grid_f =
          make_strip_grid(2 * cfg.grid_nx + 1, 2 * cfg.grid_ny + 1, cfg.xi);
      refinement = std::max(
          refinement, std::abs(apriori_ratio(f, sol_f, params, fine, grid_f) / r - 1.0));
    }
    detail::push(rep, cfg, "apriori-finite", "a-priori-estimate",
                 "catalog \\ zero, p=2: largest ratio", cap);
    detail::push(rep, cfg, "apriori-scaling", "a-priori-estimate",
                 "ratio(3f)/ratio(f) - 1", scaling);
    detail::push(rep, cfg, "apriori-refinement", "a-priori-estimate",
                 "rule and grid refined 2x", refinement);
  }

  // --- decay in y -----------------------------------------------------------
  {
    double increase = 0.0;
    for (const auto& name : {std::string("cos_2"), std::string("xsin_3")}) {
      const HarmonicSolution sol = solve(catalog(name, 1), 8, rule);
      const auto ys = detail::log_spaced(0.01, 10.0, 16);
      double prev = -1.0;
      for (double y : ys) {
        VectorFunction slice(1, "slice",
                             [&sol, y](double x) { return eval_solution(sol, x, y); });
        const double n = lp_norm(slice, 2.0, rule);
        if (prev >= 0.0) increase = std::max(increase, n - prev);
        prev = n;
      }
    }
    detail::push(rep, cfg, "decay-monotone", "solution-decay",
                 "a0-free catalog data, log grid y in [0.01, 10]", increase);

    // pure eigenfunction datum: || u(.,y) || = e^{-3y} sqrt(pi), slope -3
    const HarmonicSolution sol = solve(catalog("cos_3", 1), 8, rule);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 13; ++i) {
      const double y = 2.0 + 3.0 * i / 12.0;
      VectorFunction slice(1, "slice",
                           [&sol, y](double x) { return eval_solution(sol, x, y); });
      pts.emplace_back(y, lp_norm(slice, 2.0, rule));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [y, v] : pts) {
      sx += y;
      sy += std::log(v);
      sxx += y * y;
      sxy += y * std::log(v);
    }
    const double slope =
        (pts.size() * sxy - sx * sy) / (pts.size() * sxx - sx * sx);
    detail::push(rep, cfg, "decay-rate", "solution-decay",
                 "cos_3: log-norm slope over y in [2,5], slope=" +
                     std::to_string(slope),
                 std::abs(slope + 3.0));
  }

  // --- documented defect of the strict-paper convention ---------------------
  if (cfg.convention == SeriesConvention::harmonic_consistent) {
    const HarmonicSolution sol =
        solve(catalog("xsin_3", 1), 8, rule, SeriesConvention::strict_paper);
    double residual = 0.0;
    const StripGrid grid = make_strip_grid(33, 33, cfg.xi);
    for (double x : grid.xs)
      for (double y : grid.ys)
        residual = std::max(residual, euclidean_norm(laplacian(sol, x, y)));
    detail::push(rep, cfg, "strict-paper-defect", "series-convention",
                 "xsin_3 under strict-paper: sup-residual=" +
                     std::to_string(residual) + " (expected >= 0.1)",
                 std::max(0.0, 0.1 - residual), /*xfail=*/true);
  }

  return rep;
}

}  // namespace stripspec::diag

#endif  // STRIPSPEC_SUITE_HPP

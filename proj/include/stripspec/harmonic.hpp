// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_HARMONIC_HPP
#define STRIPSPEC_HARMONIC_HPP

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stripspec/coefficients.hpp"
#include "stripspec/errors.hpp"
#include "stripspec/norms.hpp"
#include "stripspec/quadrature.hpp"

namespace stripspec {

/**
 * Series convention for the y cos(nx) term.
 *
 * harmonic_consistent pairs the y cos(nx) and x sin(nx) terms with the SAME
 * coefficient b_n = <f, v_n^s>; each block
 *   e^{-ny} [ a_n cos(nx) + b_n ( y cos(nx) + x sin(nx) ) ]
 * is then exactly harmonic, because
 *   Lap[ y e^{-ny} cos(nx) ] = -2n e^{-ny} cos(nx)
 *   Lap[ x e^{-ny} sin(nx) ] = +2n e^{-ny} cos(nx).
 * strict_paper instead scales the y-term coefficient by pi/2 (a 1/2pi
 * functional in place of the 1/pi^2 weight), which breaks the cancellation;
 * it is kept so the defect is demonstrable.
 */
enum class SeriesConvention { harmonic_consistent, strict_paper };

inline std::string to_string(SeriesConvention c) {
  return c == SeriesConvention::harmonic_consistent ? "harmonic-consistent"
                                                    : "strict-paper";
}

inline SeriesConvention convention_from_string(const std::string& s) {
  if (s == "harmonic-consistent") return SeriesConvention::harmonic_consistent;
  if (s == "strict-paper") return SeriesConvention::strict_paper;
  throw parameter_error("unknown series convention '" + s + "'");
}

/**
 * \brief Truncated series solution of the half-strip problem
 *   Lap u = 0 in (0,2pi) x (0,inf),   u(x,0) = f(x),
 *   u(0,y) = u(2pi,y),   du/dx(0,y) = 0,
 * represented by the trace expansion coefficients:
 *   u(x,y) = a0 + sum_n e^{-ny} [ (a_n + c_n y) cos(nx) + b_n x sin(nx) ].
 *
 * The constant mode is kept in the field, but a0 != 0 means the mixed
 * norm over the full (untruncated) strip diverges; `full_strip_integrable`
 * records that.
 */
struct HarmonicSolution {
  RootCoefficients coeffs;
  SeriesConvention convention = SeriesConvention::harmonic_consistent;
  bool full_strip_integrable = true;

  int dim() const { return coeffs.dim; }
  int order() const { return coeffs.order(); }

  /// Coefficient of the y e^{-ny} cos(nx) term for mode k.
  double y_term_coeff(int k, int c) const {
    const double b = coeffs.b[k - 1][c];
    return convention == SeriesConvention::harmonic_consistent
               ? b
               : 0.5 * std::numbers::pi * b;
  }

  /// Mode profiles: u(x,y) = u_0 + sum_k [ u_k(y) cos(kx) + v_k(y) x sin(kx) ].
  Vec mode_cos_profile(int k, double y) const {  // u_k(y)
    const double E = std::exp(-double(k) * y);
    Vec out(coeffs.dim);
    for (int c = 0; c < coeffs.dim; ++c)
      out[c] = E * (coeffs.a[k - 1][c] + y_term_coeff(k, c) * y);
    return out;
  }
  Vec mode_sin_profile(int k, double y) const {  // v_k(y)
    const double E = std::exp(-double(k) * y);
    Vec out(coeffs.dim);
    for (int c = 0; c < coeffs.dim; ++c) out[c] = E * coeffs.b[k - 1][c];
    return out;
  }
};

/// Trace-datum hypotheses: f(0), f(2pi), f'(0), and the weighted integral
/// of f against (2pi - x). All four are reported with pass flags; a failed
/// flag is a warning, not an error (the hypotheses are sufficient only).
struct CompatibilityReport {
  Vec f_at_0;
  Vec f_at_2pi;
  Vec fprime_at_0;
  Vec weighted_integral;
  double tol = 0.0;
  bool ok_value_at_0 = false;
  bool ok_value_at_2pi = false;
  bool ok_deriv_at_0 = false;
  bool ok_weighted_integral = false;

  bool all_satisfied() const {
    return ok_value_at_0 && ok_value_at_2pi && ok_deriv_at_0 &&
           ok_weighted_integral;
  }
};

inline CompatibilityReport check_compatibility(const VectorFunction& f,
                                               const QuadratureRule& rule,
                                               double tol = 1e-10) {
  CompatibilityReport rep;
  rep.tol = tol;
  rep.f_at_0 = f(0.0);
  rep.f_at_2pi = f(two_pi);
  rep.fprime_at_0 = f.has_derivatives() ? f.deriv1(0.0) : fd_deriv1(f, 0.0);
  VectorFunction weighted(
      f.dim(), f.name() + "*(2pi-x)",
      [f](double x) {
        Vec v = f(x);
        for (double& e : v) e *= (two_pi - x);
        return v;
      });
  rep.weighted_integral = integrate(weighted, rule);
  rep.ok_value_at_0 = euclidean_norm(rep.f_at_0) <= tol;
  rep.ok_value_at_2pi = euclidean_norm(rep.f_at_2pi) <= tol;
  rep.ok_deriv_at_0 = euclidean_norm(rep.fprime_at_0) <= tol;
  rep.ok_weighted_integral = euclidean_norm(rep.weighted_integral) <= tol;
  return rep;
}

/// Expand the trace datum and assemble the series solution. Compatibility
/// violations are recorded on the solution, never rejected.
inline HarmonicSolution solve(const VectorFunction& f, int N,
                              const QuadratureRule& rule,
                              SeriesConvention convention =
                                  SeriesConvention::harmonic_consistent,
                              double compat_tol = 1e-10) {
  if (N < 1) throw parameter_error("solve: N must be >= 1");
  HarmonicSolution sol;
  sol.coeffs = root_coeffs(f, N, rule);
  sol.convention = convention;
  sol.full_strip_integrable = euclidean_norm(sol.coeffs.a0) <= compat_tol;
  return sol;
}

/// u(x, y); the y = 0 trace is the same arithmetic path as reconstruct().
inline Vec eval_solution(const HarmonicSolution& sol, double x, double y) {
  Vec acc = sol.coeffs.a0;
  const int d = sol.dim();
  Vec cy(d);
  for (int k = 1; k <= sol.order(); ++k) {
    const double E = std::exp(-double(k) * y);
    const double ck = std::cos(k * x);
    const double xsk = x * std::sin(k * x);
    for (int c = 0; c < d; ++c) cy[c] = sol.y_term_coeff(k, c);
    detail::add_root_block(acc, sol.coeffs.a[k - 1], cy, sol.coeffs.b[k - 1],
                           E, y, ck, xsk);
  }
  return acc;
}

/**
 * \brief Partial derivative d^{ox+oy} u / dx^{ox} dy^{oy}, ox + oy <= 2,
 * by exact termwise differentiation of the series blocks.
 */
inline Vec eval_partial(const HarmonicSolution& sol, double x, double y,
                        int ox, int oy) {
  if (ox < 0 || oy < 0 || ox + oy > 2)
    throw capability_error("eval_partial: only derivatives up to order 2");
  if (ox == 0 && oy == 0) return eval_solution(sol, x, y);
  const int d = sol.dim();
  Vec acc(d, 0.0);
  for (int k = 1; k <= sol.order(); ++k) {
    const double n = k;
    const double E = std::exp(-n * y);
    const double C = std::cos(n * x);
    const double S = std::sin(n * x);
    for (int c = 0; c < d; ++c) {
      const double a = sol.coeffs.a[k - 1][c];
      const double b = sol.coeffs.b[k - 1][c];
      const double cc = sol.y_term_coeff(k, c);
      const double ay = a + cc * y;  // coefficient of cos after y-collection
      double t = 0.0;
      if (ox == 1 && oy == 0)
        t = -n * ay * S + b * (S + n * x * C);
      else if (ox == 0 && oy == 1)
        t = (-n * ay + cc) * C - n * b * x * S;
      else if (ox == 2 && oy == 0)
        t = -n * n * ay * C + b * (2.0 * n * C - n * n * x * S);
      else if (ox == 0 && oy == 2)
        t = (n * n * ay - 2.0 * n * cc) * C + n * n * b * x * S;
      else  // ox == 1 && oy == 1
        t = n * n * ay * S - n * cc * S - n * b * (S + n * x * C);
      acc[c] += E * t;
    }
  }
  return acc;
}

/// Analytic Laplacian of the represented field at one point.
inline Vec laplacian(const HarmonicSolution& sol, double x, double y) {
  Vec uxx = eval_partial(sol, x, y, 2, 0);
  const Vec uyy = eval_partial(sol, x, y, 0, 2);
  for (std::size_t c = 0; c < uxx.size(); ++c) uxx[c] += uyy[c];
  return uxx;
}

/**
 * \brief Residuals of the lateral boundary conditions over the given
 * heights: max ||u(0,y) - u(2pi,y)|| and max ||du/dx(0,y)||.
 */
inline std::pair<double, double> boundary_residuals(
    const HarmonicSolution& sol, std::span<const double> ys) {
  double nonlocal = 0.0, flux = 0.0;
  for (double y : ys) {
    Vec left = eval_solution(sol, 0.0, y);
    const Vec right = eval_solution(sol, two_pi, y);
    for (std::size_t c = 0; c < left.size(); ++c) left[c] -= right[c];
    nonlocal = std::max(nonlocal, euclidean_norm(left));
    flux = std::max(flux, euclidean_norm(eval_partial(sol, 0.0, y, 1, 0)));
  }
  return {nonlocal, flux};
}

/**
 * \brief L^p distance of the horizontal slice u(.,y) from the trace target:
 * at y = 0 the target is the reconstruction S_N f (zero up to rounding),
 * for y > 0 it is f itself.
 */
inline double trace_error(const HarmonicSolution& sol, const VectorFunction& f,
                          double y, double p, const QuadratureRule& rule) {
  if (y < 0.0) throw parameter_error("trace_error: y must be >= 0");
  VectorFunction diff(
      sol.dim(), "trace_diff",
      y == 0.0 ? VectorFunction::Evaluator([sol](double x) {
        Vec u = eval_solution(sol, x, 0.0);
        const Vec r = reconstruct(sol.coeffs, x);
        for (std::size_t c = 0; c < u.size(); ++c) u[c] -= r[c];
        return u;
      })
               : VectorFunction::Evaluator([sol, f, y](double x) {
                   Vec u = eval_solution(sol, x, y);
                   const Vec v = f(x);
                   for (std::size_t c = 0; c < u.size(); ++c) u[c] -= v[c];
                   return u;
                 }));
  return lp_norm(diff, p, rule);
}

/// Sampling grid on the truncated strip [0,2pi] x (0, xi].
struct StripGrid {
  std::vector<double> xs;
  std::vector<double> ys;
  double xi = 0.0;
};

inline StripGrid make_strip_grid(int nx, int ny, double xi) {
  if (nx < 2 || ny < 1) throw parameter_error("make_strip_grid: need nx >= 2, ny >= 1");
  if (!(xi > 0.0)) throw parameter_error("make_strip_grid: xi must be > 0");
  StripGrid g;
  g.xi = xi;
  g.xs.reserve(nx);
  g.ys.reserve(ny);
  for (int i = 0; i < nx; ++i) g.xs.push_back(two_pi * i / (nx - 1));
  for (int j = 1; j <= ny; ++j) g.ys.push_back(xi * j / ny);
  return g;
}

/**
 * \brief Mixed norm on the truncated strip:
 *   integral_0^xi || u(.,y) ||_{L^p(dx)} dy,
 * and with `derivatives` the full second-order version, summing the six
 * terms d^a u, |a| <= 2.
 *
 * The grid fixes the truncation height and sets a resolution floor; the
 * integrals themselves use composite Gauss rules (the inner rule always
 * resolves the solution's own modes). The strip is truncated at xi; the
 * neglected tail is O(e^{-xi}) for mean-zero data.
 */
inline double mixed_norm(const HarmonicSolution& sol, const NormParams& params,
                         const StripGrid& grid, bool derivatives = false) {
  if (std::abs(grid.xi - params.xi) > 1e-12 * std::max(1.0, params.xi))
    throw parameter_error("mixed_norm: grid.xi and params.xi disagree");
  const int x_panels =
      std::max({16, sol.order(), static_cast<int>(grid.xs.size()) / 8});
  const QuadratureRule x_rule =
      make_quadrature(QuadratureKind::gauss_composite, x_panels, 8);
  const int y_panels = std::max(4, static_cast<int>(grid.ys.size()) / 8);

  // Gauss nodes in y on [0, xi]
  std::vector<double> yr, wr;
  detail::gauss_legendre_reference(8, yr, wr);

  std::vector<std::pair<int, int>> orders;
  if (derivatives)
    orders = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  else
    orders = {{0, 0}};

  const double hy = params.xi / y_panels;
  double total = 0.0;
  for (int pan = 0; pan < y_panels; ++pan) {
    for (int i = 0; i < 8; ++i) {
      const double y = pan * hy + 0.5 * hy * (yr[i] + 1.0);
      const double wy = 0.5 * hy * wr[i];
      for (auto [ox, oy] : orders) {
        VectorFunction slice(sol.dim(), "slice",
                             [&sol, y, ox = ox, oy = oy](double x) {
                               return eval_partial(sol, x, y, ox, oy);
                             });
        total += wy * lp_norm(slice, params.p, x_rule);
      }
    }
  }
  return total;
}

/**
 * \brief Upper bound on the mixed-norm tail neglected by truncating the
 * strip at xi:
 *   integral_xi^inf ||u(.,y)||_{L^p} dy
 *     <= (2pi)^{1/p} sum_n e^{-n xi}/n [ ||a_n|| + (xi + 1/n)||c_n|| + 2pi ||b_n|| ],
 * from ||cos nx||_p <= (2pi)^{1/p}, ||x sin nx||_p <= 2pi (2pi)^{1/p} and
 * the exact exponential y-integrals. The constant mode is excluded: with
 * a0 != 0 the tail is infinite and the solution is already flagged.
 */
inline double mixed_norm_tail_bound(const HarmonicSolution& sol, double p,
                                    double xi) {
  if (!(xi > 0.0)) throw parameter_error("mixed_norm_tail_bound: xi must be > 0");
  double tail = 0.0;
  for (int k = 1; k <= sol.order(); ++k) {
    const double n = k;
    double na = 0.0, nb = 0.0, nc = 0.0;
    for (int c = 0; c < sol.dim(); ++c) {
      na += sol.coeffs.a[k - 1][c] * sol.coeffs.a[k - 1][c];
      nb += sol.coeffs.b[k - 1][c] * sol.coeffs.b[k - 1][c];
      const double yc = sol.y_term_coeff(k, c);
      nc += yc * yc;
    }
    tail += std::exp(-n * xi) / n *
            (std::sqrt(na) + (xi + 1.0 / n) * std::sqrt(nc) +
             two_pi * std::sqrt(nb));
  }
  return std::pow(two_pi, 1.0 / p) * tail;
}

/**
 * \brief Ratio behind the a-priori estimate: mixed second-order norm of the
 * solution on the truncated strip over the second-order interval norm of
 * the datum. Scale-invariant; throws degenerate_input_error for zero data.
 */
inline double apriori_ratio(const VectorFunction& f,
                            const HarmonicSolution& sol,
                            const NormParams& params,
                            const QuadratureRule& rule, const StripGrid& grid) {
  const double denom = sobolev2_norm(f, params.p, rule, true);
  if (denom == 0.0)
    throw degenerate_input_error("apriori_ratio: zero trace datum");
  return mixed_norm(sol, params, grid, true) / denom;
}

}  // namespace stripspec

#endif  // STRIPSPEC_HARMONIC_HPP

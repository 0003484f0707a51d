// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_QUADRATURE_HPP
#define STRIPSPEC_QUADRATURE_HPP

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "stripspec/errors.hpp"
#include "stripspec/vector_function.hpp"

namespace stripspec {

enum class QuadratureKind { gauss_composite, trapezoid_periodic };

inline std::string to_string(QuadratureKind k) {
  return k == QuadratureKind::gauss_composite ? "gauss_composite"
                                              : "trapezoid_periodic";
}

/**
 * \brief Nodes and positive weights on [0, 2*pi].
 *
 * Every coefficient functional and interval norm in the library integrates
 * against one of these rules.
 */
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  QuadratureKind kind = QuadratureKind::gauss_composite;
  int panels = 0;
  int order = 0;

  /// Highest polynomial degree integrated exactly.
  int exactness() const {
    return kind == QuadratureKind::gauss_composite ? 2 * order - 1 : 1;
  }

  std::string describe() const {
    return to_string(kind) + " panels=" + std::to_string(panels) +
           " order=" + std::to_string(order);
  }
};

namespace detail {

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
/// The asymptotic Chebyshev guess converges in a handful of steps.
inline void gauss_legendre_reference(int n, std::vector<double>& x,
                                     std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence (k+1)P_{k+1} = (2k+1)t P_k - k P_{k-1}
      double p0 = 1.0, p1 = t;
      for (int k = 1; k < n; ++k) {
        double p2 = ((2 * k + 1) * t * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    double wi = 2.0 / ((1.0 - t * t) * dp * dp);
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
}

}  // namespace detail

/**
 * \brief Build a quadrature rule on [0, 2*pi].
 *
 * gauss_composite: `panels` equal panels, Gauss-Legendre of the given order
 * on each; exact on polynomials of degree <= 2*order-1.
 * trapezoid_periodic: `panels` equispaced nodes with equal weights 2*pi/panels
 * (the periodic trapezoid rule; spectrally accurate for smooth periodic
 * integrands). `order` is accepted for interface uniformity.
 */
inline QuadratureRule make_quadrature(QuadratureKind kind, int panels,
                                      int order) {
  if (panels < 1) throw parameter_error("make_quadrature: panels must be >= 1");
  if (order < 2) throw parameter_error("make_quadrature: order must be >= 2");

  QuadratureRule rule;
  rule.kind = kind;
  rule.panels = panels;
  rule.order = order;

  if (kind == QuadratureKind::trapezoid_periodic) {
    const double h = two_pi / panels;
    rule.nodes.reserve(panels);
    rule.weights.assign(panels, h);
    for (int i = 0; i < panels; ++i) rule.nodes.push_back(i * h);
    return rule;
  }

  std::vector<double> xr, wr;
  detail::gauss_legendre_reference(order, xr, wr);
  const double h = two_pi / panels;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * order);
  rule.weights.reserve(static_cast<std::size_t>(panels) * order);
  for (int p = 0; p < panels; ++p) {
    const double a = p * h;
    for (int i = 0; i < order; ++i) {
      rule.nodes.push_back(a + 0.5 * h * (xr[i] + 1.0));
      rule.weights.push_back(0.5 * h * wr[i]);
    }
  }
  return rule;
}

/// Same kind and order, `factor` times the panels.
inline QuadratureRule refined(const QuadratureRule& r, int factor) {
  return make_quadrature(r.kind, r.panels * factor, r.order);
}

/**
 * \brief The library default: composite Gauss-Legendre, 24 panels x order 10.
 *
 * Sized so that the worst biorthogonality integrand at truncation 16 (the
 * frequency-32 products with the linear weight) integrates to ~1e-14, two
 * orders under the tightest library tolerance.
 *
 * Environment overrides: STRIPSPEC_QUAD_KIND (gauss_composite |
 * trapezoid_periodic), STRIPSPEC_QUAD_PANELS, STRIPSPEC_QUAD_ORDER.
 */
inline QuadratureRule default_rule() {
  QuadratureKind kind = QuadratureKind::gauss_composite;
  int panels = 24;
  int order = 10;
  if (const char* k = std::getenv("STRIPSPEC_QUAD_KIND")) {
    std::string s(k);
    if (s == "trapezoid_periodic")
      kind = QuadratureKind::trapezoid_periodic;
    else if (s != "gauss_composite")
      throw parameter_error("STRIPSPEC_QUAD_KIND: unknown kind '" + s + "'");
  }
  if (const char* p = std::getenv("STRIPSPEC_QUAD_PANELS")) panels = std::atoi(p);
  if (const char* o = std::getenv("STRIPSPEC_QUAD_ORDER")) order = std::atoi(o);
  return make_quadrature(kind, panels, order);
}

/// A rule fine enough to resolve trig modes up to `max_mode` at spectral
/// accuracy: one panel per mode, never coarser than the default.
inline QuadratureRule rule_for_modes(int max_mode) {
  return make_quadrature(QuadratureKind::gauss_composite,
                         std::max(24, max_mode), 10);
}

}  // namespace stripspec

#endif  // STRIPSPEC_QUADRATURE_HPP

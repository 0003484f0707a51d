// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_NORMS_HPP
#define STRIPSPEC_NORMS_HPP

#include <cmath>

#include "stripspec/errors.hpp"
#include "stripspec/quadrature.hpp"
#include "stripspec/vector_function.hpp"

namespace stripspec {

/// Exponent p in (1, inf) and strip truncation height xi > 0.
struct NormParams {
  double p;
  double xi;

  NormParams(double p_, double xi_) : p(p_), xi(xi_) {
    if (!(p > 1.0)) throw parameter_error("NormParams: p must be > 1");
    if (!(xi > 0.0)) throw parameter_error("NormParams: xi must be > 0");
  }
};

/// Componentwise weighted sum over the rule's nodes.
inline Vec integrate(const VectorFunction& f, const QuadratureRule& rule) {
  Vec acc(f.dim(), 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    Vec v = f(rule.nodes[i]);
    const double w = rule.weights[i];
    for (int c = 0; c < f.dim(); ++c) acc[c] += w * v[c];
  }
  return acc;
}

/// ( integral of ||f(x)||^p dx )^(1/p), Euclidean norm on R^d.
inline double lp_norm(const VectorFunction& f, double p,
                      const QuadratureRule& rule) {
  if (!(p >= 1.0)) throw parameter_error("lp_norm: p must be >= 1");
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * std::pow(euclidean_norm(f(rule.nodes[i])), p);
  return std::pow(acc, 1.0 / p);
}

/**
 * \brief Second-order Sobolev norm ||f||_p + ||f'||_p + ||f''||_p.
 *
 * Uses the analytic derivative evaluators when present. With
 * `fd_fallback` set, missing derivatives are replaced by central finite
 * differences (h = 2*pi/4096, one-sided at the interval ends); without it
 * a missing derivative is a capability_error.
 */
inline double sobolev2_norm(const VectorFunction& f, double p,
                            const QuadratureRule& rule,
                            bool fd_fallback = false) {
  if (!(p >= 1.0)) throw parameter_error("sobolev2_norm: p must be >= 1");
  const VectorFunction* g = &f;
  VectorFunction fallback;
  if (!f.has_derivatives()) {
    if (!fd_fallback)
      throw capability_error(
          "sobolev2_norm: '" + f.name() +
          "' has no analytic derivatives (pass fd_fallback=true to allow "
          "finite differences)");
    fallback = with_fd_derivatives(f);
    g = &fallback;
  }
  double acc = lp_norm(*g, p, rule);
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double w = rule.weights[i];
    s1 += w * std::pow(euclidean_norm(g->deriv1(rule.nodes[i])), p);
    s2 += w * std::pow(euclidean_norm(g->deriv2(rule.nodes[i])), p);
  }
  return acc + std::pow(s1, 1.0 / p) + std::pow(s2, 1.0 / p);
}

}  // namespace stripspec

#endif  // STRIPSPEC_NORMS_HPP

// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_COEFFICIENTS_HPP
#define STRIPSPEC_COEFFICIENTS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "stripspec/errors.hpp"
#include "stripspec/quadrature.hpp"
#include "stripspec/root_system.hpp"
#include "stripspec/vector_function.hpp"

namespace stripspec {

/**
 * \brief Vector-valued coefficients against the root system.
 *
 * a0 pairs with the constant, a[k-1] with cos(kx), b[k-1] with x sin(kx),
 * k = 1..N. Each coefficient lives in R^d.
 */
struct RootCoefficients {
  int dim = 0;
  Vec a0;
  std::vector<Vec> a;
  std::vector<Vec> b;

  int order() const { return static_cast<int>(a.size()); }

  static RootCoefficients zeros(int dim, int N) {
    RootCoefficients rc;
    rc.dim = dim;
    rc.a0.assign(dim, 0.0);
    rc.a.assign(N, Vec(dim, 0.0));
    rc.b.assign(N, Vec(dim, 0.0));
    return rc;
  }

  /// Keep modes up to M only.
  RootCoefficients truncated(int M) const {
    if (M < 0 || M > order())
      throw parameter_error("RootCoefficients::truncated: bad order");
    RootCoefficients rc;
    rc.dim = dim;
    rc.a0 = a0;
    rc.a.assign(a.begin(), a.begin() + M);
    rc.b.assign(b.begin(), b.begin() + M);
    return rc;
  }
};

/// Coefficients against the trigonometric system {1, cos(kx), sin(kx)}.
struct TrigCoefficients {
  int dim = 0;
  Vec c0;
  std::vector<Vec> c;
  std::vector<Vec> s;

  int order() const { return static_cast<int>(c.size()); }
};

namespace detail {

/// f sampled once per node; trig factors are then scalar per mode.
struct SampledFunction {
  std::vector<Vec> values;  // values[i] = f(nodes[i])
  int dim;

  SampledFunction(const VectorFunction& f, const QuadratureRule& rule)
      : dim(f.dim()) {
    values.reserve(rule.nodes.size());
    for (double x : rule.nodes) values.push_back(f(x));
  }
};

}  // namespace detail

/**
 * \brief Fourier coefficients against the trigonometric system:
 *   c0 = (1/2pi) integral f,  c_k = (1/pi) integral f cos(kx),
 *   s_k = (1/pi) integral f sin(kx).
 */
inline TrigCoefficients trig_coeffs(const VectorFunction& f, int N,
                                    const QuadratureRule& rule) {
  if (N < 0) throw parameter_error("trig_coeffs: N must be >= 0");
  const detail::SampledFunction sf(f, rule);
  const int d = sf.dim;
  TrigCoefficients tc;
  tc.dim = d;
  tc.c0.assign(d, 0.0);
  tc.c.assign(N, Vec(d, 0.0));
  tc.s.assign(N, Vec(d, 0.0));
  constexpr double inv_pi = 1.0 / std::numbers::pi;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double w = rule.weights[i];
    const Vec& v = sf.values[i];
    for (int c = 0; c < d; ++c) tc.c0[c] += w * v[c] / two_pi;
    for (int k = 1; k <= N; ++k) {
      const double ck = inv_pi * w * std::cos(k * x);
      const double sk = inv_pi * w * std::sin(k * x);
      for (int c = 0; c < d; ++c) {
        tc.c[k - 1][c] += ck * v[c];
        tc.s[k - 1][c] += sk * v[c];
      }
    }
  }
  return tc;
}

/**
 * \brief Expansion coefficients against the root system, computed by
 * integrating against the biorthogonal weights:
 *   a0 = integral f v_0,  a_k = integral f v_k^c,  b_k = integral f v_k^s.
 */
inline RootCoefficients root_coeffs(const VectorFunction& f, int N,
                                    const QuadratureRule& rule) {
  if (N < 1) throw parameter_error("root_coeffs: N must be >= 1");
  const detail::SampledFunction sf(f, rule);
  const int d = sf.dim;
  RootCoefficients rc = RootCoefficients::zeros(d, N);
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double w = rule.weights[i];
    const Vec& v = sf.values[i];
    const double w0 = w * (two_pi - x) / (2.0 * pi2);
    for (int c = 0; c < d; ++c) rc.a0[c] += w0 * v[c];
    for (int k = 1; k <= N; ++k) {
      const double wc = w * (two_pi - x) * std::cos(k * x) / pi2;
      const double ws = w * std::sin(k * x) / pi2;
      for (int c = 0; c < d; ++c) {
        rc.a[k - 1][c] += wc * v[c];
        rc.b[k - 1][c] += ws * v[c];
      }
    }
  }
  return rc;
}

namespace detail {

/// One expansion block, shared by every evaluator that must agree with the
/// interval reconstruction bitwise (the solver's trace at y = 0 reuses it
/// with E = 1, y = 0).
inline void add_root_block(Vec& acc, const Vec& a, const Vec& cy, const Vec& b,
                           double E, double y, double ck, double xsk) {
  for (std::size_t c = 0; c < acc.size(); ++c)
    acc[c] += E * ((a[c] + cy[c] * y) * ck + b[c] * xsk);
}

}  // namespace detail

/// a0 + sum_k a_k cos(kx) + b_k x sin(kx).
inline Vec reconstruct(const RootCoefficients& rc, double x) {
  Vec acc = rc.a0;
  for (int k = 1; k <= rc.order(); ++k) {
    const double ck = std::cos(k * x);
    const double xsk = x * std::sin(k * x);
    detail::add_root_block(acc, rc.a[k - 1], rc.a[k - 1], rc.b[k - 1], 1.0, 0.0,
                           ck, xsk);
  }
  return acc;
}

/**
 * \brief The finite combination as a first-class function with analytic
 * derivatives. Used for catalog combinations, coefficient-file inputs, and
 * the partial-sum projectors.
 */
inline VectorFunction combination_function(RootCoefficients rc,
                                           std::string name = "combination") {
  const int d = rc.dim;
  auto value = [rc](double x) { return reconstruct(rc, x); };
  auto d1 = [rc](double x) {
    Vec acc(rc.dim, 0.0);
    for (int k = 1; k <= rc.order(); ++k) {
      const double n = k;
      const double dc = -n * std::sin(n * x);
      const double ds = std::sin(n * x) + n * x * std::cos(n * x);
      for (int c = 0; c < rc.dim; ++c)
        acc[c] += rc.a[k - 1][c] * dc + rc.b[k - 1][c] * ds;
    }
    return acc;
  };
  auto d2 = [rc](double x) {
    Vec acc(rc.dim, 0.0);
    for (int k = 1; k <= rc.order(); ++k) {
      const double n = k;
      const double dc = -n * n * std::cos(n * x);
      const double ds = 2.0 * n * std::cos(n * x) - n * n * x * std::sin(n * x);
      for (int c = 0; c < rc.dim; ++c)
        acc[c] += rc.a[k - 1][c] * dc + rc.b[k - 1][c] * ds;
    }
    return acc;
  };
  return VectorFunction(d, std::move(name), std::move(value), std::move(d1),
                        std::move(d2));
}

}  // namespace stripspec

#endif  // STRIPSPEC_COEFFICIENTS_HPP

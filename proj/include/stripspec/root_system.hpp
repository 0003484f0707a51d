// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_ROOT_SYSTEM_HPP
#define STRIPSPEC_ROOT_SYSTEM_HPP

#include <cmath>
#include <span>
#include <utility>

#include "stripspec/errors.hpp"
#include "stripspec/vector_function.hpp"

namespace stripspec {

// The expansion system on I = (0, 2*pi):
//   phi_0 = 1,  phi_n^c(x) = cos(nx),  phi_n^s(x) = x sin(nx)
// cos(nx) are the eigenfunctions of
//   phi'' + lambda phi = 0,  phi(0) = phi(2*pi),  phi'(0) = 0
// with lambda_n = n^2, and x sin(nx) the associated functions: with
// L = -d^2/dx^2,  (L - n^2) [x sin(nx)] = -2n cos(nx).
//
// The system is not orthogonal; expansion coefficients are integrals
// against the weight system
//   v_0(x) = (2*pi - x)/(2*pi^2),
//   v_n^c(x) = (2*pi - x) cos(nx)/pi^2,
//   v_n^s(x) = sin(nx)/pi^2,
// which is biorthogonal to it: <phi_i, v_j> = delta_ij.

enum class RootKind { constant, cosine, xsine };
enum class BioKind { constant, cosine, sine };

struct RootElement {
  RootKind kind;
  int n;

  RootElement(RootKind k, int n_) : kind(k), n(n_) {
    if (kind == RootKind::constant ? n != 0 : n < 1)
      throw parameter_error("RootElement: bad index for kind");
  }
};

struct BioElement {
  BioKind kind;
  int n;

  BioElement(BioKind k, int n_) : kind(k), n(n_) {
    if (kind == BioKind::constant ? n != 0 : n < 1)
      throw parameter_error("BioElement: bad index for kind");
  }
};

inline double eval_root(const RootElement& el, double x) {
  switch (el.kind) {
    case RootKind::constant: return 1.0;
    case RootKind::cosine: return std::cos(el.n * x);
    case RootKind::xsine: return x * std::sin(el.n * x);
  }
  return 0.0;
}

inline double eval_root_d1(const RootElement& el, double x) {
  const double n = el.n;
  switch (el.kind) {
    case RootKind::constant: return 0.0;
    case RootKind::cosine: return -n * std::sin(n * x);
    case RootKind::xsine: return std::sin(n * x) + n * x * std::cos(n * x);
  }
  return 0.0;
}

inline double eval_root_d2(const RootElement& el, double x) {
  const double n = el.n;
  switch (el.kind) {
    case RootKind::constant: return 0.0;
    case RootKind::cosine: return -(n * n) * std::cos(n * x);
    case RootKind::xsine:
      return 2.0 * n * std::cos(n * x) - n * n * (x * std::sin(n * x));
  }
  return 0.0;
}

inline double eval_bio(const BioElement& el, double x) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  switch (el.kind) {
    case BioKind::constant: return (two_pi - x) / (2.0 * pi2);
    case BioKind::cosine: return (two_pi - x) * std::cos(el.n * x) / pi2;
    case BioKind::sine: return std::sin(el.n * x) / pi2;
  }
  return 0.0;
}

/**
 * \brief Pointwise residuals certifying the spectral identities for index n.
 *
 * Returns the grid maxima of
 *   | (phi_n^c)'' + n^2 phi_n^c |                      (eigenfunction)
 *   | -(phi_n^s)'' - n^2 phi_n^s + 2n phi_n^c |        (associated function)
 * using the analytic second derivatives; both vanish to rounding. The
 * second pins the associated-function relation with its exact constant,
 * (L - n^2 I)[x sin(nx)] = -2n cos(nx).
 */
inline std::pair<double, double> spectral_residual(int n,
                                                   std::span<const double> xs) {
  if (n < 1) throw parameter_error("spectral_residual: n must be >= 1");
  const RootElement ef(RootKind::cosine, n);
  const RootElement af(RootKind::xsine, n);
  const double nd = n;
  double r1 = 0.0, r2 = 0.0;
  for (double x : xs) {
    const double e = eval_root_d2(ef, x) + (nd * nd) * eval_root(ef, x);
    const double a = -eval_root_d2(af, x) +
                     (2.0 * nd * eval_root(ef, x) -
                      nd * nd * eval_root(af, x));
    r1 = std::max(r1, std::abs(e));
    r2 = std::max(r2, std::abs(a));
  }
  return {r1, r2};
}

}  // namespace stripspec

#endif  // STRIPSPEC_ROOT_SYSTEM_HPP

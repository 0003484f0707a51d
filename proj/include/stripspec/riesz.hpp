// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_RIESZ_HPP
#define STRIPSPEC_RIESZ_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "stripspec/coefficients.hpp"
#include "stripspec/errors.hpp"
#include "stripspec/norms.hpp"

namespace stripspec {

using Cplx = std::complex<double>;
using CVec = std::vector<Cplx>;

/**
 * \brief Trig coefficients over the complex scalars, stored as two-sided
 * exponential modes fhat(n), |n| <= N, each in C^d.
 *
 * For real input, fhat(n) = (c_n - i s_n)/2 and fhat(-n) = conj(fhat(n));
 * a Riesz projection zeroes half the modes, after which the coefficients
 * are genuinely complex. Evaluation is sum_n fhat(n) e^{inx}.
 */
struct ComplexTrigCoefficients {
  int dim = 0;
  int N = 0;
  std::vector<CVec> modes;  // modes[N + n] holds fhat(n), n = -N..N

  const CVec& mode(int n) const { return modes[static_cast<std::size_t>(N + n)]; }
  CVec& mode(int n) { return modes[static_cast<std::size_t>(N + n)]; }

  CVec eval(double x) const {
    CVec acc(dim, Cplx(0.0, 0.0));
    for (int n = -N; n <= N; ++n) {
      const Cplx e = std::polar(1.0, n * x);
      const CVec& m = mode(n);
      for (int c = 0; c < dim; ++c) acc[c] += m[c] * e;
    }
    return acc;
  }

  /// View back in trig form: c~_k = fhat(k)+fhat(-k), s~_k = i(fhat(k)-fhat(-k)).
  CVec trig_c0() const { return mode(0); }
  CVec trig_c(int k) const {
    CVec out(dim);
    for (int c = 0; c < dim; ++c) out[c] = mode(k)[c] + mode(-k)[c];
    return out;
  }
  CVec trig_s(int k) const {
    const Cplx i(0.0, 1.0);
    CVec out(dim);
    for (int c = 0; c < dim; ++c) out[c] = i * (mode(k)[c] - mode(-k)[c]);
    return out;
  }
};

/// Expand real trig coefficients into two-sided exponential modes.
inline ComplexTrigCoefficients to_exponential(const TrigCoefficients& tc) {
  ComplexTrigCoefficients ec;
  ec.dim = tc.dim;
  ec.N = tc.order();
  ec.modes.assign(2 * ec.N + 1, CVec(ec.dim, Cplx(0.0, 0.0)));
  for (int c = 0; c < ec.dim; ++c) ec.mode(0)[c] = Cplx(tc.c0[c], 0.0);
  for (int k = 1; k <= ec.N; ++k)
    for (int c = 0; c < ec.dim; ++c) {
      const double ck = tc.c[k - 1][c], sk = tc.s[k - 1][c];
      ec.mode(k)[c] = Cplx(0.5 * ck, -0.5 * sk);
      ec.mode(-k)[c] = Cplx(0.5 * ck, 0.5 * sk);
    }
  return ec;
}

enum class RieszSign { plus, minus };

/**
 * \brief Riesz projection of a trig coefficient set at cut m.
 *
 * plus keeps modes n >= m, minus keeps modes n < m; together they
 * partition the spectrum, so plus + minus returns the input exactly.
 */
inline ComplexTrigCoefficients riesz_projection(const TrigCoefficients& tc,
                                                int m, RieszSign sign) {
  const int N = tc.order();
  if (m < -N || m > N)
    throw range_error("riesz_projection: |m| exceeds truncation order");
  ComplexTrigCoefficients ec = to_exponential(tc);
  for (int n = -N; n <= N; ++n) {
    const bool keep = sign == RieszSign::plus ? (n >= m) : (n < m);
    if (!keep)
      for (int c = 0; c < ec.dim; ++c) ec.mode(n)[c] = Cplx(0.0, 0.0);
  }
  return ec;
}

/**
 * \brief Hausdorff-Young gap
 *   ||f||_{L^p(dx/2pi)} - ( sum_{|n|<=N} ||fhat(n)||^{p'} )^{1/p'},
 * p in (1,2], p' the conjugate exponent. Nonnegative up to quadrature and
 * truncation error; zero at the Parseval equality cases.
 */
inline double hausdorff_young_gap(const VectorFunction& f, double p, int N,
                                  const QuadratureRule& rule) {
  if (!(p > 1.0) || !(p <= 2.0))
    throw parameter_error("hausdorff_young_gap: p must lie in (1,2]");
  const double pc = p / (p - 1.0);
  // normalized-measure norm: (1/2pi integral ||f||^p dx)^{1/p}
  const double lhs = lp_norm(f, p, rule) / std::pow(two_pi, 1.0 / p);
  const ComplexTrigCoefficients ec = to_exponential(trig_coeffs(f, N, rule));
  double rhs = 0.0;
  for (int n = -N; n <= N; ++n) {
    double norm2 = 0.0;
    for (int c = 0; c < ec.dim; ++c) norm2 += std::norm(ec.mode(n)[c]);
    rhs += std::pow(norm2, 0.5 * pc);
  }
  return lhs - std::pow(rhs, 1.0 / pc);
}

}  // namespace stripspec

#endif  // STRIPSPEC_RIESZ_HPP

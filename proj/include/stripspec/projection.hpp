// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_PROJECTION_HPP
#define STRIPSPEC_PROJECTION_HPP

#include <string>
#include <vector>

#include "stripspec/coefficients.hpp"
#include "stripspec/errors.hpp"
#include "stripspec/quadrature.hpp"
#include "stripspec/root_system.hpp"

namespace stripspec {

/// Cosine partial sum P_n^c f = sum_{k<=n} <f, v_k^c> phi_k^c
/// (includes the constant mode k = 0).
inline VectorFunction projector_cos(const VectorFunction& f, int n,
                                    const QuadratureRule& rule) {
  if (n < 0) throw parameter_error("projector_cos: n must be >= 0");
  RootCoefficients rc = root_coeffs(f, std::max(n, 1), rule).truncated(n);
  for (auto& bk : rc.b) bk.assign(rc.dim, 0.0);
  return combination_function(std::move(rc),
                              "P" + std::to_string(n) + "c[" + f.name() + "]");
}

/// Sine partial sum P_n^s f = sum_{1<=k<=n} <f, v_k^s> phi_k^s.
inline VectorFunction projector_sin(const VectorFunction& f, int n,
                                    const QuadratureRule& rule) {
  if (n < 1) throw parameter_error("projector_sin: n must be >= 1");
  RootCoefficients rc = root_coeffs(f, n, rule);
  rc.a0.assign(rc.dim, 0.0);
  for (auto& ak : rc.a) ak.assign(rc.dim, 0.0);
  return combination_function(std::move(rc),
                              "P" + std::to_string(n) + "s[" + f.name() + "]");
}

/**
 * \brief Cross-Gram matrix <phi_i, v_j> over the ordered index set
 * {const, cos 1..N, x sin 1..N} x {const, cos 1..N, sin 1..N}.
 *
 * Biorthogonality says this is the identity; the deviation under a given
 * rule measures the combined basis/quadrature error.
 */
inline std::vector<std::vector<double>> gram_matrix(int N,
                                                    const QuadratureRule& rule) {
  if (N < 1) throw parameter_error("gram_matrix: N must be >= 1");
  const int m = 2 * N + 1;
  std::vector<RootElement> roots;
  std::vector<BioElement> bios;
  roots.reserve(m);
  bios.reserve(m);
  roots.emplace_back(RootKind::constant, 0);
  bios.emplace_back(BioKind::constant, 0);
  for (int k = 1; k <= N; ++k) roots.emplace_back(RootKind::cosine, k);
  for (int k = 1; k <= N; ++k) roots.emplace_back(RootKind::xsine, k);
  for (int k = 1; k <= N; ++k) bios.emplace_back(BioKind::cosine, k);
  for (int k = 1; k <= N; ++k) bios.emplace_back(BioKind::sine, k);

  const std::size_t q = rule.nodes.size();
  std::vector<std::vector<double>> rv(m, std::vector<double>(q));
  std::vector<std::vector<double>> bv(m, std::vector<double>(q));
  for (int i = 0; i < m; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      rv[i][j] = eval_root(roots[i], rule.nodes[j]);
      bv[i][j] = eval_bio(bios[i], rule.nodes[j]);
    }

  std::vector<std::vector<double>> g(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < q; ++t)
        acc += rule.weights[t] * rv[i][t] * bv[j][t];
      g[i][j] = acc;
    }
  return g;
}

/// Max |G - I| entry for a Gram matrix.
inline double gram_identity_error(const std::vector<std::vector<double>>& g) {
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j)
      err = std::max(err, std::abs(g[i][j] - (i == j ? 1.0 : 0.0)));
  return err;
}

}  // namespace stripspec

#endif  // STRIPSPEC_PROJECTION_HPP

// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_CATALOG_HPP
#define STRIPSPEC_CATALOG_HPP

#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "stripspec/coefficients.hpp"
#include "stripspec/errors.hpp"
#include "stripspec/vector_function.hpp"

namespace stripspec {

namespace detail {

/// exp(-1/(s(1-s))) on (0,1), 0 outside; value and two derivatives in s.
/// Below the underflow cutoff everything is exactly 0, which keeps the
/// rational prefactors from producing inf*0.
inline void mollifier(double s, double& m, double& m1, double& m2) {
  m = m1 = m2 = 0.0;
  if (s <= 1.5e-3 || s >= 1.0 - 1.5e-3) return;  // exp argument < -700
  const double u = 1.0 / s, v = 1.0 / (1.0 - s);
  m = std::exp(-u * v);
  const double q1 = u * u - v * v;        // d/ds [-1/(s(1-s))]
  const double q2 = -2.0 * (u * u * u + v * v * v);
  m1 = m * q1;
  m2 = m * (q1 * q1 + q2);
}

inline bool parse_indexed(const std::string& name, const std::string& prefix,
                          int& k) {
  if (name.rfind(prefix, 0) != 0) return false;
  const std::string tail = name.substr(prefix.size());
  if (tail.empty()) return false;
  for (char ch : tail)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  k = std::stoi(tail);
  return k >= 1;
}

/// Fixed coefficients of the "combo" catalog entry (order 4, any dim).
inline RootCoefficients combo_coefficients(int dim) {
  RootCoefficients rc = RootCoefficients::zeros(dim, 4);
  for (int j = 0; j < dim; ++j) {
    rc.a0[j] = 1.0 / (j + 2);
    for (int n = 1; n <= 4; ++n) {
      rc.a[n - 1][j] = ((n + j) % 2 == 0 ? 1.0 : -1.0) / (n + j + 1);
      rc.b[n - 1][j] = 1.0 / (n * n + j + 1);
    }
  }
  return rc;
}

}  // namespace detail

/**
 * \brief Named test functions on [0, 2*pi], all with analytic derivatives.
 *
 *   zero, one      constants
 *   cos_<k>        cos(kx), k >= 1
 *   xsin_<k>       x sin(kx), k >= 1
 *   combo          fixed finite expansion (order 4, per-component vectors)
 *   bump           smooth compactly supported mollifier, vanishing to all
 *                  orders at 0 and 2*pi
 *
 * Components of the scalar-defined entries are all equal; combo varies by
 * component. Unknown names raise lookup_error.
 */
inline VectorFunction catalog(const std::string& name, int dim) {
  if (dim < 1) throw parameter_error("catalog: dim must be >= 1");
  if (name == "zero")
    return from_scalar(
        dim, name, [](double) { return 0.0; }, [](double) { return 0.0; },
        [](double) { return 0.0; });
  if (name == "one")
    return from_scalar(
        dim, name, [](double) { return 1.0; }, [](double) { return 0.0; },
        [](double) { return 0.0; });
  int k = 0;
  if (detail::parse_indexed(name, "cos_", k)) {
    const double n = k;
    return from_scalar(
        dim, name, [n](double x) { return std::cos(n * x); },
        [n](double x) { return -n * std::sin(n * x); },
        [n](double x) { return -n * n * std::cos(n * x); });
  }
  if (detail::parse_indexed(name, "xsin_", k)) {
    const double n = k;
    return from_scalar(
        dim, name, [n](double x) { return x * std::sin(n * x); },
        [n](double x) { return std::sin(n * x) + n * x * std::cos(n * x); },
        [n](double x) {
          return 2.0 * n * std::cos(n * x) - n * n * x * std::sin(n * x);
        });
  }
  if (name == "combo")
    return combination_function(detail::combo_coefficients(dim), name);
  if (name == "bump") {
    // chain rule through s = x/(2*pi)
    constexpr double inv = 1.0 / two_pi;
    auto val = [](double x) {
      double m, m1, m2;
      detail::mollifier(x * inv, m, m1, m2);
      return m;
    };
    auto d1 = [](double x) {
      double m, m1, m2;
      detail::mollifier(x * inv, m, m1, m2);
      return m1 * inv;
    };
    auto d2 = [](double x) {
      double m, m1, m2;
      detail::mollifier(x * inv, m, m1, m2);
      return m2 * inv * inv;
    };
    return from_scalar(dim, name, val, d1, d2);
  }
  throw lookup_error("catalog: unknown function '" + name + "'");
}

/// The canonical suite set (indexed families appear with fixed indices).
inline std::vector<std::string> catalog_names() {
  return {"zero", "one", "cos_2", "xsin_3", "combo", "bump"};
}

inline bool is_catalog_name(const std::string& name) {
  int k = 0;
  return name == "zero" || name == "one" || name == "combo" ||
         name == "bump" || detail::parse_indexed(name, "cos_", k) ||
         detail::parse_indexed(name, "xsin_", k);
}

}  // namespace stripspec

#endif  // STRIPSPEC_CATALOG_HPP

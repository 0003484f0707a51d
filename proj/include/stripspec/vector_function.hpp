// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_VECTOR_FUNCTION_HPP
#define STRIPSPEC_VECTOR_FUNCTION_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "stripspec/errors.hpp"

namespace stripspec {

using Vec = std::vector<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Euclidean norm on R^d.
inline double euclidean_norm(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/**
 * \brief An R^d-valued function on the interval [0, 2*pi].
 *
 * Values are evaluable maps, not stored samples; grids are produced on
 * demand by the callers. Analytic first/second derivative evaluators are
 * optional. Instances are immutable after construction and evaluation is
 * pure, so concurrent reads are safe.
 */
class VectorFunction {
 public:
  using Evaluator = std::function<Vec(double)>;

  VectorFunction() = default;

  VectorFunction(int dim, std::string name, Evaluator value,
                 Evaluator deriv1 = {}, Evaluator deriv2 = {})
      : dim_(dim),
        name_(std::move(name)),
        value_(std::move(value)),
        deriv1_(std::move(deriv1)),
        deriv2_(std::move(deriv2)) {
    if (dim_ < 1) throw parameter_error("VectorFunction: dim must be >= 1");
    if (!value_) throw parameter_error("VectorFunction: missing evaluator");
  }

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  Vec operator()(double x) const { return value_(x); }

  bool has_derivatives() const {
    return static_cast<bool>(deriv1_) && static_cast<bool>(deriv2_);
  }

  Vec deriv1(double x) const {
    if (!deriv1_)
      throw capability_error("VectorFunction '" + name_ +
                             "': no first derivative evaluator");
    return deriv1_(x);
  }

  Vec deriv2(double x) const {
    if (!deriv2_)
      throw capability_error("VectorFunction '" + name_ +
                             "': no second derivative evaluator");
    return deriv2_(x);
  }

 private:
  int dim_ = 0;
  std::string name_;
  Evaluator value_;
  Evaluator deriv1_;
  Evaluator deriv2_;
};

/// Lift a scalar function (and optional derivatives) to d equal components.
inline VectorFunction from_scalar(int dim, std::string name,
                                  std::function<double(double)> f,
                                  std::function<double(double)> f1 = {},
                                  std::function<double(double)> f2 = {}) {
  auto lift = [dim](std::function<double(double)> g) -> VectorFunction::Evaluator {
    if (!g) return {};
    return [dim, g = std::move(g)](double x) { return Vec(dim, g(x)); };
  };
  return VectorFunction(dim, std::move(name), lift(std::move(f)),
                        lift(std::move(f1)), lift(std::move(f2)));
}

/// c * f, with derivatives scaled alongside when present.
inline VectorFunction scaled(const VectorFunction& f, double c) {
  auto wrap = [c, f](auto getter) -> VectorFunction::Evaluator {
    return [c, f, getter](double x) {
      Vec v = getter(f, x);
      for (double& e : v) e *= c;
      return v;
    };
  };
  VectorFunction::Evaluator d1, d2;
  if (f.has_derivatives()) {
    d1 = wrap([](const VectorFunction& g, double x) { return g.deriv1(x); });
    d2 = wrap([](const VectorFunction& g, double x) { return g.deriv2(x); });
  }
  return VectorFunction(
      f.dim(), f.name() + "_scaled",
      wrap([](const VectorFunction& g, double x) { return g(x); }), d1, d2);
}

/// f + g (dims must match); derivatives combined when both carry them.
inline VectorFunction sum(const VectorFunction& f, const VectorFunction& g) {
  if (f.dim() != g.dim())
    throw parameter_error("sum: dimension mismatch");
  auto combine = [f, g](auto getter) -> VectorFunction::Evaluator {
    return [f, g, getter](double x) {
      Vec a = getter(f, x);
      Vec b = getter(g, x);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      return a;
    };
  };
  VectorFunction::Evaluator d1, d2;
  if (f.has_derivatives() && g.has_derivatives()) {
    d1 = combine([](const VectorFunction& h, double x) { return h.deriv1(x); });
    d2 = combine([](const VectorFunction& h, double x) { return h.deriv2(x); });
  }
  return VectorFunction(
      f.dim(), f.name() + "+" + g.name(),
      combine([](const VectorFunction& h, double x) { return h(x); }), d1, d2);
}

/// Finite-difference step used by the derivative fallback. Sized so the
/// central-difference truncation (h^2/12) ||f''''|| stays below 1e-6
/// relative on the catalog, second-derivative norms included.
inline constexpr double fd_step = two_pi / 16384.0;

/// Central second-order differences, one-sided near the interval ends so
/// evaluation never leaves [0, 2*pi].
inline Vec fd_deriv1(const VectorFunction& f, double x, double h = fd_step) {
  if (x - h >= 0.0 && x + h <= two_pi) {
    Vec lo = f(x - h), hi = f(x + h);
    for (std::size_t i = 0; i < hi.size(); ++i) hi[i] = (hi[i] - lo[i]) / (2 * h);
    return hi;
  }
  double s = (x - h < 0.0) ? 1.0 : -1.0;  // forward at 0, backward at 2*pi
  Vec f0 = f(x), f1 = f(x + s * h), f2 = f(x + 2 * s * h);
  Vec out(f0.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = s * (-3.0 * f0[i] + 4.0 * f1[i] - f2[i]) / (2 * h);
  return out;
}

inline Vec fd_deriv2(const VectorFunction& f, double x, double h = fd_step) {
  if (x - h >= 0.0 && x + h <= two_pi) {
    Vec lo = f(x - h), mid = f(x), hi = f(x + h);
    for (std::size_t i = 0; i < hi.size(); ++i)
      hi[i] = (hi[i] - 2.0 * mid[i] + lo[i]) / (h * h);
    return hi;
  }
  double s = (x - h < 0.0) ? 1.0 : -1.0;
  Vec f0 = f(x), f1 = f(x + s * h), f2 = f(x + 2 * s * h), f3 = f(x + 3 * s * h);
  Vec out(f0.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (2.0 * f0[i] - 5.0 * f1[i] + 4.0 * f2[i] - f3[i]) / (h * h);
  return out;
}

/// Same function with finite-difference derivative evaluators attached,
/// for inputs that do not carry analytic ones.
inline VectorFunction with_fd_derivatives(const VectorFunction& f) {
  return VectorFunction(
      f.dim(), f.name(), [f](double x) { return f(x); },
      [f](double x) { return fd_deriv1(f, x); },
      [f](double x) { return fd_deriv2(f, x); });
}

}  // namespace stripspec

#endif  // STRIPSPEC_VECTOR_FUNCTION_HPP

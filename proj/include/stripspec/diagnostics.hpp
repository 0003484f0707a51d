// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_DIAGNOSTICS_HPP
#define STRIPSPEC_DIAGNOSTICS_HPP

#include <cmath>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "stripspec/errors.hpp"
#include "stripspec/harmonic.hpp"
#include "stripspec/vector_function.hpp"

namespace stripspec::diag {

/// Uniformly spaced samples of an R^d field on an nx x ny grid.
struct Grid2D {
  int nx = 0, ny = 0, dim = 0;
  std::vector<double> data;  // (i * ny + j) * dim + c

  Grid2D() = default;
  Grid2D(int nx_, int ny_, int dim_)
      : nx(nx_), ny(ny_), dim(dim_),
        data(static_cast<std::size_t>(nx_) * ny_ * dim_, 0.0) {}

  double& at(int i, int j, int c) {
    return data[(static_cast<std::size_t>(i) * ny + j) * dim + c];
  }
  double at(int i, int j, int c) const {
    return data[(static_cast<std::size_t>(i) * ny + j) * dim + c];
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data) m = std::max(m, std::abs(v));
    return m;
  }
};

/// Sample a field (x,y) -> R^d uniformly on [x0,x0+wx] x [y0,y0+wy].
template <typename Field>
Grid2D sample_field(Field&& u, int nx, int ny, int dim, double x0, double wx,
                    double y0, double wy) {
  Grid2D g(nx, ny, dim);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const Vec v = u(x0 + wx * i / (nx - 1), y0 + wy * j / (ny - 1));
      for (int c = 0; c < dim; ++c) g.at(i, j, c) = v[c];
    }
  return g;
}

/**
 * \brief Five-point stencil Laplacian of a sampled field.
 *
 * Returns the (nx-2) x (ny-2) interior; boundary cells have no stencil and
 * are absent from the result. Exact on quadratics, O(h^2) otherwise.
 */
inline Grid2D fd_laplacian(const Grid2D& samples, double hx, double hy) {
  if (samples.nx < 3 || samples.ny < 3)
    throw parameter_error("fd_laplacian: grid must be at least 3x3");
  if (!(hx > 0.0) || !(hy > 0.0))
    throw parameter_error("fd_laplacian: spacings must be positive");
  Grid2D out(samples.nx - 2, samples.ny - 2, samples.dim);
  const double ix2 = 1.0 / (hx * hx), iy2 = 1.0 / (hy * hy);
  for (int i = 1; i + 1 < samples.nx; ++i)
    for (int j = 1; j + 1 < samples.ny; ++j)
      for (int c = 0; c < samples.dim; ++c) {
        const double uxx = (samples.at(i + 1, j, c) - 2.0 * samples.at(i, j, c) +
                            samples.at(i - 1, j, c)) * ix2;
        const double uyy = (samples.at(i, j + 1, c) - 2.0 * samples.at(i, j, c) +
                            samples.at(i, j - 1, c)) * iy2;
        out.at(i - 1, j - 1, c) = uxx + uyy;
      }
  return out;
}

/**
 * \brief Observed order: least-squares slope of log(residual) vs log(h).
 * Needs at least 3 pairs, h strictly decreasing, residuals positive.
 */
inline double convergence_order(
    std::span<const std::pair<double, double>> pairs) {
  if (pairs.size() < 3)
    throw parameter_error("convergence_order: need at least 3 (h, residual) pairs");
  double prev_h = std::numeric_limits<double>::infinity();
  for (const auto& [h, r] : pairs) {
    if (!(h > 0.0) || h >= prev_h)
      throw parameter_error("convergence_order: h must be positive and strictly decreasing");
    if (!(r > 0.0))
      throw parameter_error("convergence_order: residuals must be positive");
    prev_h = h;
  }
  const double n = static_cast<double>(pairs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [h, r] : pairs) {
    const double lx = std::log(h), ly = std::log(r);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// FD Laplacian residual of a solution on an interior box, for one h.
/// Uses an equal spacing in both directions.
inline double fd_laplacian_residual(const HarmonicSolution& sol, double h,
                                    double x0, double y0, int cells) {
  const int n = cells + 1;
  Grid2D samples = sample_field(
      [&sol](double x, double y) { return eval_solution(sol, x, y); }, n, n,
      sol.dim(), x0, h * cells, y0, h * cells);
  return fd_laplacian(samples, h, h).max_abs();
}

/// Points used by the convergence-order checks: interior, away from zeros
/// of the fourth-derivative sum for the catalog data.
inline std::vector<std::pair<double, double>> fd_probe_points() {
  return {{2.0, 0.6}, {1.1, 1.2}, {4.3, 0.9}};
}

/// Max stencil residual over a fixed point set, one 3x3 stencil of spacing
/// h per point. Fixing the points keeps the observed order clean: the max
/// over a whole box wobbles as the maximizer moves between grids.
inline double fd_pointset_residual(
    const HarmonicSolution& sol, double h,
    std::span<const std::pair<double, double>> pts) {
  double worst = 0.0;
  for (const auto& [x0, y0] : pts)
    worst = std::max(worst, fd_laplacian_residual(sol, h, x0 - h, y0 - h, 2));
  return worst;
}

}  // namespace stripspec::diag

#endif  // STRIPSPEC_DIAGNOSTICS_HPP

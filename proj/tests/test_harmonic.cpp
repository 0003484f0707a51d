#include <catch.hpp>

#include "stripspec/catalog.hpp"
#include "stripspec/harmonic.hpp"

using namespace stripspec;

namespace {

const double pi = std::numbers::pi;

// closed form for the xsin_3 solution: u = e^{-3y} (y cos 3x + x sin 3x)
double golden_xsin3(double x, double y) {
  return std::exp(-3.0 * y) * (y * std::cos(3 * x) + x * std::sin(3 * x));
}

}  // namespace

TEST_CASE("compatibility report flags") {
  const auto rule = default_rule();
  const auto good = check_compatibility(catalog("xsin_3", 1), rule);
  CHECK(good.all_satisfied());
  CHECK(euclidean_norm(good.weighted_integral) < 1e-10);

  const auto cos2 = check_compatibility(catalog("cos_2", 1), rule);
  CHECK_FALSE(cos2.ok_value_at_0);
  CHECK(cos2.f_at_0[0] == 1.0);
  CHECK(cos2.ok_weighted_integral);  // int (2pi - x) cos 2x dx = 0

  const auto one = check_compatibility(catalog("one", 1), rule);
  CHECK_FALSE(one.ok_weighted_integral);
  CHECK(one.weighted_integral[0] == Approx(2.0 * pi * pi).epsilon(1e-12));

  // flags stay consistent with the stored quantities and tolerance
  for (const auto& r : {good, cos2, one}) {
    CHECK(r.ok_value_at_0 == (euclidean_norm(r.f_at_0) <= r.tol));
    CHECK(r.ok_value_at_2pi == (euclidean_norm(r.f_at_2pi) <= r.tol));
    CHECK(r.ok_deriv_at_0 == (euclidean_norm(r.fprime_at_0) <= r.tol));
    CHECK(r.ok_weighted_integral ==
          (euclidean_norm(r.weighted_integral) <= r.tol));
  }
}

TEST_CASE("solve: zero datum gives the zero field") {
  const auto rule = default_rule();
  const auto sol = solve(catalog("zero", 2), 6, rule);
  for (double x : {0.0, 1.0, 5.0})
    for (double y : {0.0, 0.7, 3.0}) CHECK(eval_solution(sol, x, y) == Vec{0.0, 0.0});
  CHECK(sol.full_strip_integrable);
  CHECK_THROWS_AS(solve(catalog("zero", 1), 0, rule), parameter_error);
}

TEST_CASE("solve: golden solution for xsin_3") {
  const auto rule = default_rule();
  const auto sol = solve(catalog("xsin_3", 1), 8, rule);
  CHECK(sol.coeffs.b[2][0] == Approx(1.0).margin(1e-12));
  CHECK(eval_solution(sol, 0.0, 1.0)[0] == Approx(std::exp(-3.0)).margin(1e-9));
  CHECK(eval_solution(sol, pi / 2, 0.0)[0] == Approx(-pi / 2).margin(1e-9));
  double worst = 0.0;
  for (int i = 0; i <= 32; ++i)
    for (int j = 0; j <= 32; ++j) {
      const double x = two_pi * i / 32, y = 5.0 * j / 32;
      worst = std::max(worst,
                       std::abs(eval_solution(sol, x, y)[0] - golden_xsin3(x, y)));
    }
  CHECK(worst < 1e-9);
  CHECK(sol.full_strip_integrable);
}

TEST_CASE("solve: pure eigenfunction datum cos_2") {
  const auto rule = default_rule();
  const auto sol = solve(catalog("cos_2", 1), 8, rule);
  CHECK(eval_solution(sol, pi, 1.0)[0] == Approx(std::exp(-2.0)).margin(1e-10));
  // d/dx u (0, y) = 2 e^{-2y} sin(0) = 0 exactly
  for (double y : {0.0, 0.5, 2.0})
    CHECK(eval_partial(sol, 0.0, y, 1, 0)[0] == 0.0);
}

TEST_CASE("constant mode is retained but flagged") {
  const auto rule = default_rule();
  const auto sol = solve(catalog("one", 1), 4, rule);
  CHECK_FALSE(sol.full_strip_integrable);
  CHECK(eval_solution(sol, 1.0, 10.0)[0] == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eval_partial derivative orders") {
  const auto rule = default_rule();
  const auto sol = solve(catalog("xsin_3", 1), 8, rule);
  CHECK(euclidean_norm(laplacian(sol, 1.0, 0.5)) < 1e-12);
  CHECK_THROWS_AS(eval_partial(sol, 1.0, 1.0, 2, 1), capability_error);
  CHECK_THROWS_AS(eval_partial(sol, 1.0, 1.0, 0, 3), capability_error);

  // cross-check du/dy against the closed form at a sample point
  const double x = 1.3, y = 0.8, h = 1e-6;
  const double fd = (golden_xsin3(x, y + h) - golden_xsin3(x, y - h)) / (2 * h);
  CHECK(eval_partial(sol, x, y, 0, 1)[0] == Approx(fd).margin(1e-8));
  const double fdxx = (golden_xsin3(x + h, y) - 2 * golden_xsin3(x, y) +
                       golden_xsin3(x - h, y)) / (h * h);
  CHECK(eval_partial(sol, x, y, 2, 0)[0] == Approx(fdxx).margin(1e-3));
}

TEST_CASE("boundary residuals vanish") {
  const auto rule = default_rule();
  const std::vector<double> ys{0.1, 1.0, 10.0};
  for (const char* name : {"xsin_3", "cos_2", "combo", "bump"}) {
    const auto sol = solve(catalog(name, 1), 12, rule);
    const auto [nonlocal, flux] = boundary_residuals(sol, ys);
    CHECK(nonlocal <= 1e-12);
    CHECK(flux <= 1e-12);
  }
  const auto zero_sol = solve(catalog("zero", 1), 4, rule);
  const auto [n0, f0] = boundary_residuals(zero_sol, ys);
  CHECK(n0 == 0.0);
  CHECK(f0 == 0.0);
}

TEST_CASE("trace error at y = 0 and decay toward the datum") {
  const auto rule = default_rule();
  const auto f = catalog("xsin_3", 1);
  const auto sol = solve(f, 8, rule);
  CHECK(trace_error(sol, f, 0.0, 2.0, rule) <= 1e-12);
  const double e1 = trace_error(sol, f, 1.0, 2.0, rule);
  const double e01 = trace_error(sol, f, 0.1, 2.0, rule);
  const double e001 = trace_error(sol, f, 0.01, 2.0, rule);
  CHECK(e1 > e01);
  CHECK(e01 > e001);
  const auto z = solve(catalog("zero", 1), 4, rule);
  for (double y : {0.0, 0.5, 2.0})
    CHECK(trace_error(z, catalog("zero", 1), y, 2.0, rule) == 0.0);
}

TEST_CASE("mixed norm closed form and tail") {
  const auto rule = default_rule();
  const auto sol = solve(catalog("cos_2", 1), 8, rule);
  // int_0^5 e^{-2y} sqrt(pi) dy = sqrt(pi) (1 - e^{-10}) / 2
  const NormParams np(2.0, 5.0);
  const auto grid = make_strip_grid(65, 65, 5.0);
  const double expect = std::sqrt(pi) * (1.0 - std::exp(-10.0)) / 2.0;
  CHECK(mixed_norm(sol, np, grid) == Approx(expect).margin(1e-6));

  const auto zsol = solve(catalog("zero", 1), 4, rule);
  CHECK(mixed_norm(zsol, np, grid) == 0.0);

  const auto sx = solve(catalog("xsin_3", 1), 8, rule);
  const double m10 = mixed_norm(sx, NormParams(2.0, 10.0), make_strip_grid(65, 65, 10.0));
  const double m20 = mixed_norm(sx, NormParams(2.0, 20.0), make_strip_grid(65, 129, 20.0));
  CHECK(std::abs(m20 - m10) < 1e-8);  // e^{-3 xi} tail

  // the reported tail bound dominates the actual truncation difference
  const double bound = mixed_norm_tail_bound(sx, 2.0, 10.0);
  CHECK(bound >= m20 - m10);
  CHECK(bound < 1e-8);
  CHECK_THROWS_AS(mixed_norm_tail_bound(sx, 2.0, 0.0), parameter_error);

  // second-order version: the six partials of e^{-2y} cos 2x have slice
  // norms {1,2,2,4,4,4} e^{-2y} sqrt(pi), so the sum integrates to
  // 17 sqrt(pi) (1 - e^{-10}) / 2 over y in (0,5)
  CHECK(mixed_norm(sol, np, grid, true) ==
        Approx(17.0 * std::sqrt(pi) * (1.0 - std::exp(-10.0)) / 2.0).epsilon(1e-6));

  CHECK_THROWS_AS(mixed_norm(sol, NormParams(2.0, 4.0), grid), parameter_error);
}

TEST_CASE("solution norm profile matches the closed form") {
  // || u(.,y) ||_2 e^{3y} = sqrt(pi y^2 - (pi/3) y + 4 pi^3/3 - pi/18)
  const auto rule = default_rule();
  const auto sol = solve(catalog("xsin_3", 1), 8, rule);
  const double C = 4.0 * pi * pi * pi / 3.0 - pi / 18.0;
  for (double y : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    VectorFunction slice(1, "slice",
                         [&sol, y](double x) { return eval_solution(sol, x, y); });
    const double got = lp_norm(slice, 2.0, rule) * std::exp(3.0 * y);
    const double expect = std::sqrt(pi * y * y - (pi / 3.0) * y + C);
    CHECK(got == Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("mode profiles of the golden solution") {
  // for f = x sin 3x: u_3(y) = y e^{-3y}, v_3(y) = e^{-3y}, others 0
  const auto sol = solve(catalog("xsin_3", 1), 8, default_rule());
  for (double y : {0.0, 0.5, 2.0}) {
    CHECK(sol.mode_cos_profile(3, y)[0] ==
          Approx(y * std::exp(-3.0 * y)).margin(1e-12));
    CHECK(sol.mode_sin_profile(3, y)[0] ==
          Approx(std::exp(-3.0 * y)).margin(1e-12));
    CHECK(std::abs(sol.mode_cos_profile(2, y)[0]) < 1e-12);
    CHECK(std::abs(sol.mode_sin_profile(5, y)[0]) < 1e-12);
  }
  // strict-paper scales only the y-term: u_3(y) picks up pi/2
  const auto sp = solve(catalog("xsin_3", 1), 8, default_rule(),
                        SeriesConvention::strict_paper);
  CHECK(sp.mode_cos_profile(3, 1.0)[0] ==
        Approx(0.5 * pi * std::exp(-3.0)).margin(1e-12));
  CHECK(sp.mode_sin_profile(3, 1.0)[0] == Approx(std::exp(-3.0)).margin(1e-12));
}

TEST_CASE("norm parameter validation") {
  CHECK_THROWS_AS(NormParams(1.0, 5.0), parameter_error);
  CHECK_THROWS_AS(NormParams(2.0, 0.0), parameter_error);
  CHECK_THROWS_AS(NormParams(0.5, -1.0), parameter_error);
  const NormParams ok(1.5, 2.0);
  CHECK(ok.p == 1.5);
}

TEST_CASE("linearity of the solve map") {
  const auto rule = default_rule();
  const auto f = catalog("cos_2", 1), g = catalog("xsin_3", 1);
  const double alpha = 2.5, beta = -1.25;
  const auto combo = sum(scaled(f, alpha), scaled(g, beta));
  const auto sc = solve(combo, 6, rule);
  const auto sf = solve(f, 6, rule), sg = solve(g, 6, rule);
  for (int k = 0; k < 6; ++k) {
    CHECK(sc.coeffs.a[k][0] ==
          Approx(alpha * sf.coeffs.a[k][0] + beta * sg.coeffs.a[k][0]).margin(1e-12));
    CHECK(sc.coeffs.b[k][0] ==
          Approx(alpha * sf.coeffs.b[k][0] + beta * sg.coeffs.b[k][0]).margin(1e-12));
  }
  CHECK(sc.coeffs.a0[0] ==
        Approx(alpha * sf.coeffs.a0[0] + beta * sg.coeffs.a0[0]).margin(1e-12));
}

TEST_CASE("strict-paper convention breaks harmonicity by the known amount") {
  const auto rule = default_rule();
  const auto sol = solve(catalog("xsin_3", 1), 8, rule, SeriesConvention::strict_paper);
  // Lap u = 2n (b_n - c_n) e^{-ny} cos(nx) with n = 3, b_3 = 1, c_3 = pi/2
  for (double x : {0.0, 0.7, 2.9})
    for (double y : {0.1, 0.5, 1.5}) {
      const double expect = 6.0 * (1.0 - pi / 2.0) * std::exp(-3.0 * y) * std::cos(3 * x);
      CHECK(laplacian(sol, x, y)[0] == Approx(expect).margin(1e-9));
    }
  double sup = 0.0;
  for (double x : {0.0, 0.5, 1.0, 2.0})
    for (double y : {0.1, 0.3, 0.7}) sup = std::max(sup, std::abs(laplacian(sol, x, y)[0]));
  CHECK(sup >= 0.1);
}

TEST_CASE("apriori ratio: finite, scale-invariant, refinement-stable") {
  const auto rule = default_rule();
  const NormParams np(2.0, 10.0);
  const auto grid = make_strip_grid(65, 65, 10.0);
  const auto f = catalog("xsin_3", 1);
  const auto sol = solve(f, 8, rule);
  const double r = apriori_ratio(f, sol, np, rule, grid);
  CHECK(std::isfinite(r));
  CHECK(r > 0.0);

  const auto f2 = scaled(f, -2.5);
  const auto sol2 = solve(f2, 8, rule);
  CHECK(apriori_ratio(f2, sol2, np, rule, grid) == Approx(r).epsilon(1e-12));

  const auto fine = refined(rule, 2);
  const auto solf = solve(f, 8, fine);
  const auto gridf = make_strip_grid(129, 129, 10.0);
  CHECK(apriori_ratio(f, solf, np, fine, gridf) == Approx(r).epsilon(1e-3));

  const auto z = catalog("zero", 1);
  const auto zsol = solve(z, 4, rule);
  CHECK_THROWS_AS(apriori_ratio(z, zsol, np, rule, grid), degenerate_input_error);
}

TEST_CASE("strip grid construction") {
  const auto g = make_strip_grid(65, 65, 5.0);
  CHECK(g.xs.front() == 0.0);
  CHECK(g.xs.back() == Approx(two_pi));
  CHECK(g.ys.front() > 0.0);
  CHECK(g.ys.back() == Approx(5.0));
  CHECK(g.ys[12] == 1.0);  // 5 * 13 / 65 is exact
  CHECK_THROWS_AS(make_strip_grid(1, 4, 1.0), parameter_error);
  CHECK_THROWS_AS(make_strip_grid(4, 4, 0.0), parameter_error);
}

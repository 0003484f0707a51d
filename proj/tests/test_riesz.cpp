#include <catch.hpp>

#include "stripspec/catalog.hpp"
#include "stripspec/riesz.hpp"

using namespace stripspec;

namespace {

VectorFunction cos2_plus_sin5(int dim = 1) {
  return from_scalar(dim, "cos2+sin5", [](double x) {
    return std::cos(2 * x) + std::sin(5 * x);
  });
}

}  // namespace

TEST_CASE("riesz projection of a constant") {
  const auto rule = default_rule();
  const auto tc = trig_coeffs(catalog("one", 1), 4, rule);
  const auto plus = riesz_projection(tc, 1, RieszSign::plus);
  for (double x : {0.0, 1.0, 4.0})
    CHECK(std::abs(plus.eval(x)[0]) < 1e-12);  // only mode 0 exists
}

TEST_CASE("riesz projection keeps the analytic half of cos x") {
  const auto rule = default_rule();
  const auto f = from_scalar(1, "cosx", [](double x) { return std::cos(x); });
  const auto plus = riesz_projection(trig_coeffs(f, 4, rule), 0, RieszSign::plus);
  for (double x : {0.3, 1.9, 5.5}) {
    const Cplx got = plus.eval(x)[0];
    // fhat(+1) = 1/2, so R_0^+ f = e^{ix}/2
    CHECK(got.real() == Approx(0.5 * std::cos(x)).margin(1e-12));
    CHECK(got.imag() == Approx(0.5 * std::sin(x)).margin(1e-12));
  }
}

TEST_CASE("plus and minus projections partition the modes exactly") {
  const auto rule = default_rule();
  const auto tc = trig_coeffs(cos2_plus_sin5(2), 6, rule);
  const auto whole = to_exponential(tc);
  for (int m = -5; m <= 5; ++m) {
    const auto plus = riesz_projection(tc, m, RieszSign::plus);
    const auto minus = riesz_projection(tc, m, RieszSign::minus);
    for (int n = -6; n <= 6; ++n)
      for (int c = 0; c < 2; ++c) {
        const Cplx sum = plus.mode(n)[c] + minus.mode(n)[c];
        CHECK(sum == whole.mode(n)[c]);  // exact: each mode kept once
      }
    for (double x : {0.4, 2.2}) {
      const Cplx sum = plus.eval(x)[0] + minus.eval(x)[0];
      CHECK(sum.real() == Approx(std::cos(2 * x) + std::sin(5 * x)).margin(1e-10));
      CHECK(std::abs(sum.imag()) < 1e-10);
    }
  }
  CHECK_THROWS_AS(riesz_projection(tc, 7, RieszSign::plus), range_error);
  CHECK_THROWS_AS(riesz_projection(tc, -7, RieszSign::minus), range_error);
}

TEST_CASE("exponential modes of real data are conjugate-symmetric") {
  const auto rule = default_rule();
  const auto ec = to_exponential(trig_coeffs(catalog("combo", 3), 5, rule));
  for (int n = 1; n <= 5; ++n)
    for (int c = 0; c < 3; ++c)
      CHECK(ec.mode(-n)[c] == std::conj(ec.mode(n)[c]));
}

TEST_CASE("hausdorff-young gap") {
  const auto rule = default_rule();
  // Parseval equality: f = cos 2x, p = 2, both sides 1/sqrt(2)
  CHECK(std::abs(hausdorff_young_gap(catalog("cos_2", 1), 2.0, 8, rule)) < 1e-9);
  CHECK(hausdorff_young_gap(catalog("zero", 1), 1.5, 8, rule) == 0.0);

  const auto f = from_scalar(1, "1+cosx", [](double x) { return 1.0 + std::cos(x); });
  CHECK(hausdorff_young_gap(f, 1.5, 8, rule) >= -1e-8);

  for (double p : {1.25, 1.5, 2.0})
    for (const char* name : {"one", "cos_2", "xsin_3", "bump"})
      CHECK(hausdorff_young_gap(catalog(name, 1), p, 32, rule_for_modes(32)) >=
            -1e-8);

  CHECK_THROWS_AS(hausdorff_young_gap(catalog("one", 1), 1.0, 8, rule),
                  parameter_error);
  CHECK_THROWS_AS(hausdorff_young_gap(catalog("one", 1), 2.5, 8, rule),
                  parameter_error);
}

#include <catch.hpp>

#include <random>

#include "stripspec/catalog.hpp"
#include "stripspec/diagnostics.hpp"
#include "stripspec/norms.hpp"

using namespace stripspec;

TEST_CASE("integrate basic values") {
  const auto rule = default_rule();
  CHECK(integrate(catalog("zero", 2), rule) == Vec{0.0, 0.0});
  CHECK(integrate(catalog("one", 1), rule)[0] == Approx(two_pi).epsilon(1e-13));
  // by parts: int_0^{2pi} x sin(3x) dx = -2*pi/3
  CHECK(integrate(catalog("xsin_3", 1), rule)[0] ==
        Approx(-two_pi / 3.0).margin(1e-12));
}

TEST_CASE("lp_norm reference values") {
  const auto rule = default_rule();
  CHECK(lp_norm(catalog("one", 1), 2.0, rule) ==
        Approx(std::sqrt(two_pi)).epsilon(1e-13));
  CHECK(lp_norm(catalog("cos_2", 1), 2.0, rule) ==
        Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(lp_norm(catalog("zero", 3), 1.5, rule) == 0.0);
  CHECK_THROWS_AS(lp_norm(catalog("one", 1), 0.5, rule), parameter_error);
}

TEST_CASE("lp_norm homogeneity and triangle inequality") {
  const auto rule = default_rule();
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  const std::vector<std::string> names{"one", "cos_2", "xsin_3", "combo", "bump"};
  for (double p : {1.5, 2.0, 3.0}) {
    for (const auto& name : names) {
      const auto f = catalog(name, 2);
      const double c = dist(rng);
      CHECK(lp_norm(scaled(f, c), p, rule) ==
            Approx(std::abs(c) * lp_norm(f, p, rule)).epsilon(1e-12));
    }
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        const auto f = catalog(names[i], 2);
        const auto g = catalog(names[j], 2);
        CHECK(lp_norm(sum(f, g), p, rule) <=
              lp_norm(f, p, rule) + lp_norm(g, p, rule) + 1e-10);
      }
  }
}

TEST_CASE("sobolev2_norm reference values") {
  const auto rule = default_rule();
  CHECK(sobolev2_norm(catalog("zero", 2), 2.0, rule) == 0.0);
  // f = cos 2x: ||f|| + ||f'|| + ||f''|| = (1 + 2 + 4) sqrt(pi)
  CHECK(sobolev2_norm(catalog("cos_2", 1), 2.0, rule) ==
        Approx(7.0 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("sobolev2_norm dual path: analytic vs finite differences") {
  const auto rule = default_rule();
  const auto f = catalog("xsin_3", 1);
  const double analytic = sobolev2_norm(f, 2.0, rule);
  const VectorFunction bare(1, "bare", [f](double x) { return f(x); });
  const double fd = sobolev2_norm(bare, 2.0, rule, true);
  CHECK(analytic > 0.0);
  CHECK(fd == Approx(analytic).epsilon(1e-6));
  CHECK_THROWS_AS(sobolev2_norm(bare, 2.0, rule), capability_error);
}

TEST_CASE("finite differences of catalog functions converge at order >= 1.9") {
  const std::vector<double> hs{1e-2, 5e-3, 2.5e-3, 1.25e-3};
  for (const auto& name : {"cos_2", "xsin_3", "combo", "bump"}) {
    const auto f = catalog(name, 1);
    std::vector<std::pair<double, double>> pairs1, pairs2;
    for (double h : hs) {
      double e1 = 0.0, e2 = 0.0;
      for (double x : {0.9, 2.2, 3.9, 5.1}) {
        e1 = std::max(e1, std::abs(fd_deriv1(f, x, h)[0] - f.deriv1(x)[0]));
        e2 = std::max(e2, std::abs(fd_deriv2(f, x, h)[0] - f.deriv2(x)[0]));
      }
      pairs1.emplace_back(h, e1);
      pairs2.emplace_back(h, e2);
    }
    CHECK(diag::convergence_order(pairs1) >= 1.9);
    CHECK(diag::convergence_order(pairs2) >= 1.9);
  }
}

TEST_CASE("combinators preserve derivative evaluators") {
  const auto f = catalog("cos_2", 2);
  const auto g = catalog("xsin_3", 2);
  const auto h = sum(scaled(f, 2.0), g);
  REQUIRE(h.has_derivatives());
  const double x = 1.3;
  CHECK(h(x)[0] == Approx(2.0 * f(x)[0] + g(x)[0]).margin(1e-15));
  CHECK(h.deriv2(x)[1] ==
        Approx(2.0 * f.deriv2(x)[1] + g.deriv2(x)[1]).margin(1e-13));
  CHECK_THROWS_AS(sum(catalog("one", 1), catalog("one", 2)), parameter_error);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(VectorFunction(0, "bad", [](double) { return Vec{}; }),
                  parameter_error);
  CHECK_THROWS_AS(VectorFunction(1, "bad", nullptr), parameter_error);
}

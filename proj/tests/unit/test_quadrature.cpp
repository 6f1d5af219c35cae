#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "projcub/error.hpp"
#include "projcub/quadrature.hpp"
#include "support.hpp"

using namespace projcub;

namespace {

// B(a+1+j, b+1) / B(a+1, b+1) as a finite product; independent of lgamma.
long double moment_oracle(double a, double b, unsigned j) {
  long double r = 1.0L;
  for (unsigned i = 0; i < j; ++i) r *= (a + 1.0L + i) / (a + b + 2.0L + i);
  return r;
}

// Chebyshev algorithm on exact rational moments; the field exponents are
// half-integers, so every moment is rational.
using Rational = boost::multiprecision::cpp_rational;

Rational half_integer(double x) {
  const long twice = std::lround(2.0 * x);
  REQUIRE(static_cast<double>(twice) == 2.0 * x);
  return Rational(twice, 2);
}

std::vector<std::pair<Rational, Rational>> chebyshev_oracle(double a, double b, std::size_t n) {
  const Rational ra = half_integer(a);
  const Rational rb = half_integer(b);
  std::vector<Rational> mu(2 * n);
  mu[0] = 1;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    mu[j] = mu[j - 1] * (ra + static_cast<int>(j)) / (ra + rb + static_cast<int>(j) + 1);
  }
  std::vector<std::vector<Rational>> sigma(n + 1, std::vector<Rational>(2 * n + 1));
  std::vector<std::pair<Rational, Rational>> ab(n);
  for (std::size_t l = 0; l < 2 * n; ++l) sigma[1][l + 1] = mu[l];
  ab[0] = {mu[1] / mu[0], mu[0]};
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t l = k; l < 2 * n - k; ++l) {
      sigma[k + 1][l + 1] = sigma[k][l + 2] - ab[k - 1].first * sigma[k][l + 1] -
                            ab[k - 1].second * sigma[k - 1][l + 1];
    }
    ab[k].first = sigma[k + 1][k + 2] / sigma[k + 1][k + 1] - sigma[k][k + 1] / sigma[k][k];
    ab[k].second = sigma[k + 1][k + 1] / sigma[k][k];
  }
  return ab;
}

// Exponent pairs of the radial weight for every field up to target dimension 6,
// in both the lift's parametrization and the shifted one.
std::vector<std::pair<double, double>> field_exponents() {
  std::vector<std::pair<double, double>> out;
  for (int d : {1, 2, 4}) {
    const double beta = d / 2.0 - 1.0;
    for (int m = 1; m <= 5; ++m) out.emplace_back(d * m / 2.0 - 1.0, beta);
    for (int m = 2; m <= 6; ++m) out.emplace_back(d * (m - 1) / 2.0, beta);
  }
  return out;
}

double quad_moment(const QuadratureRule& r, unsigned j) {
  return r.integrate([j](double t) { return std::pow(t, static_cast<double>(j)); });
}

}  // namespace

TEST_CASE("chi_moment spot values") {
  CHECK(chi_moment(2.5, 1.0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(chi_moment(1.0, 0.0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(chi_moment(0.5, -0.5, 1) == doctest::Approx(0.75).epsilon(1e-14));
  for (auto [a, b] : field_exponents()) {
    for (unsigned j = 0; j <= 21; ++j) {
      CHECK(testing::rel_err(chi_moment(a, b, j), static_cast<double>(moment_oracle(a, b, j))) <
            1e-13);
    }
  }
}

TEST_CASE("recurrence coefficients") {
  SUBCASE("symmetric weight has a_k = 1/2") {
    const auto c = recurrence_coefficients(0.0, 0.0, 20);
    for (auto [a, b] : c) CHECK(a == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c[0].second == 1.0);
  }
  SUBCASE("first coefficient is the mean") {
    CHECK(recurrence_coefficients(0.5, -0.5, 1)[0].first == doctest::Approx(0.75).epsilon(1e-15));
  }
  SUBCASE("positivity for 50 coefficients") {
    const auto c = recurrence_coefficients(2.0, 1.0, 50);
    REQUIRE(c.size() == 50);
    for (auto [a, b] : c) {
      CHECK(b > 0.0);
      CHECK(a > 0.0);
      CHECK(a < 1.0);
    }
  }
  SUBCASE("matches the moment-based Chebyshev algorithm") {
    for (auto [al, be] : field_exponents()) {
      const auto got = recurrence_coefficients(al, be, 12);
      const auto want = chebyshev_oracle(al, be, 12);
      for (std::size_t k = 0; k < 12; ++k) {
        CHECK(testing::rel_err(got[k].first, static_cast<double>(want[k].first)) < 1e-14);
        CHECK(testing::rel_err(got[k].second, static_cast<double>(want[k].second)) < 1e-14);
      }
    }
  }
  CHECK_THROWS_AS(recurrence_coefficients(-1.0, 0.0, 3), InvalidArgument);
  CHECK_THROWS_AS(recurrence_coefficients(0.0, -1.5, 3), InvalidArgument);
  CHECK_THROWS_AS(recurrence_coefficients(0.0, 0.0, 0), InvalidArgument);
}

TEST_CASE("Gauss hand values") {
  const QuadratureRule one = gauss_rule(0.5, -0.5, 1);
  REQUIRE(one.size() == 1);
  CHECK(one.nodes[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(one.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  const QuadratureRule legendre = gauss_rule(0.0, 0.0, 2);
  CHECK(legendre.nodes[0] == doctest::Approx((1.0 - 1.0 / std::sqrt(3.0)) / 2.0).epsilon(1e-15));
  CHECK(legendre.nodes[1] == doctest::Approx((1.0 + 1.0 / std::sqrt(3.0)) / 2.0).epsilon(1e-15));
  CHECK(legendre.weights[0] == doctest::Approx(0.5).epsilon(1e-15));

  const QuadratureRule lin = gauss_rule(1.0, 0.0, 2);
  for (unsigned j = 0; j <= 3; ++j) {
    CHECK(std::abs(quad_moment(lin, j) - 2.0 / (j + 2.0)) <= 1e-13);
  }
  CHECK(lin.flavor == QuadratureFlavor::Gauss);
}

TEST_CASE("Radau hand oracle") {
  // Moments 2/(j+2): w0 + w1 = 1, w1 t = 2/3, w1 t^2 = 1/2 gives t = 3/4.
  const QuadratureRule r = radau_zero_rule(1.0, 0.0, 1);
  REQUIRE(r.size() == 2);
  CHECK(r.nodes[0] == 0.0);
  CHECK(std::abs(r.nodes[1] - 0.75) <= 1e-14);
  CHECK(std::abs(r.weights[0] - 1.0 / 9.0) <= 1e-14);
  CHECK(std::abs(r.weights[1] - 8.0 / 9.0) <= 1e-14);
  CHECK(r.flavor == QuadratureFlavor::RadauAtZero);
}

TEST_CASE("exactness sweep over field exponents") {
  for (auto [a, b] : field_exponents()) {
    for (std::size_t K = 1; K <= 10; ++K) {
      const QuadratureRule g = gauss_rule(a, b, K);
      const QuadratureRule r = radau_zero_rule(a, b, K);
      REQUIRE(g.size() == K);
      REQUIRE(r.size() == K + 1);
      CHECK(r.nodes.front() == 0.0);
      for (std::size_t k = 0; k < K; ++k) {
        CHECK(g.nodes[k] > 0.0);
        CHECK(g.nodes[k] < 1.0);
        CHECK(g.weights[k] > 0.0);
        if (k) CHECK(g.nodes[k] > g.nodes[k - 1]);
      }
      for (std::size_t k = 0; k <= K; ++k) {
        CHECK(r.weights[k] > 0.0);
        CHECK(r.nodes[k] < 1.0);
        if (k) CHECK(r.nodes[k] > r.nodes[k - 1]);
      }
      double gsum = 0.0, rsum = 0.0;
      for (double w : g.weights) gsum += w;
      for (double w : r.weights) rsum += w;
      CHECK(std::abs(gsum - 1.0) <= 1e-14);
      CHECK(std::abs(rsum - 1.0) <= 1e-14);
      for (unsigned j = 0; j <= 2 * K - 1; ++j) {
        CHECK(testing::rel_err(quad_moment(g, j), chi_moment(a, b, j)) <= 1e-12);
      }
      for (unsigned j = 0; j <= 2 * K; ++j) {
        CHECK(testing::rel_err(quad_moment(r, j), chi_moment(a, b, j)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("rules are deterministic") {
  const QuadratureRule a = radau_zero_rule(3.0, 1.0, 6);
  const QuadratureRule b = radau_zero_rule(3.0, 1.0, 6);
  CHECK(a.nodes == b.nodes);
  CHECK(a.weights == b.weights);
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(gauss_rule(1.0, 0.0, 0), InvalidArgument);
  CHECK_THROWS_AS(radau_zero_rule(1.0, 0.0, 0), InvalidArgument);
  CHECK_THROWS_AS(gauss_rule(-2.0, 0.0, 3), InvalidArgument);
}

TEST_CASE("tridiagonal eigen") {
  // [[2,1],[1,2]] has eigenvalues 1, 3 with first components 1/2 each.
  const auto [vals, w] = tridiagonal_eigen({2.0, 2.0}, {1.0});
  CHECK(vals[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(vals[1] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-14));
  const auto [single, sw] = tridiagonal_eigen({4.0}, {});
  CHECK(single[0] == 4.0);
  CHECK(sw[0] == 1.0);
  CHECK_THROWS_AS(tridiagonal_eigen({}, {}), InvalidArgument);
  CHECK_THROWS_AS(tridiagonal_eigen({1.0, 2.0}, {}), DimensionMismatch);
}

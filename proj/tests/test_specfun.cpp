#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "halfline/specfun.hpp"

namespace sf = halfline::specfun;

// Frozen against a 30-digit arbitrary precision oracle.
TEST_CASE("scaled bessel i against frozen oracle") {
  CHECK(sf::bessel_i_scaled(0.0, 0.5) == doctest::Approx(0.64503527044915007).epsilon(1e-14));
  CHECK(sf::bessel_i_scaled(0.5, 1.0) == doctest::Approx(0.34495131388824463).epsilon(1e-14));
  CHECK(sf::bessel_i_scaled(1.5, 2.0) == doctest::Approx(0.14879751539472359).epsilon(1e-14));
  CHECK(sf::bessel_i_scaled(2.5, 7.0) == doctest::Approx(0.095395043245150432).epsilon(1e-14));
  CHECK(sf::bessel_i_scaled(3.0, 100.0) == doctest::Approx(0.03817817317558649).epsilon(1e-12));
  CHECK(sf::bessel_i_scaled(9.5, 1e6) == doctest::Approx(0.00039892432839376194).epsilon(1e-12));
  CHECK(sf::bessel_i_scaled(0.5, 50.0) == doctest::Approx(0.056418958354775629).epsilon(1e-14));
  CHECK(sf::bessel_i_scaled(4.5, 40.0) == doctest::Approx(0.048981911681508655).epsilon(1e-13));
}

TEST_CASE("scaled bessel i limits and domain") {
  CHECK(sf::bessel_i_scaled(0.0, 0.0) == 1.0);
  CHECK(sf::bessel_i_scaled(1.5, 0.0) == 0.0);
  CHECK(sf::bessel_i_scaled(2.0, 1e-300) >= 0.0);
  CHECK_THROWS_AS(sf::bessel_i_scaled(2.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(sf::bessel_i_scaled(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("bessel i recurrence I_{mu-1} - I_{mu+1} = (2mu/z) I_mu") {
  for (double mu : {1.0, 1.5, 2.5, 4.0})
    for (double z : {0.5, 3.0, 20.0, 200.0}) {
      const double lhs = sf::bessel_i_scaled(mu - 1.0, z) - sf::bessel_i_scaled(mu + 1.0, z);
      const double rhs = (2.0 * mu / z) * sf::bessel_i_scaled(mu, z);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
}

TEST_CASE("bessel j against frozen oracle") {
  CHECK(sf::bessel_j(0.0, 1.0) == doctest::Approx(0.76519768655796655).epsilon(1e-13));
  CHECK(sf::bessel_j(1.5, 1.0) == doctest::Approx(0.24029783912342701).epsilon(1e-13));
  CHECK(sf::bessel_j(2.5, 9.5) == doctest::Approx(0.10032413675833477).epsilon(1e-12));
  CHECK(sf::bessel_j(0.7, 3.0) == doctest::Approx(0.18788671346939385).epsilon(1e-12));
  CHECK(sf::bessel_j(1.5, 0.0) == 0.0);
}

TEST_CASE("erf and erfi against frozen oracle") {
  CHECK(sf::erf(0.5) == doctest::Approx(0.52049987781304654).epsilon(1e-14));
  CHECK(sf::erfi(1.0) == doctest::Approx(1.6504257587975429).epsilon(1e-14));
  CHECK(sf::erfi(5.0) == doctest::Approx(8298273880.6768035).epsilon(1e-13));
  CHECK(sf::erf(-0.5) == -sf::erf(0.5));
  CHECK(sf::erfi(-1.0) == -sf::erfi(1.0));
  CHECK(sf::erfi(0.0) == 0.0);
}

TEST_CASE("erfi_scaled handles magnitudes past the overflow point") {
  const auto r = sf::erfi_scaled(30.0);
  CHECK(r.sign == 1.0);
  CHECK(r.log_abs == doctest::Approx(896.02699400469686).epsilon(1e-13));
  const auto n = sf::erfi_scaled(-30.0);
  CHECK(n.sign == -1.0);
  CHECK(n.log_abs == doctest::Approx(r.log_abs).epsilon(1e-15));
  // Agreement with the direct series where both are valid.
  const auto mid = sf::erfi_scaled(4.0);
  CHECK(mid.sign * std::exp(mid.log_abs) == doctest::Approx(sf::erfi(4.0)).epsilon(1e-12));
}

TEST_CASE("gamma values and poles") {
  // fully qualified: libc leaks a ::gamma into the global namespace
  CHECK(sf::gamma(4.5) ==
        doctest::Approx(11.631728396567449).epsilon(1e-14));
  CHECK(sf::gamma(1.0) == doctest::Approx(1.0));
  CHECK(sf::gamma(5.0) == doctest::Approx(24.0));
  CHECK_THROWS_AS(sf::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(sf::gamma(-3.0), std::domain_error);
}

TEST_CASE("asymptotic coefficients terminate at half-integer orders") {
  CHECK(sf::asymp_coeff(0.5, 1) == 0.0);
  CHECK(sf::asymp_coeff(1.5, 2) == 0.0);
  CHECK(sf::asymp_coeff(2.5, 4) == 0.0);
  CHECK(sf::asymp_coeff(2.0, 1) == doctest::Approx(3.75).epsilon(1e-14));
  CHECK(sf::asymp_coeff(3.5, 2) == doctest::Approx(60.0).epsilon(1e-14));
  CHECK(sf::asymp_coeff(3.0, 0) == doctest::Approx(1.0));
}

TEST_CASE("asymptotic expansion matches the scaled carrier at large z") {
  for (double mu : {0.5, 1.5, 2.5}) {
    const double z = 60.0;
    const auto a = sf::bessel_i_asymptotic(mu, z, 40, false);
    CHECK(a.imag() == 0.0);
    CHECK(a.real() * std::exp(-z) ==
          doctest::Approx(sf::bessel_i_scaled(mu, z)).epsilon(1e-12));
  }
}

TEST_CASE("asymptotic expansion truncation guard") {
  // z too small for the expansion: the first omitted term is huge.
  CHECK_THROWS_AS(sf::bessel_i_asymptotic(3.0, 0.5, 40, false, 1e-6),
                  std::runtime_error);
}

TEST_CASE("reflection term is exponentially small and complex off half-integers") {
  const auto with = sf::bessel_i_asymptotic(1.0, 30.0, 20, true);
  const auto without = sf::bessel_i_asymptotic(1.0, 30.0, 20, false);
  CHECK(std::abs(with - without) < 1e-20 * std::abs(without));
  CHECK(with.imag() != 0.0);
}

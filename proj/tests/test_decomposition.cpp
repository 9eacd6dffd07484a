#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "halfline/decomposition.hpp"

using namespace halfline;

TEST_CASE("reflection phase: integer nu snaps to +-1") {
  CHECK(reflection_phase(1.0, +1) == std::complex<double>(-1.0, 0.0));
  CHECK(reflection_phase(3.0, +1) == std::complex<double>(-1.0, 0.0));
  CHECK(reflection_phase(2.0, +1) == std::complex<double>(1.0, 0.0));
  CHECK(reflection_phase(4.0, -1) == std::complex<double>(1.0, 0.0));
  CHECK_THROWS_AS(reflection_phase(1.0, 0), std::invalid_argument);
}

TEST_CASE("reflection phase: non-integer nu lives on the unit circle") {
  const auto p = reflection_phase(1.5, +1);
  CHECK(std::abs(p) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.real() == doctest::Approx(std::cos(1.5 * M_PI)).epsilon(1e-15));
  CHECK(p.imag() == doctest::Approx(std::sin(1.5 * M_PI)).epsilon(1e-15));
  // opposite branches conjugate
  const auto m = reflection_phase(1.5, -1);
  CHECK(m == std::conj(p));
}

TEST_CASE("nu=1 total reproduces the image-charge kernel") {
  const SystemSpec spec(1.0, 1.0, 1.0);
  for (double eps : {0.05, 0.3}) {
    const auto d = decompose(spec, 0.9, 1.4, eps);
    CHECK(d.total.imag() == 0.0);
    CHECK(d.total.real() ==
          doctest::Approx(exact_free_halfline(1.0, 1.0, 0.9, 1.4, eps))
              .epsilon(1e-14));
    // the reflected part is minus the reflected-distance Gaussian
    CHECK(d.reflected.real() < 0.0);
  }
}

TEST_CASE("validity flag flips past lambda = x x'") {
  const SystemSpec spec(1.0, 1.0, 2.0);
  CHECK(decompose(spec, 1.0, 1.0, 0.5).valid);
  CHECK_FALSE(decompose(spec, 0.5, 0.5, 1.0).valid);
}

TEST_CASE("reflected term rejects potentials without a real continuation") {
  const SystemSpec coul(1.0, 1.0, 2.0, Potential::coulomb(1.0));
  CHECK_THROWS_AS(reflected_term(coul, 1.0, 1.0, 0.1, +1), std::domain_error);
  const SystemSpec odd(1.0, 1.0, 2.0, Potential::power_law(1.0, 3.0));
  CHECK_THROWS_AS(reflected_term(odd, 1.0, 1.0, 0.1, +1), std::domain_error);
  const SystemSpec even(1.0, 1.0, 2.0, Potential::power_law(1.0, 4.0));
  CHECK_NOTHROW(reflected_term(even, 1.0, 1.0, 0.1, +1));
}

TEST_CASE("nu=2 factored form sums to the exact kernel") {
  const SystemSpec spec(1.0, 1.0, 2.0);
  for (double eps : {0.05, 0.2})
    for (double x : {0.8, 1.5}) {
      const auto [direct, reflected] = nu2_factored_form(x, 1.1, eps);
      CHECK(direct + reflected ==
            doctest::Approx(short_time_kernel(spec, x, 1.1, eps)).epsilon(1e-13));
    }
}

// Frozen against a 30-digit arbitrary precision oracle.
TEST_CASE("saddle width and I_ab") {
  const SaddleWidth sw(1.0, 1.0);
  CHECK(sw.K == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(I_ab(1.0, 1.0, sw) == doctest::Approx(1.6476207364010595).epsilon(1e-14));
  CHECK_THROWS_AS(SaddleWidth(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(I_ab(100.0, 100.0, SaddleWidth(1.0, 1.0)), std::overflow_error);
}

TEST_CASE("sinh/cosh bracket integrals against frozen oracle") {
  const SaddleWidth sw(0.4, 0.6);
  CHECK(sinhcosh_integral(1.2, 0.8, sw, SinhCoshKind::SinhCosh) ==
        doctest::Approx(1.3949592834052886).epsilon(1e-13));
  CHECK(sinhcosh_integral(1.2, 0.8, sw, SinhCoshKind::CoshSinh) ==
        doctest::Approx(2.2766352281728035).epsilon(1e-13));
  CHECK(sinhcosh_integral(1.2, 0.8, sw, SinhCoshKind::SinhSinh) ==
        doctest::Approx(1.0736871611030437).epsilon(1e-13));
}

TEST_CASE("sinh/cosh integrals: small-argument limits are continuous") {
  const SaddleWidth sw(0.4, 0.6);
  const double tiny = 1e-9, small = 1e-6;
  for (auto kind : {SinhCoshKind::SinhCosh, SinhCoshKind::SinhSinh})
    CHECK(sinhcosh_integral(tiny, 0.8, sw, kind) ==
          doctest::Approx(sinhcosh_integral(small, 0.8, sw, kind)).epsilon(1e-9));
  CHECK(sinhcosh_integral(1.2, tiny, sw, SinhCoshKind::CoshSinh) ==
        doctest::Approx(sinhcosh_integral(1.2, small, sw, SinhCoshKind::CoshSinh))
            .epsilon(1e-9));
}

TEST_CASE("closed-form nu=2 composition reproduces the kernel") {
  CHECK(compose_closed_form_nu2(1.0, 1.0, 0.3, 0.7) ==
        doctest::Approx(0.1079819330263761).epsilon(1e-13));
  const SystemSpec spec(1.0, 1.0, 2.0);
  for (double a : {0.6, 1.0, 1.7})
    for (double b : {0.8, 1.3})
      CHECK(compose_closed_form_nu2(a, b, 0.25, 0.55) ==
            doctest::Approx(short_time_kernel(spec, a, b, 0.8)).epsilon(1e-12));
}

TEST_CASE("direct product composition is exact up to quadrature") {
  QuadratureSpec quad;
  const auto rep = direct_product_check(1.0, 1.2, 0.1, quad);
  CHECK(rep.rel_error < 1e-10);
}

TEST_CASE("cross term saddle error halves with eps") {
  const SystemSpec spec(1.0, 1.0, 2.0);
  QuadratureSpec quad;
  const auto r1 = cross_term_check(spec, 1.0, 1.0, 0.01, quad);
  const auto r2 = cross_term_check(spec, 1.0, 1.0, 0.005, quad);
  CHECK(r1.rel_error < 5 * 0.01);
  CHECK(r2.rel_error < 5 * 0.005);
  CHECK(r2.rel_error < 0.75 * r1.rel_error);
  const SystemSpec frac(1.0, 1.0, 1.5);
  CHECK_THROWS_AS(cross_term_check(frac, 1.0, 1.0, 0.01, quad),
                  std::invalid_argument);
}

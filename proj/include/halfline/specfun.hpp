#ifndef HALFLINE_SPECFUN_HPP
#define HALFLINE_SPECFUN_HPP

#include <complex>

// Special functions needed by the half-line kernels: the scaled modified
// Bessel function e^{-z} I_mu(z) as the overflow-free carrier, Bessel J,
// erf/erfi, Gamma, and the asymptotic-series coefficients (nu,k).

namespace halfline::specfun {

// (nu,k) = Gamma(nu+k+1/2) / (k! Gamma(nu-k+1/2)).
// Total function: returns exactly 0 when nu-k+1/2 is a nonpositive integer.
double asymp_coeff(double nu, int k);

// e^{-z} I_mu(z) for mu >= -1/2, z >= 0.
// Power series below z = 15 + 2 mu^2, exact elementary closed form for
// half-integer orders above it, optimally truncated asymptotic series
// otherwise. 12+ significant digits on z in [0, 1e6], mu in [0, 10].
double bessel_i_scaled(double mu, double z);

// Truncated asymptotic expansion of I_mu(z) (unscaled, so z must be small
// enough that e^z is representable). The first sum is carried to kmax or to
// the smallest-magnitude term, whichever comes first; with
// include_reflection the exponentially small second sum with its phase
// e^{(mu+1/2) pi i} is added, making the result complex in general.
// Throws std::runtime_error if the truncation-error estimate (first
// omitted term) exceeds tol.
std::complex<double> bessel_i_asymptotic(double mu, double z, int kmax,
                                         bool include_reflection,
                                         double tol = 1e300);

// J_mu(x) for mu >= 0, x >= 0.
double bessel_j(double mu, double x);

double erf(double x);

// erfi(y) = -i erf(iy), real valued. Overflows past |y| ~ 26.6; use
// erfi_scaled beyond that.
double erfi(double y);

struct LogScaled {
  double sign;     // -1, 0 or +1
  double log_abs;  // natural log of the magnitude
};

// Sign and log-magnitude of erfi(y), valid for any representable y.
LogScaled erfi_scaled(double y);

// Gamma(x) on x not a nonpositive integer; throws std::domain_error at the
// poles.
double gamma(double x);

}  // namespace halfline::specfun

#endif

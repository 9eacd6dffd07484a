#include "halfline/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "halfline/quadrature.hpp"
#include "halfline/specfun.hpp"

namespace halfline {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be > 0");
}
}  // namespace

Potential Potential::harmonic(double omega) {
  require_positive(omega, "omega");
  Potential p;
  p.kind = Kind::Harmonic;
  p.omega = omega;
  return p;
}

Potential Potential::coulomb(double alpha) {
  Potential p;
  p.kind = Kind::Coulomb;
  p.alpha = alpha;
  return p;
}

Potential Potential::power_law(double c, double p_) {
  if (!(p_ > -2.0))
    throw std::invalid_argument("power_law: need p > -2 so the centrifugal term dominates");
  Potential p;
  p.kind = Kind::PowerLaw;
  p.c = c;
  p.p = p_;
  return p;
}

std::string Potential::describe() const {
  switch (kind) {
    case Kind::Zero:
      return "zero";
    case Kind::Harmonic:
      return "harmonic(omega=" + std::to_string(omega) + ")";
    case Kind::Coulomb:
      return "coulomb(alpha=" + std::to_string(alpha) + ")";
    case Kind::PowerLaw:
      return "power(c=" + std::to_string(c) + ",p=" + std::to_string(p) + ")";
  }
  return "?";
}

SystemSpec::SystemSpec(double mass_, double hbar_, double nu_, Potential pot)
    : mass(mass_), hbar(hbar_), nu(nu_), potential(pot) {
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  if (!(nu >= 0.5)) throw std::invalid_argument("nu must be >= 1/2");
}

KernelParams::KernelParams(const SystemSpec& spec, double eps_) : eps(eps_) {
  require_positive(eps, "eps");
  lambda = spec.hbar * eps / spec.mass;
}

double SystemSpec::potential_value(double x) const {
  switch (potential.kind) {
    case Potential::Kind::Zero:
      return 0.0;
    case Potential::Kind::Harmonic:
      return 0.5 * mass * potential.omega * potential.omega * x * x;
    case Potential::Kind::Coulomb:
      if (x < Potential::x_min)
        throw std::domain_error("Coulomb potential evaluated below x_min");
      return -potential.alpha / x;
    case Potential::Kind::PowerLaw:
      return potential.c * std::pow(x, potential.p);
  }
  return 0.0;
}

double eigenfunction(const SystemSpec& spec, double k, double x) {
  if (!spec.potential.is_zero())
    throw std::invalid_argument("eigenfunction: only defined for V = 0");
  if (k < 0.0) throw std::invalid_argument("eigenfunction: k must be >= 0");
  require_positive(x, "x");
  if (k == 0.0) return 0.0;
  return std::sqrt(k * x) * specfun::bessel_j(spec.bessel_order(), k * x);
}

double orthogonality_check(const SystemSpec& spec, double k, double kprime,
                           double regulator) {
  if (!spec.potential.is_zero())
    throw std::invalid_argument("orthogonality_check: only defined for V = 0");
  require_positive(k, "k");
  require_positive(kprime, "kprime");
  require_positive(regulator, "regulator");
  const double mu = spec.bessel_order();
  const double a2 = regulator * regulator;
  // Closed form (1/2a^2) e^{-(k-k')^2/(4a^2)} Ihat_mu(k k' / 2a^2).
  const double z = k * kprime / (2.0 * a2);
  const double closed = (0.5 / a2) * specfun::bessel_i_scaled(mu, z) *
                        std::exp(-(k - kprime) * (k - kprime) / (4.0 * a2));
  const double x_up = std::sqrt(40.0) / regulator;
  const double numeric = quadrature::integrate_adaptive(
      [&](double x) {
        return x * std::exp(-a2 * x * x) * specfun::bessel_j(mu, k * x) *
               specfun::bessel_j(mu, kprime * x);
      },
      0.0, x_up, 1e-11);
  return std::abs(numeric - closed);
}

double potential_midpoint(const SystemSpec& spec, double x, double xprime) {
  require_positive(x, "x");
  require_positive(xprime, "xprime");
  return spec.potential_value(std::sqrt(x * xprime));
}

double short_time_kernel(const SystemSpec& spec, double x, double xprime,
                         double eps) {
  require_positive(x, "x");
  require_positive(xprime, "xprime");
  const KernelParams kp(spec, eps);
  const double z = x * xprime / kp.lambda;
  const double d = x - xprime;
  const double expo = -d * d / (2.0 * kp.lambda) -
                      (eps / spec.hbar) * potential_midpoint(spec, x, xprime);
  return (std::sqrt(x * xprime) / kp.lambda) *
         specfun::bessel_i_scaled(spec.bessel_order(), z) * std::exp(expo);
}

double spectral_kernel(const SystemSpec& spec, double x, double xprime,
                       double eps, double kmax, int nodes) {
  require_positive(x, "x");
  require_positive(xprime, "xprime");
  const KernelParams kp(spec, eps);
  const double kmax_min = std::sqrt(2.0 * 38.0 / kp.lambda);
  if (kmax <= 0.0) kmax = kmax_min;
  if (std::exp(-0.5 * kp.lambda * kmax * kmax) > 1e-16)
    throw std::runtime_error("spectral_kernel: kmax tail bound not met");
  const double mu = spec.bessel_order();
  // Enough panels to resolve both the Bessel oscillation (period ~ pi/x)
  // and the Gaussian cutoff.
  const double xm = std::max(x, xprime);
  const int panels =
      std::max(8, static_cast<int>(std::ceil(kmax * xm / kPi)) / 2 + 8);
  const double integral = quadrature::integrate(
      [&](double k) {
        return k * specfun::bessel_j(mu, k * x) * specfun::bessel_j(mu, k * xprime) *
               std::exp(-0.5 * kp.lambda * k * k);
      },
      0.0, kmax, nodes, panels);
  const double boltz =
      std::exp(-(eps / spec.hbar) * potential_midpoint(spec, x, xprime));
  return std::sqrt(x * xprime) * integral * boltz;
}

double exact_free_halfline(double m, double hbar, double a, double b,
                           double beta) {
  if (a < 0.0 || b < 0.0) throw std::invalid_argument("a, b must be >= 0");
  require_positive(beta, "beta");
  const double lam = hbar * beta / m;
  return (1.0 / std::sqrt(2.0 * kPi * lam)) *
         (std::exp(-(a - b) * (a - b) / (2.0 * lam)) -
          std::exp(-(a + b) * (a + b) / (2.0 * lam)));
}

double radial_oscillator_kernel(double nu, double omega, double m, double hbar,
                                double a, double b, double beta) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(beta, "beta");
  require_positive(omega, "omega");
  const double sh = std::sinh(omega * beta);
  const double ch = std::cosh(omega * beta);
  const double u = m * omega * a * b / (hbar * sh);
  // exponent: u - (m omega coth / 2 hbar)(a^2+b^2), grouped so the scaled
  // carrier absorbs the e^{u} growth.
  const double expo = u - (m * omega * ch / (2.0 * hbar * sh)) * (a * a + b * b);
  return (m * omega * std::sqrt(a * b) / (hbar * sh)) *
         specfun::bessel_i_scaled(nu - 0.5, u) * std::exp(expo);
}

double heat_equation_residual(
    const std::function<double(double, double, double)>& kernel, double a,
    double b, double beta, double h_a, double h_beta, double m, double hbar) {
  const double d_beta =
      (kernel(a, b, beta + h_beta) - kernel(a, b, beta - h_beta)) / (2.0 * h_beta);
  const double d2_a = (kernel(a + h_a, b, beta) - 2.0 * kernel(a, b, beta) +
                       kernel(a - h_a, b, beta)) /
                      (h_a * h_a);
  return -hbar * d_beta + (hbar * hbar / (2.0 * m)) * d2_a;
}

}  // namespace halfline

#ifndef HALFLINE_KERNELS_HPP
#define HALFLINE_KERNELS_HPP

#include <functional>
#include <string>

// Closed-form imaginary-time kernels on the half-line with the centrifugal
// potential nu(nu-1) hbar^2 / (2 m x^2), plus the eigenfunction layer.

namespace halfline {

struct Potential {
  enum class Kind { Zero, Harmonic, Coulomb, PowerLaw };

  Kind kind = Kind::Zero;
  double omega = 0.0;  // Harmonic
  double alpha = 0.0;  // Coulomb: V = -alpha / x
  double c = 0.0;      // PowerLaw: V = c x^p
  double p = 0.0;

  static Potential zero() { return {}; }
  static Potential harmonic(double omega);
  static Potential coulomb(double alpha);
  static Potential power_law(double c, double p);

  // Evaluation floor for the Coulomb singularity; the half-line is open at 0.
  static constexpr double x_min = 1e-8;

  bool is_zero() const { return kind == Kind::Zero; }
  std::string describe() const;
};

struct SystemSpec {
  double mass = 1.0;
  double hbar = 1.0;
  double nu = 1.0;
  Potential potential;

  SystemSpec() = default;
  SystemSpec(double mass, double hbar, double nu, Potential pot = {});

  double bessel_order() const { return nu - 0.5; }

  // V(x) with the mass-dependent harmonic normalization (1/2) m omega^2 x^2.
  double potential_value(double x) const;
};

// eps together with lambda = hbar * eps / mass; the same pairing serves
// beta and hbar * beta / mass for finite-time kernels.
struct KernelParams {
  double eps;
  double lambda;
  KernelParams(const SystemSpec& spec, double eps);
};

// sqrt(kx) J_{nu-1/2}(kx); only defined for the V = 0 Hamiltonian.
double eigenfunction(const SystemSpec& spec, double k, double x);

// |quadrature - closed form| for the Gaussian-regulated Bessel overlap
// integral_0^inf x e^{-a^2 x^2} J_mu(kx) J_mu(k'x) dx.
double orthogonality_check(const SystemSpec& spec, double k, double kprime,
                           double regulator);

// The exact e^{-eps H0 / hbar} kernel with V sampled at the geometric
// midpoint sqrt(x x'). Routed through the scaled Bessel carrier so nothing
// overflows at small eps.
double short_time_kernel(const SystemSpec& spec, double x, double xprime,
                         double eps);

double potential_midpoint(const SystemSpec& spec, double x, double xprime);

// Eigenfunction-integral form of the short-time kernel:
// sqrt(xx') int_0^kmax k J(kx) J(kx') e^{-lambda k^2/2} dk, times the
// midpoint Boltzmann factor. kmax <= 0 picks the e^{-lambda kmax^2/2}<1e-16
// default. Throws std::runtime_error if the tail bound is not met.
double spectral_kernel(const SystemSpec& spec, double x, double xprime,
                       double eps, double kmax = 0.0, int nodes = 64);

// Free particle on the half-line (nu = 1, V = 0), image-charge form.
double exact_free_halfline(double m, double hbar, double a, double b,
                           double beta);

// Exact finite-time kernel of the radial oscillator.
double radial_oscillator_kernel(double nu, double omega, double m, double hbar,
                                double a, double b, double beta);

// Finite-difference residual of -hbar d_beta K + (hbar^2/2m) d^2_a K for a
// kernel handle K(a, b, beta); O(h^2) when K solves the heat equation.
double heat_equation_residual(
    const std::function<double(double, double, double)>& kernel, double a,
    double b, double beta, double h_a, double h_beta, double m = 1.0,
    double hbar = 1.0);

}  // namespace halfline

#endif

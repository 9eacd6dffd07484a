#ifndef HALFLINE_DECOMPOSITION_HPP
#define HALFLINE_DECOMPOSITION_HPP

#include <complex>
#include <utility>

#include "halfline/kernels.hpp"
#include "halfline/slicing.hpp"

// Direct/reflected decomposition of the short-time kernel with the
// nu-dependent reflection phase e^{+-i nu pi}, the closed-form composition
// identities for nu = 2 (expressed through erfi so everything stays real),
// and the saddle-point cross-term checks.

namespace halfline {

struct PathDecomposition {
  std::complex<double> direct;
  std::complex<double> reflected;
  std::complex<double> phase;  // e^{i nu pi * branch}, unit modulus
  int branch = +1;
  std::complex<double> total;
  // The decomposition is asymptotic in lambda/(x x'); false past 1.
  bool valid = true;
};

// Reflection phase e^{i nu pi * branch}.
std::complex<double> reflection_phase(double nu, int branch);

double direct_term(const SystemSpec& spec, double x, double xprime, double eps);

// Carries the phase; V(sqrt(-x x')) is evaluated by analytic continuation
// for potentials even in x (zero, harmonic, even-power laws) and rejected
// otherwise.
std::complex<double> reflected_term(const SystemSpec& spec, double x,
                                    double xprime, double eps, int branch);

PathDecomposition decompose(const SystemSpec& spec, double x, double xprime,
                            double eps, int branch = +1);

// The two bracket terms of the exact nu = 2 factored kernel
// (1 -+ lambda/xx') e^{-(x -+ x')^2 / 2 lambda} / sqrt(2 pi lambda),
// with m = hbar = 1. first = direct-distance term, second = reflected.
std::pair<double, double> nu2_factored_form(double x, double xprime, double eps);

struct SaddleWidth {
  double lambda1;
  double lambda2;
  double K;  // sqrt(lambda1 lambda2 / (2 (lambda1 + lambda2)))
  SaddleWidth(double lambda1, double lambda2);
};

// int_0^inf e^{-x^2/(4K^2)} cosh(ax/l1) cosh(bx/l2) dx, closed form.
double I_ab(double a, double b, const SaddleWidth& sw);

enum class SinhCoshKind { SinhCosh, CoshSinh, SinhSinh };

// The companion integrals with one or both cosh factors replaced by
// sinh(.)/(.) carriers, in their erfi closed forms.
double sinhcosh_integral(double a, double b, const SaddleWidth& sw,
                         SinhCoshKind kind);

// Exact composition of two nu = 2 kernels assembled from the four bracket
// integrals; equals the single kernel at eps1 + eps2 (m = hbar = 1).
double compose_closed_form_nu2(double a, double b, double eps1, double eps2);

struct CrossTermReport {
  double numeric_lhs = 0.0;
  double saddle_rhs = 0.0;
  double eps = 0.0;
  double rel_error = 0.0;
};

// Cross terms (direct x reflected) of a product of two short-time kernels,
// folded onto one full-line integral, against the saddle-point closed form.
// Integer nu only; rel_error is O(eps).
CrossTermReport cross_term_check(const SystemSpec& spec, double x,
                                 double xprime, double eps,
                                 const QuadratureSpec& quad);

// Half-line integral of the exact nu = 2 kernel product (the direct+direct
// and cross term groups with the Bessel structure retained) against
// K(x, x'; 2 eps). Exact up to quadrature error.
CrossTermReport direct_product_check(double x, double xprime, double eps,
                                     const QuadratureSpec& quad);

}  // namespace halfline

#endif

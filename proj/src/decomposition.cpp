#include "halfline/decomposition.hpp"

#include <cmath>
#include <stdexcept>

#include "halfline/quadrature.hpp"
#include "halfline/specfun.hpp"

namespace halfline {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

bool is_integer(double x) { return x == std::floor(x); }

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be > 0");
}

// V(sqrt(prod)) continued to negative prod. Only potentials even in x have
// a real continuation; the rest are rejected rather than given a branch.
double continued_midpoint_potential(const SystemSpec& spec, double prod) {
  if (prod >= 0.0) return spec.potential_value(std::sqrt(prod));
  switch (spec.potential.kind) {
    case Potential::Kind::Zero:
      return 0.0;
    case Potential::Kind::Harmonic:
      return 0.5 * spec.mass * spec.potential.omega * spec.potential.omega * prod;
    case Potential::Kind::PowerLaw: {
      const double p = spec.potential.p;
      if (is_integer(p) && std::fmod(p, 2.0) == 0.0) {
        const int half = static_cast<int>(p) / 2;
        const double sign = (half % 2 == 0) ? 1.0 : -1.0;
        return spec.potential.c * sign * std::pow(-prod, half);
      }
      throw std::domain_error(
          "reflected path: V(sqrt(-xx')) is complex for odd power laws");
    }
    case Potential::Kind::Coulomb:
      throw std::domain_error(
          "reflected path: V(sqrt(-xx')) is complex for the Coulomb potential");
  }
  return 0.0;
}

}  // namespace

std::complex<double> reflection_phase(double nu, int branch) {
  if (branch != 1 && branch != -1)
    throw std::invalid_argument("branch must be +1 or -1");
  if (is_integer(nu)) {
    const long n = static_cast<long>(nu);
    return {(n % 2 == 0) ? 1.0 : -1.0, 0.0};
  }
  return std::polar(1.0, branch * nu * kPi);
}

double direct_term(const SystemSpec& spec, double x, double xprime, double eps) {
  require_positive(x, "x");
  require_positive(xprime, "xprime");
  const KernelParams kp(spec, eps);
  const double d = x - xprime;
  const double expo = -d * d / (2.0 * kp.lambda) -
                      spec.nu * (spec.nu - 1.0) * kp.lambda / (2.0 * x * xprime) -
                      (eps / spec.hbar) * potential_midpoint(spec, x, xprime);
  return std::exp(expo) / std::sqrt(2.0 * kPi * kp.lambda);
}

std::complex<double> reflected_term(const SystemSpec& spec, double x,
                                    double xprime, double eps, int branch) {
  require_positive(x, "x");
  require_positive(xprime, "xprime");
  const KernelParams kp(spec, eps);
  const double s = x + xprime;
  // The centrifugal exponent rides on xx' and flips sign with it.
  const double expo = -s * s / (2.0 * kp.lambda) +
                      spec.nu * (spec.nu - 1.0) * kp.lambda / (2.0 * x * xprime) -
                      (eps / spec.hbar) *
                          continued_midpoint_potential(spec, -x * xprime);
  return reflection_phase(spec.nu, branch) * std::exp(expo) /
         std::sqrt(2.0 * kPi * kp.lambda);
}

PathDecomposition decompose(const SystemSpec& spec, double x, double xprime,
                            double eps, int branch) {
  PathDecomposition out;
  out.branch = branch;
  out.phase = reflection_phase(spec.nu, branch);
  out.direct = direct_term(spec, x, xprime, eps);
  out.reflected = reflected_term(spec, x, xprime, eps, branch);
  out.total = out.direct + out.reflected;
  const KernelParams kp(spec, eps);
  out.valid = kp.lambda / (x * xprime) <= 1.0;
  return out;
}

std::pair<double, double> nu2_factored_form(double x, double xprime, double eps) {
  require_positive(x, "x");
  require_positive(xprime, "xprime");
  require_positive(eps, "eps");
  const double lam = eps;  // m = hbar = 1
  const double pref = 1.0 / std::sqrt(2.0 * kPi * lam);
  const double c = lam / (x * xprime);
  const double dm = x - xprime, sp = x + xprime;
  return {pref * (1.0 - c) * std::exp(-dm * dm / (2.0 * lam)),
          pref * (1.0 + c) * std::exp(-sp * sp / (2.0 * lam))};
}

SaddleWidth::SaddleWidth(double l1, double l2) : lambda1(l1), lambda2(l2) {
  require_positive(l1, "lambda1");
  require_positive(l2, "lambda2");
  K = std::sqrt(l1 * l2 / (2.0 * (l1 + l2)));
}

double I_ab(double a, double b, const SaddleWidth& sw) {
  const double u = sw.K * (a / sw.lambda1 + b / sw.lambda2);
  const double v = sw.K * (a / sw.lambda1 - b / sw.lambda2);
  if (u * u > 700.0 || v * v > 700.0)
    throw std::overflow_error("I_ab: exponent overflow; rescale the arguments");
  return 0.5 * kSqrtPi * sw.K * (std::exp(u * u) + std::exp(v * v));
}

double sinhcosh_integral(double a, double b, const SaddleWidth& sw,
                         SinhCoshKind kind) {
  const double ra = sw.K * a / sw.lambda1;
  const double rb = sw.K * b / sw.lambda2;
  const double u = ra + rb, v = ra - rb;
  const double tiny = 1e-8;
  switch (kind) {
    case SinhCoshKind::SinhCosh:
      // sinh(ax/l1)/(ax/l1) -> 1 as a -> 0, leaving I(0, b).
      if (std::abs(ra) < tiny) return kSqrtPi * sw.K * std::exp(rb * rb);
      return (kPi * sw.lambda1 / (4.0 * a)) *
             (specfun::erfi(u) + specfun::erfi(v));
    case SinhCoshKind::CoshSinh:
      if (std::abs(rb) < tiny) return kSqrtPi * sw.K * std::exp(ra * ra);
      return (kPi * sw.lambda2 / (4.0 * b)) *
             (specfun::erfi(u) - specfun::erfi(v));
    case SinhCoshKind::SinhSinh:
      if (std::abs(ra) < tiny && std::abs(rb) < tiny) return kSqrtPi * sw.K;
      if (std::abs(ra) < tiny)
        return (kPi * sw.lambda2 / (2.0 * b)) * specfun::erfi(rb);
      if (std::abs(rb) < tiny)
        return (kPi * sw.lambda1 / (2.0 * a)) * specfun::erfi(ra);
      return (kPi * sw.lambda1 * sw.lambda2 / (4.0 * a * b * sw.K)) *
             (u * specfun::erfi(u) - v * specfun::erfi(v) -
              (std::exp(u * u) - std::exp(v * v)) / kSqrtPi);
  }
  throw std::invalid_argument("sinhcosh_integral: bad kind");
}

double compose_closed_form_nu2(double a, double b, double eps1, double eps2) {
  require_positive(a, "a");
  require_positive(b, "b");
  const SaddleWidth sw(eps1, eps2);  // m = hbar = 1, lambda_i = eps_i
  const double bracket = I_ab(a, b, sw) -
                         sinhcosh_integral(a, b, sw, SinhCoshKind::SinhCosh) -
                         sinhcosh_integral(a, b, sw, SinhCoshKind::CoshSinh) +
                         sinhcosh_integral(a, b, sw, SinhCoshKind::SinhSinh);
  // Prefactor 2/(pi sqrt(l1 l2)) from sqrt(2/(pi l1)) * sqrt(2/(pi l2)).
  const double pref = 2.0 *
                      std::exp(-a * a / (2.0 * sw.lambda1) -
                               b * b / (2.0 * sw.lambda2)) /
                      (kPi * std::sqrt(sw.lambda1 * sw.lambda2));
  return pref * bracket;
}

CrossTermReport cross_term_check(const SystemSpec& spec, double x,
                                 double xprime, double eps,
                                 const QuadratureSpec& quad) {
  if (!is_integer(spec.nu))
    throw std::invalid_argument(
        "cross_term_check: non-integer nu folds with a genuinely complex "
        "phase e^{2 nu pi i}; only integer nu is supported");
  require_positive(x, "x");
  require_positive(xprime, "xprime");
  quad.validate();
  const KernelParams kp(spec, eps);
  const double lam = kp.lambda;
  const double cf = spec.nu * (spec.nu - 1.0) * lam / 2.0;
  const double coeff = cf * (1.0 / x - 1.0 / xprime);
  const double y0 = (x - xprime) / 2.0;
  double w = 10.0 * std::sqrt(lam);
  if (coeff != 0.0) {
    // e^{-coeff/y} makes the folded integrand blow up through y = 0; the
    // expression is asymptotic only, so keep the window on the saddle side.
    if (y0 == 0.0)
      throw std::invalid_argument("cross_term_check: saddle sits on the singularity");
    w = std::min(w, 0.9 * std::abs(y0));
  }
  const auto integrand = [&](double y) {
    const double g1 = x - y, g2 = y + xprime;
    double expo = -(g1 * g1 + g2 * g2) / (2.0 * lam);
    if (coeff != 0.0) expo -= coeff / y;
    expo -= (eps / spec.hbar) * (continued_midpoint_potential(spec, x * y) +
                                 continued_midpoint_potential(spec, -xprime * y));
    return std::exp(expo);
  };
  const double integral = quadrature::integrate(integrand, y0 - w, y0 + w,
                                                quad.nodes_per_panel,
                                                std::max(quad.panels, 16));
  const double ph = (static_cast<long>(spec.nu) % 2 == 0) ? 1.0 : -1.0;
  CrossTermReport rep;
  rep.eps = eps;
  rep.numeric_lhs = ph * integral / (2.0 * kPi * lam);
  const double s = x + xprime;
  rep.saddle_rhs =
      ph / std::sqrt(4.0 * kPi * lam) *
      std::exp(-s * s / (4.0 * lam) +
               spec.nu * (spec.nu - 1.0) * lam / (x * xprime) -
               (2.0 * eps / spec.hbar) *
                   continued_midpoint_potential(spec, -x * xprime));
  rep.rel_error = std::abs(rep.numeric_lhs - rep.saddle_rhs) / std::abs(rep.saddle_rhs);
  return rep;
}

CrossTermReport direct_product_check(double x, double xprime, double eps,
                                     const QuadratureSpec& quad) {
  require_positive(x, "x");
  require_positive(xprime, "xprime");
  quad.validate();
  const SystemSpec spec(1.0, 1.0, 2.0);
  const double lam = eps;
  const double x_up =
      quad.x_max > 0.0 ? quad.x_max : std::max(x, xprime) + 12.0 * std::sqrt(2.0 * lam);
  // Make sure the composite rule resolves the sqrt(lambda) peak.
  const int min_nodes = static_cast<int>(std::ceil(3.0 * x_up / std::sqrt(lam)));
  const int panels =
      std::max(quad.panels, min_nodes / quad.nodes_per_panel + 1);
  const double integral = quadrature::integrate(
      [&](double y) {
        return short_time_kernel(spec, x, y, eps) *
               short_time_kernel(spec, y, xprime, eps);
      },
      0.0, x_up, quad.nodes_per_panel, panels);
  CrossTermReport rep;
  rep.eps = eps;
  rep.numeric_lhs = integral;
  rep.saddle_rhs = short_time_kernel(spec, x, xprime, 2.0 * eps);
  rep.rel_error = std::abs(rep.numeric_lhs - rep.saddle_rhs) / std::abs(rep.saddle_rhs);
  return rep;
}

}  // namespace halfline

#include "halfline/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <sstream>

#include "halfline/decomposition.hpp"
#include "halfline/kernels.hpp"
#include "halfline/quadrature.hpp"
#include "halfline/slicing.hpp"
#include "halfline/specfun.hpp"

namespace halfline::verify {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

// splitmix64; deterministic across platforms, good enough for test points.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  double uniform(double lo, double hi) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return lo + (hi - lo) * (double(z >> 11) * 0x1.0p-53);
  }
};

class Suite {
 public:
  Suite(std::string only, double scale) : only_(std::move(only)), scale_(scale) {}

  void check(const std::string& name, const std::string& params, double tol,
             const std::function<double()>& residual_fn) {
    if (!only_.empty() && name.rfind(only_, 0) != 0) return;
    VerificationReport rep;
    rep.name = name;
    rep.params = params;
    rep.tolerance = tol * scale_;
    const auto t0 = std::chrono::steady_clock::now();
    rep.residual = residual_fn();
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    rep.pass = rep.residual <= rep.tolerance;
    reports_.push_back(rep);
  }

  std::vector<VerificationReport> take() { return std::move(reports_); }

 private:
  std::string only_;
  double scale_;
  std::vector<VerificationReport> reports_;
};

double max_rel(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// Quadrature oracle for the erf-identity integrands on [0, inf): the
// completed-square center and width give the truncation point.
double erf_identity_quadrature(const std::function<double(double)>& f,
                               const SaddleWidth& sw, double a, double b) {
  const double s = std::abs(a) / sw.lambda1 + std::abs(b) / sw.lambda2;
  const double x_up = 2.0 * sw.K * sw.K * s + 16.0 * sw.K;
  return quadrature::integrate_adaptive(f, 0.0, x_up, 1e-12);
}

void specfun_checks(Suite& s) {
  s.check("specfun-bessel-recurrence", "1000 random (mu,z)", 1e-10, [] {
    Rng rng(42);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double mu = rng.uniform(1.0, 9.0);
      const double z = rng.uniform(0.1, 100.0);
      const double lhs = specfun::bessel_i_scaled(mu - 1.0, z) -
                         specfun::bessel_i_scaled(mu + 1.0, z);
      const double rhs = (2.0 * mu / z) * specfun::bessel_i_scaled(mu, z);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return worst;
  });
  s.check("specfun-asymp-termination", "(1/2,1), (3/2,2), (5/2,3)", 0.0, [] {
    double worst = std::abs(specfun::asymp_coeff(0.5, 1));
    worst = std::max(worst, std::abs(specfun::asymp_coeff(1.5, 2)));
    worst = std::max(worst, std::abs(specfun::asymp_coeff(2.5, 3)));
    return worst;
  });
  s.check("specfun-erf-oddness", "erf/erfi at 50 points", 0.0, [] {
    Rng rng(7);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double x = rng.uniform(0.0, 5.0);
      worst = std::max(worst, std::abs(specfun::erf(-x) + specfun::erf(x)));
      worst = std::max(worst, std::abs(specfun::erfi(-x) + specfun::erfi(x)));
    }
    return worst;
  });
  s.check("specfun-erf-integral-identity", "a in {0.5,1,2}, 100 points", 1e-6, [] {
    double worst = 0.0;
    const double h = 1e-4;
    for (double a : {0.5, 1.0, 2.0}) {
      const auto F = [a](double x) {
        return std::exp(-a * a * x * x) / (a * kSqrtPi) + x * specfun::erf(a * x);
      };
      for (int i = 0; i < 100; ++i) {
        const double x = -2.0 + 4.0 * i / 99.0;
        const double deriv = (F(x + h) - F(x - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(deriv - specfun::erf(a * x)));
      }
    }
    return worst;
  });
  s.check("specfun-bessel-series-crosscheck", "mu in [0,4], z in [0,30]", 1e-12, [] {
    // Independent route: unscaled ascending series per term via tgamma.
    const auto oracle = [](double mu, double z) {
      double sum = 0.0;
      for (int k = 0; k < 200; ++k) {
        const double t = std::exp((2.0 * k + mu) * std::log(0.5 * z) -
                                  std::lgamma(k + 1.0) - std::lgamma(mu + k + 1.0));
        sum += t;
        if (t < 1e-18 * sum) break;
      }
      return sum * std::exp(-z);
    };
    double worst = 0.0;
    for (double mu : {0.0, 0.5, 1.0, 1.5, 2.5, 4.0})
      for (double z : {0.25, 1.0, 3.0, 8.0, 16.0, 22.0, 30.0})
        worst = std::max(worst, max_rel(specfun::bessel_i_scaled(mu, z), oracle(mu, z)));
    return worst;
  });
}

void kernel_checks(Suite& s) {
  s.check("kernels-symmetry", "nu in {0.5,1,2,3.5}, grid", 1e-15, [] {
    double worst = 0.0;
    for (double nu : {0.5, 1.0, 2.0, 3.5}) {
      const SystemSpec spec(1.0, 1.0, nu);
      for (double x : {0.3, 1.0, 2.5})
        for (double xp : {0.5, 1.7})
          worst = std::max(worst, max_rel(short_time_kernel(spec, x, xp, 0.3),
                                          short_time_kernel(spec, xp, x, 0.3)));
    }
    return worst;
  });
  s.check("kernels-positivity", "grid sweep", 0.0, [] {
    double worst = 0.0;  // residual: how far below zero anything dips
    for (double nu : {0.5, 1.0, 2.0, 3.0}) {
      const SystemSpec spec(1.0, 1.0, nu);
      for (double x = 0.1; x < 4.0; x += 0.37)
        for (double xp = 0.1; xp < 4.0; xp += 0.41)
          worst = std::min(worst, short_time_kernel(spec, x, xp, 0.5));
    }
    return worst < 0.0 ? -worst : 0.0;
  });
  s.check("kernels-boundary-scaling", "K/x^nu at x=1e-3 vs 1e-4", 1e-2, [] {
    double worst = 0.0;
    for (double nu : {1.0, 2.0, 3.0}) {
      const SystemSpec spec(1.0, 1.0, nu);
      const double r3 = short_time_kernel(spec, 1e-3, 1.0, 0.5) / std::pow(1e-3, nu);
      const double r4 = short_time_kernel(spec, 1e-4, 1.0, 0.5) / std::pow(1e-4, nu);
      worst = std::max(worst, std::abs(r3 / r4 - 1.0));
    }
    return worst;
  });
  s.check("kernels-nu1-reduction", "free kernel grid", 1e-14, [] {
    const SystemSpec spec(1.0, 1.0, 1.0);
    double worst = 0.0;
    for (double x : {0.2, 1.0, 2.0})
      for (double xp : {0.4, 1.5})
        for (double eps : {0.1, 1.0})
          worst = std::max(worst, max_rel(short_time_kernel(spec, x, xp, eps),
                                          exact_free_halfline(1, 1, x, xp, eps)));
    return worst;
  });
  s.check("kernels-spectral-agreement", "5x5x3 grid", 1e-6, [] {
    double worst = 0.0;
    for (double nu : {1.0, 2.0}) {
      const SystemSpec spec(1.0, 1.0, nu);
      for (double x : {0.4, 0.9, 1.4, 1.9, 2.4})
        for (double xp : {0.4, 0.9, 1.4, 1.9, 2.4})
          for (double eps : {0.2, 0.5, 1.0})
            worst = std::max(worst, max_rel(spectral_kernel(spec, x, xp, eps),
                                            short_time_kernel(spec, x, xp, eps)));
    }
    return worst;
  });
  s.check("kernels-oscillator-omega0", "omega*beta = 1e-4", 1e-6, [] {
    double worst = 0.0;
    for (double nu : {1.0, 2.0, 3.5}) {
      const SystemSpec spec(1.0, 1.0, nu);
      const double free_k = short_time_kernel(spec, 1.1, 0.8, 1.0);
      const double osc = radial_oscillator_kernel(nu, 1e-4, 1.0, 1.0, 1.1, 0.8, 1.0);
      worst = std::max(worst, max_rel(osc, free_k));
    }
    return worst;
  });
  s.check("kernels-heat-equation", "h = 1e-3 and h/2", 1e-5, [] {
    const auto K = [](double a, double b, double beta) {
      return exact_free_halfline(1.0, 1.0, a, b, beta);
    };
    double worst = 0.0;
    for (auto [a, b, beta] : {std::tuple{1.0, 1.0, 1.0}, {2.0, 2.0, 0.5}}) {
      const double r1 = std::abs(heat_equation_residual(K, a, b, beta, 1e-3, 1e-3));
      const double r2 = std::abs(heat_equation_residual(K, a, b, beta, 5e-4, 5e-4));
      worst = std::max(worst, r1);
      // second-order stencil: expect ~4x shrinkage, allow slack
      if (r1 / r2 < 2.0) worst = std::max(worst, 1.0);
    }
    return worst;
  });
  s.check("kernels-orthogonality", "Weber-Schafheitlin cases", 1e-8, [] {
    double worst = 0.0;
    worst = std::max(worst, orthogonality_check(SystemSpec(1, 1, 1.0), 1.0, 1.0, 1.0));
    worst = std::max(worst, orthogonality_check(SystemSpec(1, 1, 2.0), 2.0, 1.0, 0.5));
    return worst;
  });
}

void slicing_checks(Suite& s) {
  s.check("slicing-chapman-kolmogorov", "nu in {1/2..7/2}, eps in {0.1,0.5,1}", 1e-8, [] {
    double worst = 0.0;
    QuadratureSpec quad;
    quad.x_max = 16.0;
    for (double nu : {0.5, 1.0, 1.5, 2.0, 3.0, 3.5})
      for (double eps : {0.1, 0.5, 1.0}) {
        const SystemSpec spec(1.0, 1.0, nu);
        const auto k1 = build_kernel_matrix(spec, quad, eps);
        const auto k2 = compose(k1, k1);
        // interior: far enough from x_max that the truncated Gaussian
        // tail sits below the 1e-8 bar
        const double cut = quad.x_max - 7.0 * std::sqrt(2.0 * eps);
        for (std::size_t i = 0; i < k2.size(); ++i) {
          if (k2.nodes[i] > cut) continue;
          for (std::size_t j = 0; j <= i; ++j) {
            if (k2.nodes[j] > cut) continue;
            const double exact =
                short_time_kernel(spec, k2.nodes[i], k2.nodes[j], 2.0 * eps);
            if (exact < 1e-280) continue;
            worst = std::max(worst, max_rel(k2.at(i, j), exact));
          }
        }
      }
    return worst;
  });
  s.check("slicing-associativity", "three eps values", 1e-12, [] {
    QuadratureSpec quad;
    quad.x_max = 10.0;
    const SystemSpec spec(1.0, 1.0, 2.0);
    const auto a = build_kernel_matrix(spec, quad, 0.2);
    const auto b = build_kernel_matrix(spec, quad, 0.3);
    const auto c = build_kernel_matrix(spec, quad, 0.5);
    const auto left = compose(compose(a, b), c);
    const auto right = compose(a, compose(b, c));
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < left.values.size(); ++i)
      scale = std::max(scale, std::abs(left.values[i]));
    for (std::size_t i = 0; i < left.values.size(); ++i)
      worst = std::max(worst, std::abs(left.values[i] - right.values[i]) / scale);
    return worst;
  });
  s.check("slicing-serial-parallel-agreement", "build + compose", 1e-15, [] {
    QuadratureSpec quad;
    quad.x_max = 10.0;
    quad.nodes_per_panel = 24;
    quad.panels = 6;
    const SystemSpec spec(1.0, 1.0, 1.5);
    const auto p = build_kernel_matrix(spec, quad, 0.3);
    const auto q = build_kernel_matrix_serial(spec, quad, 0.3);
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < p.values.size(); ++i)
      scale = std::max(scale, std::abs(p.values[i]));
    for (std::size_t i = 0; i < p.values.size(); ++i)
      worst = std::max(worst, std::abs(p.values[i] - q.values[i]) / scale);
    const auto cp = compose(p, p);
    const auto cq = compose_serial(q, q);
    for (std::size_t i = 0; i < cp.values.size(); ++i)
      worst = std::max(worst, std::abs(cp.values[i] - cq.values[i]) / scale);
    return worst;
  });
  s.check("slicing-free-exact", "nu=1, N in {1,4,16}", 1e-8, [] {
    const SystemSpec spec(1.0, 1.0, 1.0);
    QuadratureSpec quad;
    double worst = 0.0;
    for (int n : {1, 4, 16})
      for (double a : {0.2, 1.0, 3.0})
        for (double b : {0.6, 2.2}) {
          const double got = time_sliced_kernel(spec, a, b, 1.0, n, quad);
          worst = std::max(worst, max_rel(got, exact_free_halfline(1, 1, a, b, 1.0)));
        }
    return worst;
  });
  s.check("slicing-truncation-robustness", "x_max vs 1.5 x_max", 1e-12, [] {
    const SystemSpec spec(1.0, 1.0, 2.0);
    QuadratureSpec quad;
    quad.x_max = 14.0;
    QuadratureSpec wide = quad;
    wide.x_max = 21.0;
    wide.panels = 12;  // keep node density fixed
    const double a = time_sliced_kernel(spec, 1.0, 1.3, 1.0, 8, quad);
    const double b = time_sliced_kernel(spec, 1.0, 1.3, 1.0, 8, wide);
    return std::abs(a - b) / std::abs(a);
  });
  s.check("slicing-harmonic-convergence", "nu=2, omega=1, N up to 256", 0.0, [] {
    const SystemSpec spec(1.0, 1.0, 2.0, Potential::harmonic(1.0));
    QuadratureSpec quad;
    const auto recs =
        convergence_study(spec, 1.0, 1.0, 1.0, {16, 32, 64, 128, 256}, quad);
    // residual counts violations of monotone decay and of order near 1
    double bad = 0.0;
    for (std::size_t i = 1; i < recs.size(); ++i) {
      if (recs[i].max_rel_error >= recs[i - 1].max_rel_error) bad += 1.0;
      if (i >= 2 && (recs[i].observed_order < 0.8 || recs[i].observed_order > 1.3))
        bad += 1.0;
    }
    return bad;
  });
}

void decomposition_checks(Suite& s) {
  s.check("decomp-phase-table", "nu in {1,2,3,4,3/2}", 1e-15, [] {
    using namespace std::complex_literals;
    double worst = 0.0;
    worst = std::max(worst, std::abs(reflection_phase(1.0, +1) - (-1.0 + 0.0i)));
    worst = std::max(worst, std::abs(reflection_phase(2.0, +1) - (1.0 + 0.0i)));
    worst = std::max(worst, std::abs(reflection_phase(3.0, +1) - (-1.0 + 0.0i)));
    worst = std::max(worst, std::abs(reflection_phase(4.0, +1) - (1.0 + 0.0i)));
    worst = std::max(worst, std::abs(reflection_phase(1.5, +1) - (0.0 - 1.0i)));
    worst = std::max(worst, std::abs(reflection_phase(2.5, -1) -
                                     std::exp(-2.5i * kPi)));
    return worst;
  });
  s.check("decomp-branch-conjugacy", "nu = 7/3", 1e-15, [] {
    const SystemSpec spec(1.0, 1.0, 7.0 / 3.0);
    const auto plus = decompose(spec, 1.2, 0.8, 0.05, +1);
    const auto minus = decompose(spec, 1.2, 0.8, 0.05, -1);
    return std::abs(minus.total - std::conj(plus.total));
  });
  s.check("decomp-nu1-exactness", "V=0, every eps", 1e-14, [] {
    const SystemSpec spec(1.0, 1.0, 1.0);
    double worst = 0.0;
    for (double eps : {0.05, 0.2, 1.0})
      for (double x : {0.5, 1.0, 2.0})
        for (double xp : {0.7, 1.6}) {
          const auto d = decompose(spec, x, xp, eps);
          worst = std::max(worst, max_rel(d.total.real(),
                                          short_time_kernel(spec, x, xp, eps)));
        }
    return worst;
  });
  s.check("decomp-asymptotic-validity", "nu=2, lambda halving", 0.3, [] {
    const SystemSpec spec(1.0, 1.0, 2.0);
    const auto err = [&](double lam) {
      const auto d = decompose(spec, 1.0, 1.0, lam);
      return std::abs(d.total.real() - short_time_kernel(spec, 1.0, 1.0, lam)) /
             short_time_kernel(spec, 1.0, 1.0, lam);
    };
    const double e1 = err(0.08), e2 = err(0.04);
    return std::abs(e1 / e2 / 4.0 - 1.0);  // quadratic shrinkage within 30%
  });
  s.check("decomp-nu2-factored", "sum vs kernel at small lambda", 1e-4, [] {
    const auto [t1, t2] = nu2_factored_form(1.0, 1.0, 0.01);
    const SystemSpec spec(1.0, 1.0, 2.0);
    return max_rel(t1 + t2, short_time_kernel(spec, 1.0, 1.0, 0.01));
  });

  // erf-identity family: closed forms vs quadrature of the defining
  // integrals on the 3x3x2 grid.
  const std::vector<std::pair<double, double>> lam_pairs = {{0.3, 1.0}, {1.0, 0.3}};
  const double abc[3] = {0.3, 0.7, 1.2};
  s.check("erf-identities-coshcosh", "3x3x2 grid", 1e-8, [=] {
    double worst = 0.0;
    for (auto [l1, l2] : lam_pairs) {
      const SaddleWidth sw(l1, l2);
      for (double a : abc)
        for (double b : abc) {
          const double num = erf_identity_quadrature(
              [&, a, b](double x) {
                return std::exp(-x * x / (4.0 * sw.K * sw.K)) *
                       std::cosh(a * x / l1) * std::cosh(b * x / l2);
              },
              sw, a, b);
          worst = std::max(worst, max_rel(I_ab(a, b, sw), num));
        }
    }
    return worst;
  });
  s.check("erf-identities-sinhcosh", "3x3x2 grid", 1e-8, [=] {
    double worst = 0.0;
    for (auto [l1, l2] : lam_pairs) {
      const SaddleWidth sw(l1, l2);
      for (double a : abc)
        for (double b : abc) {
          const double num = erf_identity_quadrature(
              [&, a, b](double x) {
                return std::exp(-x * x / (4.0 * sw.K * sw.K)) * (l1 / (a * x)) *
                       std::sinh(a * x / l1) * std::cosh(b * x / l2);
              },
              sw, a, b);
          worst = std::max(
              worst, max_rel(sinhcosh_integral(a, b, sw, SinhCoshKind::SinhCosh), num));
        }
    }
    return worst;
  });
  s.check("erf-identities-coshsinh", "3x3x2 grid", 1e-8, [=] {
    double worst = 0.0;
    for (auto [l1, l2] : lam_pairs) {
      const SaddleWidth sw(l1, l2);
      for (double a : abc)
        for (double b : abc) {
          const double num = erf_identity_quadrature(
              [&, a, b](double x) {
                return std::exp(-x * x / (4.0 * sw.K * sw.K)) * (l2 / (b * x)) *
                       std::cosh(a * x / l1) * std::sinh(b * x / l2);
              },
              sw, a, b);
          worst = std::max(
              worst, max_rel(sinhcosh_integral(a, b, sw, SinhCoshKind::CoshSinh), num));
        }
    }
    return worst;
  });
  s.check("erf-identities-sinhsinh", "3x3x2 grid", 1e-8, [=] {
    double worst = 0.0;
    for (auto [l1, l2] : lam_pairs) {
      const SaddleWidth sw(l1, l2);
      for (double a : abc)
        for (double b : abc) {
          const double num = erf_identity_quadrature(
              [&, a, b](double x) {
                return std::exp(-x * x / (4.0 * sw.K * sw.K)) *
                       (l1 * l2 / (a * b * x * x)) * std::sinh(a * x / l1) *
                       std::sinh(b * x / l2);
              },
              sw, a, b);
          worst = std::max(
              worst, max_rel(sinhcosh_integral(a, b, sw, SinhCoshKind::SinhSinh), num));
        }
    }
    return worst;
  });

  s.check("decomp-nu2-closed-compose", "9 points", 1e-10, [] {
    const SystemSpec spec(1.0, 1.0, 2.0);
    double worst = 0.0;
    for (auto [a, b] : {std::pair{1.0, 1.0}, {0.7, 1.4}, {2.0, 0.6}})
      for (auto [e1, e2] : {std::pair{0.3, 0.7}, {0.5, 0.5}, {0.2, 0.4}})
        worst = std::max(worst, max_rel(compose_closed_form_nu2(a, b, e1, e2),
                                        short_time_kernel(spec, a, b, e1 + e2)));
    return worst;
  });
  s.check("decomp-direct-product", "nu=2 exact composition", 1e-8, [] {
    QuadratureSpec quad;
    double worst = direct_product_check(1.0, 1.0, 0.1, quad).rel_error;
    worst = std::max(worst, direct_product_check(2.0, 0.5, 0.05, quad).rel_error);
    return worst;
  });
  s.check("decomp-cross-term", "nu=2, eps in {0.01,0.005}", 0.0, [] {
    const SystemSpec spec(1.0, 1.0, 2.0);
    QuadratureSpec quad;
    double bad = 0.0;
    const auto r1 = cross_term_check(spec, 1.0, 1.0, 0.01, quad);
    const auto r2 = cross_term_check(spec, 1.0, 1.0, 0.005, quad);
    if (r1.rel_error >= 5.0 * 0.01) bad += 1.0;
    if (r2.rel_error >= 5.0 * 0.005) bad += 1.0;
    if (r2.rel_error >= r1.rel_error) bad += 1.0;  // must shrink with eps
    return bad;
  });
}

}  // namespace

std::vector<VerificationReport> run_verification(const std::string& only,
                                                 double tolerance_scale) {
  Suite s(only, tolerance_scale);
  specfun_checks(s);
  kernel_checks(s);
  slicing_checks(s);
  decomposition_checks(s);
  return s.take();
}

}  // namespace halfline::verify

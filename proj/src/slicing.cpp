#include "halfline/slicing.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "halfline/quadrature.hpp"

namespace halfline {

void QuadratureSpec::validate() const {
  if (nodes_per_panel < 2)
    throw std::invalid_argument("QuadratureSpec: nodes_per_panel must be >= 2");
  if (panels < 1) throw std::invalid_argument("QuadratureSpec: panels must be >= 1");
  if (!(tail_tolerance > 0.0))
    throw std::invalid_argument("QuadratureSpec: tail_tolerance must be > 0");
  if (x_max < 0.0) throw std::invalid_argument("QuadratureSpec: x_max must be >= 0");
}

double QuadratureSpec::default_x_max(const SystemSpec& spec, double a, double b,
                                     double beta) {
  const double lam = spec.hbar * beta / spec.mass;
  double omega2 = 0.0;
  if (spec.potential.kind == Potential::Kind::Harmonic)
    omega2 = spec.potential.omega * spec.potential.omega;
  return std::max(a, b) + 12.0 * std::sqrt(lam) +
         3.0 / std::sqrt(spec.mass * omega2 * beta / spec.hbar + 1.0);
}

namespace {

KernelMatrix sample_matrix(const SystemSpec& spec, const QuadratureSpec& quad,
                           double eps, bool parallel) {
  quad.validate();
  if (!(quad.x_max > 0.0))
    throw std::invalid_argument("build_kernel_matrix: x_max must be set");
  const KernelParams kp(spec, eps);
  const double spacing = quad.x_max / quad.total_nodes();
  if (spacing > std::sqrt(kp.lambda) / 3.0)
    std::fprintf(stderr,
                 "warning: node spacing %.3g exceeds sqrt(lambda)/3 = %.3g; "
                 "the short-time peak is under-resolved\n",
                 spacing, std::sqrt(kp.lambda) / 3.0);
  auto rule = quadrature::composite_gauss_legendre(0.0, quad.x_max,
                                                   quad.nodes_per_panel, quad.panels);
  KernelMatrix m;
  m.nodes = std::move(rule.nodes);
  m.weights = std::move(rule.weights);
  m.eps_total = eps;
  const std::size_t n = m.nodes.size();
  m.values.assign(n * n, 0.0);
  const auto fill_row = [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j)
      m.at(i, j) = short_time_kernel(spec, m.nodes[i], m.nodes[j], eps);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < static_cast<long>(n); ++i) fill_row(i);
  } else {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m.at(i, j) = m.at(j, i);
  return m;
}

void check_same_grid(const KernelMatrix& a, const KernelMatrix& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compose: kernel matrices have different grids");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.nodes[i] != b.nodes[i] || a.weights[i] != b.weights[i])
      throw std::invalid_argument("compose: kernel matrices have different grids");
}

KernelMatrix product(const KernelMatrix& a, const KernelMatrix& b, bool parallel) {
  check_same_grid(a, b);
  const std::size_t n = a.size();
  KernelMatrix c;
  c.nodes = a.nodes;
  c.weights = a.weights;
  c.eps_total = a.eps_total + b.eps_total;
  c.values.assign(n * n, 0.0);
  // Fold the weights into B once, then a plain row-major GEMM.
  std::vector<double> wb(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) wb[k * n + j] = a.weights[k] * b.at(k, j);
  const auto row = [&](std::size_t i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a.at(i, k);
      const double* src = &wb[k * n];
      double* dst = &c.values[i * n];
      for (std::size_t j = 0; j < n; ++j) dst[j] += aik * src[j];
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i) row(i);
  } else {
    for (std::size_t i = 0; i < n; ++i) row(i);
  }
  return c;
}

void check_tail_bound(const SystemSpec& spec, const QuadratureSpec& quad,
                      double a, double b, double beta) {
  const double lam_total = spec.hbar * beta / spec.mass;
  const double gap = quad.x_max - std::max(a, b);
  const double tail = std::exp(-gap * gap / (2.0 * lam_total));
  if (gap <= 0.0 || tail > quad.tail_tolerance)
    throw std::runtime_error("time_sliced_kernel: Gaussian tail beyond x_max "
                             "exceeds tail_tolerance; enlarge x_max");
}

QuadratureSpec resolved(const SystemSpec& spec, QuadratureSpec quad, double a,
                        double b, double beta) {
  if (quad.x_max == 0.0) quad.x_max = QuadratureSpec::default_x_max(spec, a, b, beta);
  quad.validate();
  return quad;
}

}  // namespace

KernelMatrix build_kernel_matrix(const SystemSpec& spec,
                                 const QuadratureSpec& quad, double eps) {
  return sample_matrix(spec, quad, eps, true);
}

KernelMatrix build_kernel_matrix_serial(const SystemSpec& spec,
                                        const QuadratureSpec& quad, double eps) {
  return sample_matrix(spec, quad, eps, false);
}

KernelMatrix compose(const KernelMatrix& a, const KernelMatrix& b) {
  return product(a, b, true);
}

KernelMatrix compose_serial(const KernelMatrix& a, const KernelMatrix& b) {
  return product(a, b, false);
}

double time_sliced_kernel(const SystemSpec& spec, double a, double b,
                          double beta, int n_slices, const QuadratureSpec& quad_in) {
  if (n_slices < 1) throw std::invalid_argument("time_sliced_kernel: N must be >= 1");
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("time_sliced_kernel: endpoints must be > 0");
  if (!(beta > 0.0)) throw std::invalid_argument("time_sliced_kernel: beta must be > 0");
  if (n_slices == 1) return short_time_kernel(spec, a, b, beta);

  const QuadratureSpec quad = resolved(spec, quad_in, a, b, beta);
  if (a > 0.8 * quad.x_max || b > 0.8 * quad.x_max)
    throw std::invalid_argument(
        "time_sliced_kernel: endpoints must lie below 0.8 * x_max");
  check_tail_bound(spec, quad, a, b, beta);

  const double eps = beta / n_slices;
  const KernelMatrix m = build_kernel_matrix(spec, quad, eps);
  const std::size_t n = m.size();

  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j)
    v[j] = short_time_kernel(spec, m.nodes[j], b, eps);
  std::vector<double> wv(n), next(n);
  for (int step = 0; step < n_slices - 2; ++step) {
    for (std::size_t j = 0; j < n; ++j) wv[j] = m.weights[j] * v[j];
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i) {
      double s = 0.0;
      const double* row = &m.values[i * n];
      for (std::size_t j = 0; j < n; ++j) s += row[j] * wv[j];
      next[i] = s;
    }
    v.swap(next);
  }
  double out = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    out += short_time_kernel(spec, a, m.nodes[i], eps) * m.weights[i] * v[i];
  return out;
}

double exact_reference_kernel(const SystemSpec& spec, double a, double b,
                              double beta) {
  if (spec.potential.is_zero()) return short_time_kernel(spec, a, b, beta);
  if (spec.potential.kind == Potential::Kind::Harmonic)
    return radial_oscillator_kernel(spec.nu, spec.potential.omega, spec.mass,
                                    spec.hbar, a, b, beta);
  throw std::invalid_argument("no exact reference kernel for potential " +
                              spec.potential.describe());
}

std::vector<ConvergenceRecord> convergence_study(
    const SystemSpec& spec, double a, double b, double beta,
    const std::vector<int>& n_list, const QuadratureSpec& quad,
    bool allow_missing_reference) {
  double exact = 0.0;
  bool have_exact = true;
  try {
    exact = exact_reference_kernel(spec, a, b, beta);
  } catch (const std::invalid_argument&) {
    if (!allow_missing_reference) throw;
    have_exact = false;
  }
  std::vector<ConvergenceRecord> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    ConvergenceRecord rec;
    rec.n_slices = n;
    rec.eps = beta / n;
    rec.value = time_sliced_kernel(spec, a, b, beta, n, quad);
    if (have_exact) rec.max_rel_error = std::abs(rec.value - exact) / std::abs(exact);
    if (have_exact && out.size() >= 1) {
      const auto& prev = out.back();
      if (prev.max_rel_error > 0.0 && rec.max_rel_error > 0.0 && n != prev.n_slices)
        rec.observed_order = std::log(prev.max_rel_error / rec.max_rel_error) /
                             std::log(double(n) / prev.n_slices);
    }
    out.push_back(rec);
  }
  return out;
}

}  // namespace halfline

#ifndef HALFLINE_SLICING_HPP
#define HALFLINE_SLICING_HPP

#include <cstddef>
#include <vector>

#include "halfline/kernels.hpp"

// Half-line quadrature grids, kernel matrices sampled on them, semigroup
// composition and time-sliced convergence studies.
//
// Matrix builds and products run OpenMP-parallel by default; the *_serial
// variants are the plain reference loops kept for testing and benchmarks.

namespace halfline {

struct QuadratureSpec {
  int nodes_per_panel = 48;
  int panels = 8;
  double x_max = 0.0;  // 0 picks the default below at use time
  double tail_tolerance = 1e-12;

  int total_nodes() const { return nodes_per_panel * panels; }
  void validate() const;

  // max(a,b) + 12 sqrt(hbar beta / m) + 3 / sqrt(m omega^2 beta / hbar + 1)
  static double default_x_max(const SystemSpec& spec, double a, double b,
                              double beta);
};

struct KernelMatrix {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive quadrature weights
  std::vector<double> values;   // row-major n x n
  double eps_total = 0.0;

  std::size_t size() const { return nodes.size(); }
  double& at(std::size_t i, std::size_t j) { return values[i * size() + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * size() + j]; }
};

struct ConvergenceRecord {
  int n_slices = 0;
  double eps = 0.0;
  double value = 0.0;
  double max_rel_error = -1.0;   // negative: no exact reference
  double observed_order = 0.0;   // 0 until >= 3 records exist
};

KernelMatrix build_kernel_matrix(const SystemSpec& spec,
                                 const QuadratureSpec& quad, double eps);
KernelMatrix build_kernel_matrix_serial(const SystemSpec& spec,
                                        const QuadratureSpec& quad, double eps);

// result[i][j] = sum_k A[i][k] w_k B[k][j]; eps_total adds.
KernelMatrix compose(const KernelMatrix& a, const KernelMatrix& b);
KernelMatrix compose_serial(const KernelMatrix& a, const KernelMatrix& b);

// N-slice Chapman-Kolmogorov chain with eps = beta / N. The first and last
// factors are evaluated at the exact endpoints a, b; only the inner
// integrals live on the grid.
double time_sliced_kernel(const SystemSpec& spec, double a, double b,
                          double beta, int n_slices, const QuadratureSpec& quad);

// Errors of the sliced kernel against the exact reference (V = 0: the
// finite-time nu-kernel; Harmonic: the radial oscillator kernel). Other
// potentials are rejected unless allow_missing_reference, in which case
// max_rel_error stays negative.
std::vector<ConvergenceRecord> convergence_study(
    const SystemSpec& spec, double a, double b, double beta,
    const std::vector<int>& n_list, const QuadratureSpec& quad,
    bool allow_missing_reference = false);

// Exact reference kernel used by convergence_study; throws if none exists.
double exact_reference_kernel(const SystemSpec& spec, double a, double b,
                              double beta);

}  // namespace halfline

#endif

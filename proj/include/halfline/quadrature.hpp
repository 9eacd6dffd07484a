#ifndef HALFLINE_QUADRATURE_HPP
#define HALFLINE_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace halfline::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on P_n.
Rule gauss_legendre(int n);

// n-point Gauss-Legendre per panel, composite over `panels` equal panels
// of [lo, hi]. Nodes come out strictly increasing.
Rule composite_gauss_legendre(double lo, double hi, int nodes_per_panel,
                              int panels);

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 int nodes_per_panel, int panels);

// Panel-doubling refinement until two successive levels agree to rel_tol
// (or abs floor). Throws std::runtime_error on non-convergence.
double integrate_adaptive(const std::function<double(double)>& f, double lo,
                          double hi, double rel_tol, int max_doublings = 12);

}  // namespace halfline::quadrature

#endif

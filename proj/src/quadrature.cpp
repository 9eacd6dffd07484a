#include "halfline/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace halfline::quadrature {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

std::mutex cache_mutex;
std::map<int, Rule> rule_cache;
}  // namespace

Rule gauss_legendre(int n) {
  if (n < 2) throw std::invalid_argument("gauss_legendre: need n >= 2");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = rule_cache.find(n);
    if (it != rule_cache.end()) return it->second;
  }
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z -= p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.weights[n - 1 - i] = r.weights[i];
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  rule_cache[n] = r;
  return r;
}

Rule composite_gauss_legendre(double lo, double hi, int nodes_per_panel,
                              int panels) {
  if (!(hi > lo)) throw std::invalid_argument("composite_gauss_legendre: hi <= lo");
  if (panels < 1) throw std::invalid_argument("composite_gauss_legendre: panels < 1");
  const Rule base = gauss_legendre(nodes_per_panel);
  Rule out;
  out.nodes.reserve(static_cast<std::size_t>(nodes_per_panel) * panels);
  out.weights.reserve(out.nodes.capacity());
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * h;
    for (int i = 0; i < nodes_per_panel; ++i) {
      out.nodes.push_back(a + 0.5 * h * (base.nodes[i] + 1.0));
      out.weights.push_back(0.5 * h * base.weights[i]);
    }
  }
  return out;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 int nodes_per_panel, int panels) {
  const Rule r = composite_gauss_legendre(lo, hi, nodes_per_panel, panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * f(r.nodes[i]);
  return sum;
}

double integrate_adaptive(const std::function<double(double)>& f, double lo,
                          double hi, double rel_tol, int max_doublings) {
  int panels = 4;
  double prev = integrate(f, lo, hi, 16, panels);
  for (int level = 0; level < max_doublings; ++level) {
    panels *= 2;
    const double cur = integrate(f, lo, hi, 16, panels);
    const double scale = std::max(std::abs(cur), 1e-300);
    if (std::abs(cur - prev) <= rel_tol * scale) return cur;
    prev = cur;
  }
  throw std::runtime_error("integrate_adaptive: did not converge");
}

}  // namespace halfline::quadrature

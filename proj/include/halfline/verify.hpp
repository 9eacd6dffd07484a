#ifndef HALFLINE_VERIFY_HPP
#define HALFLINE_VERIFY_HPP

#include <string>
#include <vector>

namespace halfline::verify {

struct VerificationReport {
  std::string name;
  std::string params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_ms = 0.0;
};

// Runs every invariant check whose name starts with `only` (empty: all).
// tolerance_scale multiplies every tolerance (values < 1 tighten).
std::vector<VerificationReport> run_verification(const std::string& only = "",
                                                 double tolerance_scale = 1.0);

}  // namespace halfline::verify

#endif

#pragma once

#include <string>
#include <vector>

#include "pqbs/modulus.hpp"
#include "pqbs/moments.hpp"

namespace pqbs {

struct BoundRow {
  double x = 0.0;
  double lhs = 0.0;    // |B(f;x) - f(x)|
  double rhs = 0.0;    // theorem bound
  double delta = 0.0;  // radius entering the bound
  bool pass = false;
};

struct BoundReport {
  std::string function;
  std::string kind;        // "modulus" or "lipschitz"
  std::string omega_mode;  // "inflated" or "grid-estimate" ("" for lipschitz)
  int m = 0;
  int ell = 0;
  double p = 0.0, q = 0.0;
  double tolerance = 0.0;
  std::vector<BoundRow> rows;

  int violations() const {
    int v = 0;
    for (const auto& r : rows) v += r.pass ? 0 : 1;
    return v;
  }
  bool all_pass() const { return violations() == 0; }
};

/// Pointwise check of |B(f;x) - f(x)| <= 2 omega(f, delta_m(x)). The
/// modulus is a grid estimate over [0, ell+1]; when the function carries a
/// smoothness constant the estimate is inflated into an upper bound so a
/// coarse grid can never report a spurious violation, and omega_mode says
/// which variant was used. Pass tolerance: 1e-9 + 1e-6 * rhs + extra_tol.
BoundReport modulus_bound_check(const OperatorSpec& spec, const FunctionHandle& f,
                                const Eigen::ArrayXd& xs, int omega_grid = 2001,
                                double extra_tol = 0.0);

/// Pointwise check of |B(f;x) - f(x)| <= M * delta_m(x)^nu for f in
/// Lip_M(nu) (membership is the caller's assertion). nu must be in (0,1].
BoundReport lipschitz_bound_check(const OperatorSpec& spec, const FunctionHandle& f,
                                  double lip_m, double nu, const Eigen::ArrayXd& xs,
                                  double extra_tol = 0.0);

}  // namespace pqbs

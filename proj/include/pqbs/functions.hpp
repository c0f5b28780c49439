#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace pqbs {

/// A named real function on [0, domain_end], the argument an operator is
/// applied to. Derivatives are optional (empty std::function when absent).
/// smooth_m/smooth_nu give a bound |f(s)-f(t)| <= M |s-t|^nu valid on the
/// domain when known (nu = 1 is a Lipschitz constant); modulus estimates
/// use it to upgrade grid estimates into upper bounds.
struct FunctionHandle {
  std::string name;
  double domain_end = 1.0;
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> second_deriv;
  double smooth_m = std::numeric_limits<double>::quiet_NaN();
  double smooth_nu = 1.0;

  bool has_smoothness() const { return !std::isnan(smooth_m); }
  double operator()(double t) const { return value(t); }
};

/// Resolve a registry name (e0, e1, e2, e3, exp, sin_scaled, abs_half,
/// sqrt_abs) or "file:PATH" for a sampled function. The handle's domain is
/// [0, ell+1]; ell-dependent entries (sin_scaled, smoothness constants) are
/// built for that domain. Throws std::invalid_argument on unknown names.
FunctionHandle make_function(const std::string& name, int ell = 0);

/// Piecewise-linear interpolant of a two-column CSV (x,value), constant
/// beyond the sampled range, defined on [0, ell+1].
FunctionHandle make_sampled_function(const std::string& csv_path, int ell = 0);

const std::vector<std::string>& builtin_function_names();

}  // namespace pqbs

#include "pqbs/moments.hpp"

#include <cmath>

#include "pqbs/detail/scaled.hpp"

namespace pqbs {

namespace {

// Moment coefficients through r = q/p, so no huge p-powers appear:
//   A = [m+ell]/[m] = p^ell [m+ell]_r / [m]_r
//   B = [m+ell-1]/[m] = p^{ell-1} [m+ell-1]_r / [m]_r
//   V = [m+ell] p^{m+ell-1} / [m]^2 = p^{2 ell} [m+ell]_r / [m]_r^2
struct MomentCoeffs {
  double A, B, V;

  explicit MomentCoeffs(const OperatorSpec& spec) {
    const int n = spec.degree();
    const double r = spec.params.ratio();
    double rint_m = 0.0, rint_n1 = 0.0, rint_n = 0.0;
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) {
      acc = 1.0 + r * acc;
      if (j == spec.m) rint_m = acc;
      if (j == n - 1) rint_n1 = acc;
      if (j == n) rint_n = acc;
    }
    const double p_ell = detail::pow_scaled(spec.params.p, spec.ell).value();
    A = p_ell * rint_n / rint_m;
    B = p_ell / spec.params.p * rint_n1 / rint_m;
    V = p_ell * p_ell * rint_n / (rint_m * rint_m);
  }
};

}  // namespace

MomentSet moments_closed_form(const OperatorSpec& spec, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("moments_closed_form: x must lie in [0,1]");
  const MomentCoeffs c(spec);
  MomentSet ms;
  ms.x = x;
  ms.e0 = 1.0;
  ms.e1 = c.A * x;
  ms.e2 = c.V * x + spec.params.q * c.A * c.B * x * x;
  ms.central1 = (c.A - 1.0) * x;
  ms.central2 = ms.central1 * ms.central1 + c.V * x * (1.0 - x);
  return ms;
}

double delta_m(const OperatorSpec& spec, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("delta_m: x must lie in [0,1]");
  const MomentCoeffs c(spec);
  return x * std::abs(c.A - 1.0) + std::sqrt(c.V * x * (1.0 - x));
}

double delta_m_squared(const OperatorSpec& spec, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("delta_m_squared: x must lie in [0,1]");
  const MomentCoeffs c(spec);
  const double bias = (c.A - 1.0) * x;
  return bias * bias + c.V * x * (1.0 - x);
}

}  // namespace pqbs

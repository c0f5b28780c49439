#include "pqbs/bounds.hpp"

#include <cmath>

namespace pqbs {

namespace {

BoundReport report_skeleton(const OperatorSpec& spec, const FunctionHandle& f,
                            std::string kind) {
  BoundReport rep;
  rep.function = f.name;
  rep.kind = std::move(kind);
  rep.m = spec.m;
  rep.ell = spec.ell;
  rep.p = spec.params.p;
  rep.q = spec.params.q;
  return rep;
}

}  // namespace

BoundReport modulus_bound_check(const OperatorSpec& spec, const FunctionHandle& f,
                                const Eigen::ArrayXd& xs, int omega_grid,
                                double extra_tol) {
  BoundReport rep = report_skeleton(spec, f, "modulus");
  const ModulusTable table(f, {0.0, static_cast<double>(spec.ell) + 1.0},
                           omega_grid);
  rep.omega_mode = table.inflates() ? "inflated" : "grid-estimate";
  rep.tolerance = extra_tol;

  const Eigen::ArrayXd values = evaluate_grid(spec, f, xs);
  rep.rows.reserve(xs.size());
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    BoundRow row;
    row.x = xs[i];
    row.delta = delta_m(spec, xs[i]);
    row.lhs = std::abs(values[i] - f(xs[i]));
    row.rhs = 2.0 * table.omega_upper(row.delta);
    row.pass = row.lhs <= row.rhs + 1e-9 + 1e-6 * row.rhs + extra_tol;
    rep.rows.push_back(row);
  }
  return rep;
}

BoundReport lipschitz_bound_check(const OperatorSpec& spec, const FunctionHandle& f,
                                  double lip_m, double nu, const Eigen::ArrayXd& xs,
                                  double extra_tol) {
  if (!(nu > 0.0 && nu <= 1.0))
    throw std::domain_error("lipschitz_bound_check: nu must lie in (0,1]");
  BoundReport rep = report_skeleton(spec, f, "lipschitz");
  rep.tolerance = extra_tol;

  const Eigen::ArrayXd values = evaluate_grid(spec, f, xs);
  rep.rows.reserve(xs.size());
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    BoundRow row;
    row.x = xs[i];
    const double d2 = delta_m_squared(spec, xs[i]);
    row.delta = std::sqrt(d2);
    row.lhs = std::abs(values[i] - f(xs[i]));
    row.rhs = lip_m * std::pow(d2, nu / 2.0);
    row.pass = row.lhs <= row.rhs + 1e-9 + extra_tol;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace pqbs

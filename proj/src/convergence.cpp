#include "pqbs/convergence.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pqbs {

PQParams ParamSchedule::at(int m) const {
  if (m < 1) throw std::invalid_argument("ParamSchedule: m must be >= 1");
  switch (kind) {
    case Kind::power_root:
      return PQParams(std::pow(alpha, 1.0 / m), std::pow(beta, 1.0 / m));
    case Kind::one_minus_inverse: {
      const double d = static_cast<double>(m) + 1.0;
      return PQParams(1.0 - 1.0 / (d * d), 1.0 - 1.0 / d);
    }
    case Kind::custom:
      if (!custom) throw std::invalid_argument("ParamSchedule: custom fn not set");
      return custom(m);
  }
  throw std::logic_error("ParamSchedule: unreachable");
}

void ParamSchedule::validate(const std::vector<int>& m_values) const {
  for (int m : m_values) (void)at(m);  // PQParams enforces 0 < q < p <= 1
}

std::string ParamSchedule::label() const {
  switch (kind) {
    case Kind::power_root: {
      std::ostringstream os;
      os << "power_root:" << alpha << ":" << beta;
      return os.str();
    }
    case Kind::one_minus_inverse:
      return "one_minus_inverse";
    case Kind::custom:
      return "custom";
  }
  return "?";
}

ParamSchedule make_schedule(ParamSchedule::Kind kind, double alpha, double beta) {
  ParamSchedule s;
  s.kind = kind;
  s.alpha = alpha;
  s.beta = beta;
  if (kind == ParamSchedule::Kind::power_root &&
      !(beta > 0.0 && beta < alpha && alpha < 1.0))
    throw std::invalid_argument("make_schedule: power_root needs 0 < beta < alpha < 1");
  return s;
}

ParamSchedule parse_schedule(const std::string& text) {
  if (text == "one_minus_inverse")
    return make_schedule(ParamSchedule::Kind::one_minus_inverse);
  if (text.rfind("power_root:", 0) == 0) {
    const std::string rest = text.substr(11);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("parse_schedule: expected power_root:alpha:beta");
    return make_schedule(ParamSchedule::Kind::power_root,
                         std::stod(rest.substr(0, colon)),
                         std::stod(rest.substr(colon + 1)));
  }
  throw std::invalid_argument("parse_schedule: unknown schedule '" + text + "'");
}

namespace {

Eigen::ArrayXd unit_grid(int grid) {
  if (grid < 2) throw std::invalid_argument("experiment: need grid >= 2");
  return Eigen::ArrayXd::LinSpaced(grid, 0.0, 1.0);
}

void check_increasing(const std::vector<int>& m_values) {
  if (m_values.empty()) throw std::invalid_argument("experiment: empty m list");
  for (std::size_t i = 1; i < m_values.size(); ++i)
    if (m_values[i] <= m_values[i - 1])
      throw std::invalid_argument("experiment: m values must increase");
}

}  // namespace

KorovkinReport korovkin_experiment(const ParamSchedule& schedule, int ell,
                                   const FunctionHandle& f,
                                   const std::vector<int>& m_values, int grid) {
  check_increasing(m_values);
  schedule.validate(m_values);

  KorovkinReport rep;
  rep.function = f.name;
  rep.schedule = schedule.label();
  rep.ell = ell;
  rep.grid = grid;

  const Eigen::ArrayXd xs = unit_grid(grid);
  Eigen::ArrayXd fx(xs.size());
  for (Eigen::Index i = 0; i < xs.size(); ++i) fx[i] = f(xs[i]);
  const ModulusTable table(f, {0.0, static_cast<double>(ell) + 1.0});

  const FunctionHandle e_handles[3] = {make_function("e0", ell),
                                       make_function("e1", ell),
                                       make_function("e2", ell)};

  for (int m : m_values) {
    const OperatorSpec spec(m, ell, schedule.at(m));
    KorovkinRow row;
    row.m = m;
    row.p = spec.params.p;
    row.q = spec.params.q;
    row.sup_error = (evaluate_grid(spec, f, xs) - fx).abs().maxCoeff();
    double bound = 0.0;
    for (Eigen::Index i = 0; i < xs.size(); ++i)
      bound = std::max(bound, 2.0 * table.omega_upper(delta_m(spec, xs[i])));
    row.bound = bound;
    for (int j = 0; j < 3; ++j) {
      const Eigen::ArrayXd ej = xs.pow(j);
      row.sup_e_err[j] =
          (evaluate_grid(spec, e_handles[j], xs) - ej).abs().maxCoeff();
    }
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<double> VoronovskajaReport::cauchy_increments() const {
  std::vector<double> inc;
  for (std::size_t i = 1; i < rows.size(); ++i)
    inc.push_back(std::abs(rows[i].lambda_hat - rows[i - 1].lambda_hat));
  return inc;
}

VoronovskajaReport voronovskaja_experiment(const ParamSchedule& schedule, int ell,
                                           const FunctionHandle& f,
                                           const std::vector<int>& m_values,
                                           int grid) {
  check_increasing(m_values);
  schedule.validate(m_values);
  if (!f.second_deriv)
    throw std::invalid_argument(
        "voronovskaja_experiment: function has no registered second derivative");
  if (schedule.kind != ParamSchedule::Kind::power_root)
    throw std::invalid_argument(
        "voronovskaja_experiment: schedule must pin alpha = lim p_m^m (power_root)");

  VoronovskajaReport rep;
  rep.function = f.name;
  rep.schedule = schedule.label();
  rep.ell = ell;
  rep.grid = grid;
  rep.alpha = schedule.alpha;

  const Eigen::ArrayXd xs = unit_grid(grid);
  Eigen::ArrayXd fx(xs.size()), d2fx(xs.size());
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    fx[i] = f(xs[i]);
    d2fx[i] = f.second_deriv(xs[i]);
  }

  for (int m : m_values) {
    const OperatorSpec spec(m, ell, schedule.at(m));
    const double bracket = pq_integer(m, spec.params);
    const Eigen::ArrayXd scaled = bracket * (evaluate_grid(spec, f, xs) - fx);

    VoronovskajaRow row;
    row.m = m;
    row.p = spec.params.p;
    row.q = spec.params.q;
    row.scaled_sup = scaled.abs().maxCoeff();

    // scaled * 2/f'' should approach x(lambda - alpha x); solve for lambda
    // by least squares of z = y + alpha x^2 against x.
    double sxz = 0.0, sxx = 0.0;
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
      if (std::abs(d2fx[i]) <= 0.1) continue;
      const double y = scaled[i] * 2.0 / d2fx[i];
      const double z = y + rep.alpha * xs[i] * xs[i];
      sxz += xs[i] * z;
      sxx += xs[i] * xs[i];
    }
    if (sxx == 0.0)
      throw std::invalid_argument(
          "voronovskaja_experiment: no grid points with |f''| > 0.1");
    row.lambda_hat = sxz / sxx;
    rep.rows.push_back(row);
  }
  return rep;
}

Omega2Report omega2_ratio_experiment(const ParamSchedule& schedule, int ell,
                                     const FunctionHandle& f,
                                     const std::vector<int>& m_values, int grid) {
  check_increasing(m_values);
  schedule.validate(m_values);
  if (!f.deriv)
    throw std::invalid_argument(
        "omega2_ratio_experiment: function has no registered derivative");

  Omega2Report rep;
  rep.function = f.name;
  rep.schedule = schedule.label();
  rep.ell = ell;
  rep.grid = grid;

  const Eigen::ArrayXd xs = unit_grid(grid);
  Eigen::ArrayXd fx(xs.size()), dfx(xs.size());
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    fx[i] = f(xs[i]);
    dfx[i] = f.deriv(xs[i]);
  }
  const ModulusTable table(f, {0.0, static_cast<double>(ell) + 1.0});

  for (int m : m_values) {
    const OperatorSpec spec(m, ell, schedule.at(m));
    const Eigen::ArrayXd values = evaluate_grid(spec, f, xs);
    // bias factor [m+ell]/[m] - 1 that the numerator subtracts off
    const double drift =
        pq_integer(m + ell, spec.params) / pq_integer(m, spec.params) - 1.0;

    Omega2Row row;
    row.m = m;
    row.p = spec.params.p;
    row.q = spec.params.q;
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
      const double numer =
          std::abs(values[i] - fx[i] - xs[i] * dfx[i] * drift);
      const double denom = std::max(
          table.omega2(std::sqrt(delta_m_squared(spec, xs[i]))), 1e-15);
      row.max_ratio = std::max(row.max_ratio, numer / denom);
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace pqbs

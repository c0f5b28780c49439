#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pqbs/bounds.hpp"

namespace pqbs {

/// Parameter sequence (p_m, q_m) for convergence experiments. Both
/// built-in kinds satisfy 0 < q_m < p_m <= 1 and p_m, q_m -> 1:
///   power_root:        p_m = alpha^{1/m}, q_m = beta^{1/m}, so p_m^m is
///                      exactly alpha for every m (needs 0 < beta < alpha < 1)
///   one_minus_inverse: p_m = 1 - 1/(m+1)^2, q_m = 1 - 1/(m+1), so
///                      p_m^m -> 1 and q_m^m -> 1/e
struct ParamSchedule {
  enum class Kind { power_root, one_minus_inverse, custom };

  Kind kind = Kind::one_minus_inverse;
  double alpha = 0.0;
  double beta = 0.0;
  std::function<PQParams(int)> custom;

  PQParams at(int m) const;

  /// Hard assertion of the schedule invariant over a run range; throws if
  /// any m yields an invalid pair.
  void validate(const std::vector<int>& m_values) const;

  std::string label() const;
};

ParamSchedule make_schedule(ParamSchedule::Kind kind, double alpha = 0.0,
                            double beta = 0.0);

/// Parse "one_minus_inverse" or "power_root:alpha:beta".
ParamSchedule parse_schedule(const std::string& text);

inline const std::vector<int> kDefaultMValues = {4, 8, 16, 32, 64, 128};

struct KorovkinRow {
  int m = 0;
  double p = 0.0, q = 0.0;
  double sup_error = 0.0;   // sup_x |B(f;x) - f(x)|
  double bound = 0.0;       // sup_x 2 omega(f, delta_m(x))
  double sup_e_err[3] = {0.0, 0.0, 0.0};  // sup_x |B(e_j;x) - x^j|
};

struct KorovkinReport {
  std::string function;
  std::string schedule;
  int ell = 0;
  int grid = 0;
  std::vector<KorovkinRow> rows;
};

/// Uniform-convergence experiment: per m, the sup error of B(f) against f
/// on a grid, the matching 2*omega bound, and the three test-function
/// errors that drive the Korovkin argument.
KorovkinReport korovkin_experiment(const ParamSchedule& schedule, int ell,
                                   const FunctionHandle& f,
                                   const std::vector<int>& m_values = kDefaultMValues,
                                   int grid = 101);

struct VoronovskajaRow {
  int m = 0;
  double p = 0.0, q = 0.0;
  double scaled_sup = 0.0;   // sup_x |[m](B(f;x) - f(x))|
  double lambda_hat = 0.0;   // least-squares fit in x(lambda - alpha x)/2 f''
};

struct VoronovskajaReport {
  std::string function;
  std::string schedule;
  int ell = 0;
  int grid = 0;
  double alpha = 0.0;  // limit of p_m^m under the schedule
  std::vector<VoronovskajaRow> rows;

  /// |lambda_hat[i+1] - lambda_hat[i]| along the m list.
  std::vector<double> cauchy_increments() const;
};

/// Asymptotic-error experiment: scales the error by [m]_{p_m,q_m} and fits
/// the limit shape x(lambda - alpha x) f''(x)/2 for lambda by least squares
/// over grid points with |f''| > 0.1. Requires a second derivative and a
/// schedule with known alpha = lim p_m^m (power_root).
VoronovskajaReport voronovskaja_experiment(const ParamSchedule& schedule, int ell,
                                           const FunctionHandle& f,
                                           const std::vector<int>& m_values = kDefaultMValues,
                                           int grid = 101);

struct Omega2Row {
  int m = 0;
  double p = 0.0, q = 0.0;
  double max_ratio = 0.0;
};

struct Omega2Report {
  std::string function;
  std::string schedule;
  int ell = 0;
  int grid = 0;
  std::vector<Omega2Row> rows;
};

/// Second-modulus ratio experiment: per m the sup over x of
///   |B(f;x) - f(x) - x f'(x) ([m+ell]/[m] - 1)| / omega_2(f, delta_m(x)),
/// the denominator floored at 1e-15. Bounded ratios across m witness the
/// direct estimate without asserting any specific constant.
Omega2Report omega2_ratio_experiment(const ParamSchedule& schedule, int ell,
                                     const FunctionHandle& f,
                                     const std::vector<int>& m_values = kDefaultMValues,
                                     int grid = 101);

}  // namespace pqbs

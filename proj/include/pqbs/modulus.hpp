#pragma once

#include <vector>

#include "pqbs/functions.hpp"

namespace pqbs {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Grid estimate of omega(f, delta) = sup{|f(y)-f(x)| : |y-x| <= delta}:
/// the sup over all grid pairs within distance delta. Converges from below
/// as the grid refines. Throws on delta <= 0 or grid_points < 2.
double modulus_of_continuity(const FunctionHandle& f, double delta,
                             Interval domain, int grid_points = 2001);

/// Grid estimate of the second modulus
///   omega_2(f, h_limit) = sup_{0<h<h_limit} sup_x |f(x+2h)-2f(x+h)+f(x)|
/// with h restricted to grid multiples and x+2h kept inside the domain.
double second_modulus(const FunctionHandle& f, double h_limit,
                      Interval domain, int grid_points = 2001);

/// Sampled oscillation tables for repeated modulus queries against one
/// function/domain/grid. Build cost is O(grid^2); queries are O(1).
class ModulusTable {
 public:
  ModulusTable(const FunctionHandle& f, Interval domain, int grid_points = 2001);

  /// Plain grid estimate (lower estimate of the true modulus).
  double omega(double delta) const;

  /// Upper bound on the true modulus when the function carries a smoothness
  /// constant: widens the pair window by one cell and adds the oscillation
  /// the grid cannot see. Falls back to omega() otherwise.
  double omega_upper(double delta) const;

  /// True when omega_upper() really inflates, i.e. smoothness was known.
  bool inflates() const { return inflates_; }

  double omega2(double h_limit) const;

  double step() const { return step_; }

 private:
  double step_ = 0.0;
  bool inflates_ = false;
  double cell_osc_ = 0.0;  // 2 M (step/2)^nu
  std::vector<double> cum1_;  // sup oscillation over pair windows <= j steps
  std::vector<double> cum2_;  // sup |second difference| over h <= j steps
};

}  // namespace pqbs

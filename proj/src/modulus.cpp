#include "pqbs/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pqbs {

namespace {

// Window width in grid steps for a distance bound, guarding against an
// exact multiple rounding just below the next integer.
int window_steps(double distance, double step) {
  if (distance <= 0.0) return 0;
  return static_cast<int>(std::floor(distance / step * (1.0 + 1e-12)));
}

}  // namespace

ModulusTable::ModulusTable(const FunctionHandle& f, Interval domain,
                           int grid_points) {
  if (grid_points < 2)
    throw std::invalid_argument("ModulusTable: need grid_points >= 2");
  if (!(domain.hi > domain.lo))
    throw std::invalid_argument("ModulusTable: empty domain");

  const int g = grid_points;
  step_ = (domain.hi - domain.lo) / (g - 1);

  std::vector<double> fv(g);
  for (int i = 0; i < g; ++i) fv[i] = f(domain.lo + i * step_);

  cum1_.assign(g, 0.0);
  for (int j = 1; j < g; ++j) {
    double worst = 0.0;
    for (int i = 0; i + j < g; ++i)
      worst = std::max(worst, std::abs(fv[i + j] - fv[i]));
    cum1_[j] = std::max(cum1_[j - 1], worst);
  }

  cum2_.assign((g - 1) / 2 + 1, 0.0);
  for (int j = 1; j <= (g - 1) / 2; ++j) {
    double worst = 0.0;
    for (int i = 0; i + 2 * j < g; ++i)
      worst = std::max(worst, std::abs(fv[i + 2 * j] - 2.0 * fv[i + j] + fv[i]));
    cum2_[j] = std::max(cum2_[j - 1], worst);
  }

  if (f.has_smoothness()) {
    inflates_ = true;
    cell_osc_ = 2.0 * f.smooth_m * std::pow(step_ / 2.0, f.smooth_nu);
  }
}

double ModulusTable::omega(double delta) const {
  const int j = std::min<int>(window_steps(delta, step_),
                              static_cast<int>(cum1_.size()) - 1);
  return cum1_[j];
}

double ModulusTable::omega_upper(double delta) const {
  if (delta <= 0.0) return 0.0;
  if (!inflates_) return omega(delta);
  const int j = std::min<int>(window_steps(delta, step_) + 1,
                              static_cast<int>(cum1_.size()) - 1);
  return cum1_[j] + cell_osc_;
}

double ModulusTable::omega2(double h_limit) const {
  const int j = std::min<int>(window_steps(h_limit, step_),
                              static_cast<int>(cum2_.size()) - 1);
  return cum2_[j];
}

double modulus_of_continuity(const FunctionHandle& f, double delta,
                             Interval domain, int grid_points) {
  if (!(delta > 0.0))
    throw std::domain_error("modulus_of_continuity: delta must be positive");
  return ModulusTable(f, domain, grid_points).omega(delta);
}

double second_modulus(const FunctionHandle& f, double h_limit, Interval domain,
                      int grid_points) {
  if (!(h_limit > 0.0))
    throw std::domain_error("second_modulus: h limit must be positive");
  return ModulusTable(f, domain, grid_points).omega2(h_limit);
}

}  // namespace pqbs

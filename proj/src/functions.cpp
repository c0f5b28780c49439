#include "pqbs/functions.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pqbs {

namespace {

const std::vector<std::string> kBuiltinNames = {
    "e0", "e1", "e2", "e3", "exp", "sin_scaled", "abs_half", "sqrt_abs"};

FunctionHandle with_domain(FunctionHandle h, int ell) {
  if (ell < 0) throw std::invalid_argument("make_function: ell must be >= 0");
  h.domain_end = static_cast<double>(ell) + 1.0;
  return h;
}

}  // namespace

const std::vector<std::string>& builtin_function_names() { return kBuiltinNames; }

FunctionHandle make_function(const std::string& name, int ell) {
  if (name.rfind("file:", 0) == 0)
    return make_sampled_function(name.substr(5), ell);

  const double b = static_cast<double>(ell) + 1.0;  // right end of the domain
  FunctionHandle h;
  h.name = name;
  if (name == "e0") {
    h.value = [](double) { return 1.0; };
    h.deriv = [](double) { return 0.0; };
    h.second_deriv = [](double) { return 0.0; };
    h.smooth_m = 0.0;
  } else if (name == "e1") {
    h.value = [](double t) { return t; };
    h.deriv = [](double) { return 1.0; };
    h.second_deriv = [](double) { return 0.0; };
    h.smooth_m = 1.0;
  } else if (name == "e2") {
    h.value = [](double t) { return t * t; };
    h.deriv = [](double t) { return 2.0 * t; };
    h.second_deriv = [](double) { return 2.0; };
    h.smooth_m = 2.0 * b;
  } else if (name == "e3") {
    h.value = [](double t) { return t * t * t; };
    h.deriv = [](double t) { return 3.0 * t * t; };
    h.second_deriv = [](double t) { return 6.0 * t; };
    h.smooth_m = 3.0 * b * b;
  } else if (name == "exp") {
    h.value = [](double t) { return std::exp(t); };
    h.deriv = [](double t) { return std::exp(t); };
    h.second_deriv = [](double t) { return std::exp(t); };
    h.smooth_m = std::exp(b);
  } else if (name == "sin_scaled") {
    // sin(pi t / (2(ell+1))): one quarter wave over the whole domain.
    const double w = M_PI / (2.0 * b);
    h.value = [w](double t) { return std::sin(w * t); };
    h.deriv = [w](double t) { return w * std::cos(w * t); };
    h.second_deriv = [w](double t) { return -w * w * std::sin(w * t); };
    h.smooth_m = w;
  } else if (name == "abs_half") {
    h.value = [](double t) { return std::abs(t - 0.5); };
    h.smooth_m = 1.0;  // Lip_1(1)
  } else if (name == "sqrt_abs") {
    h.value = [](double t) { return std::sqrt(std::abs(t - 0.5)); };
    h.smooth_m = 1.0;  // Lip_1(1/2)
    h.smooth_nu = 0.5;
  } else {
    throw std::invalid_argument("make_function: unknown function '" + name + "'");
  }
  return with_domain(std::move(h), ell);
}

FunctionHandle make_sampled_function(const std::string& csv_path, int ell) {
  std::ifstream in(csv_path);
  if (!in) throw std::invalid_argument("make_sampled_function: cannot open " + csv_path);

  std::vector<std::pair<double, double>> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double x = 0.0, v = 0.0;
    if (!(ls >> x >> v)) {
      if (pts.empty()) continue;  // tolerate a header row
      throw std::invalid_argument("make_sampled_function: bad row '" + line + "'");
    }
    pts.emplace_back(x, v);
  }
  if (pts.empty())
    throw std::invalid_argument("make_sampled_function: no samples in " + csv_path);
  std::sort(pts.begin(), pts.end());

  double max_slope = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double dx = pts[i].first - pts[i - 1].first;
    if (dx <= 0.0)
      throw std::invalid_argument("make_sampled_function: duplicate x in " + csv_path);
    max_slope = std::max(max_slope,
                         std::abs(pts[i].second - pts[i - 1].second) / dx);
  }

  FunctionHandle h;
  h.name = "file:" + csv_path;
  h.smooth_m = max_slope;
  h.value = [pts = std::move(pts)](double t) {
    if (t <= pts.front().first) return pts.front().second;
    if (t >= pts.back().first) return pts.back().second;
    auto it = std::upper_bound(pts.begin(), pts.end(), t,
                               [](double v, const auto& pr) { return v < pr.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double u = (t - lo.first) / (hi.first - lo.first);
    return std::lerp(lo.second, hi.second, u);
  };
  return with_domain(std::move(h), ell);
}

}  // namespace pqbs

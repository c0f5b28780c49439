#include "pqbs/operator_core.hpp"

#include <cmath>
#include <vector>

#include "pqbs/detail/scaled.hpp"

namespace pqbs {

namespace {

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error(std::string(what) + ": x must lie in [0,1]");
}

void check_covers(const FunctionHandle& f, double top_node) {
  if (f.domain_end < top_node - 1e-9)
    throw std::domain_error("evaluate: function domain [0," +
                            std::to_string(f.domain_end) +
                            "] does not cover node " + std::to_string(top_node));
}

// x-independent part of the normalized basis, all through r = q/p.
struct BasisContext {
  int n = 0;
  Eigen::ArrayXd binom;  // [n over k]_r
  Eigen::ArrayXd rpow;   // r^s
  Eigen::ArrayXd nodes;  // p^ell [k]_r / [m]_r

  explicit BasisContext(const OperatorSpec& spec) {
    n = spec.degree();
    const double r = spec.params.ratio();

    Eigen::ArrayXd rint(n + 1);  // [j]_r
    rint[0] = 0.0;
    for (int j = 1; j <= n; ++j) rint[j] = 1.0 + r * rint[j - 1];

    binom.resize(n + 1);
    binom[0] = 1.0;
    for (int k = 1; k <= n; ++k)
      binom[k] = binom[k - 1] * rint[n - k + 1] / rint[k];

    rpow.resize(n + 1);
    rpow[0] = 1.0;
    for (int s = 1; s <= n; ++s) rpow[s] = r * rpow[s - 1];

    const double scale =
        detail::pow_scaled(spec.params.p, spec.ell).value() / rint[spec.m];
    nodes = scale * rint;
  }

  // w_k(x) = binom_k x^k prod_{s<n-k} (1 - r^s x); exact at x = 0 and x = 1.
  void weights_at(double x, Eigen::ArrayXd& w) const {
    w.resize(n + 1);
    w[n] = 1.0;
    for (int k = n - 1; k >= 0; --k)
      w[k] = w[k + 1] * (1.0 - rpow[n - k - 1] * x);
    double xpow = 1.0;
    for (int k = 0; k <= n; ++k) {
      w[k] *= binom[k] * xpow;
      xpow *= x;
    }
  }
};

}  // namespace

WeightTable weight_table(const OperatorSpec& spec, double x) {
  check_unit_interval(x, "weight_table");
  const BasisContext ctx(spec);
  WeightTable table;
  table.x = x;
  table.nodes = ctx.nodes;
  ctx.weights_at(x, table.weights);
  return table;
}

double evaluate(const OperatorSpec& spec, const FunctionHandle& f, double x) {
  check_unit_interval(x, "evaluate");
  const BasisContext ctx(spec);
  check_covers(f, ctx.nodes[ctx.n]);
  Eigen::ArrayXd w;
  ctx.weights_at(x, w);
  double acc = 0.0;
  for (int k = 0; k <= ctx.n; ++k) acc += w[k] * f(ctx.nodes[k]);
  return acc;
}

Eigen::ArrayXd evaluate_grid(const OperatorSpec& spec, const FunctionHandle& f,
                             const Eigen::ArrayXd& xs) {
  const BasisContext ctx(spec);
  check_covers(f, ctx.nodes[ctx.n]);
  Eigen::ArrayXd fvals(ctx.n + 1);
  for (int k = 0; k <= ctx.n; ++k) fvals[k] = f(ctx.nodes[k]);

  Eigen::ArrayXd out(xs.size());
  Eigen::ArrayXd w;
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    check_unit_interval(xs[i], "evaluate_grid");
    ctx.weights_at(xs[i], w);
    out[i] = (w * fvals).sum();
  }
  return out;
}

double evaluate_unnormalized(const OperatorSpec& spec, const FunctionHandle& f,
                             double x, UnnormalizedVariant variant) {
  check_unit_interval(x, "evaluate_unnormalized");
  const int n = spec.degree();
  const double denom =
      variant == UnnormalizedVariant::bernstein
          ? pq_integer(n, spec.params)
          : pq_integer(spec.m, spec.params);
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double node = pq_integer(k, spec.params) / denom;
    const double basis = pq_binomial(n, k, spec.params) * std::pow(x, k) *
                         falling_product(x, n - k, spec.params);
    acc += basis * f(node);
  }
  return acc;
}

double q_schurer_evaluate(int m, int ell, double q, const FunctionHandle& f,
                          double x) {
  if (m < 1 || ell < 0 || m + ell > kMaxDegree)
    throw std::invalid_argument("q_schurer_evaluate: bad m/ell");
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("q_schurer_evaluate: need q in (0,1)");
  check_unit_interval(x, "q_schurer_evaluate");

  const int n = m + ell;
  std::vector<double> qpow(n + 1);
  qpow[0] = 1.0;
  for (int s = 1; s <= n; ++s) qpow[s] = q * qpow[s - 1];

  // Gaussian binomials, whole row at once via the q-Pascal recurrence.
  std::vector<double> binom(n + 1, 0.0);
  binom[0] = 1.0;
  for (int row = 1; row <= n; ++row)
    for (int k = row; k >= 1; --k) binom[k] = binom[k - 1] + qpow[k] * binom[k];

  std::vector<double> qint(n + 1);  // [j]_q
  qint[0] = 0.0;
  for (int j = 1; j <= n; ++j) qint[j] = qint[j - 1] + qpow[j - 1];
  check_covers(f, qint[n] / qint[m]);

  std::vector<double> tail(n + 1);  // prod_{s<n-k} (1 - q^s x)
  tail[n] = 1.0;
  for (int k = n - 1; k >= 0; --k)
    tail[k] = tail[k + 1] * (1.0 - qpow[n - k - 1] * x);

  double acc = 0.0;
  double xpow = 1.0;
  for (int k = 0; k <= n; ++k) {
    acc += binom[k] * xpow * tail[k] * f(qint[k] / qint[m]);
    xpow *= x;
  }
  return acc;
}

double classical_schurer_evaluate(int m, int ell, const FunctionHandle& f,
                                  double x) {
  if (m < 1 || ell < 0 || m + ell > kMaxDegree)
    throw std::invalid_argument("classical_schurer_evaluate: bad m/ell");
  check_unit_interval(x, "classical_schurer_evaluate");

  const int n = m + ell;
  check_covers(f, static_cast<double>(n) / m);
  std::vector<double> tail(n + 1);  // (1-x)^{n-k}
  tail[n] = 1.0;
  for (int k = n - 1; k >= 0; --k) tail[k] = tail[k + 1] * (1.0 - x);

  double acc = 0.0;
  double binom = 1.0;
  double xpow = 1.0;
  for (int k = 0; k <= n; ++k) {
    acc += binom * xpow * tail[k] * f(static_cast<double>(k) / m);
    binom *= static_cast<double>(n - k) / (k + 1);
    xpow *= x;
  }
  return acc;
}

}  // namespace pqbs

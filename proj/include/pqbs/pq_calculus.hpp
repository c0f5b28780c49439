#pragma once

#include <stdexcept>

namespace pqbs {

// Degree ceiling for all (p,q)-primitives and operator degrees.
inline constexpr int kMaxDegree = 500;

/// Deformation pair with the standing hypothesis 0 < q < p <= 1.
/// The degenerate case p = q is rejected; every identity below assumes
/// the strict inequality.
struct PQParams {
  double p = 1.0;
  double q = 0.5;

  PQParams() = default;
  PQParams(double p_, double q_) : p(p_), q(q_) {
    if (!(q > 0.0 && q < p && p <= 1.0))
      throw std::invalid_argument("PQParams: need 0 < q < p <= 1");
  }

  /// q/p in (0,1); the basis and nodes only depend on p through this
  /// ratio and a residual power of p.
  double ratio() const { return q / p; }
};

/// [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}; 0 for n = 0.
/// Summation form, so no cancellation as q -> p.
double pq_integer(int n, const PQParams& params);

/// [n]_{p,q}! = [1][2]...[n]; 1 for n = 0.
double pq_factorial(int n, const PQParams& params);

/// [n over k]_{p,q} = [n]!/([k]![n-k]!), computed by a multiplicative
/// recurrence in scaled arithmetic rather than a ratio of factorials.
double pq_binomial(int n, int k, const PQParams& params);

/// prod_{s=0}^{count-1} (p^s - q^s x); 1 for count = 0.
/// Every factor is >= 0 for x in [0,1].
double falling_product(double x, int count, const PQParams& params);

/// Binomial-expansion route to the same value as falling_product:
/// sum_k p^{(n-k)(n-k-1)/2} q^{k(k-1)/2} [n over k]_{p,q} (-x)^k.
/// Kept as an independent cross-check of the product form.
double expand_product(double x, int count, const PQParams& params);

}  // namespace pqbs

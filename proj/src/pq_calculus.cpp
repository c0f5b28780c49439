#include "pqbs/pq_calculus.hpp"

#include <algorithm>
#include <string>

#include "pqbs/detail/scaled.hpp"

namespace pqbs {

namespace {

void check_degree(int n, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": negative index");
  if (n > kMaxDegree)
    throw std::invalid_argument(std::string(what) + ": index exceeds ceiling " +
                                std::to_string(kMaxDegree));
}

// [n]_r for r = q/p via [j+1]_r = 1 + r [j]_r; values stay in [0, n].
double ratio_integer(int n, double r) {
  double acc = 0.0;
  for (int j = 0; j < n; ++j) acc = 1.0 + r * acc;
  return acc;
}

}  // namespace

double pq_integer(int n, const PQParams& params) {
  check_degree(n, "pq_integer");
  // Horner form of sum_{i<n} p^{n-1-i} q^i; all terms positive.
  double acc = 0.0;
  double qpow = 1.0;
  for (int i = 0; i < n; ++i) {
    acc = acc * params.p + qpow;
    qpow *= params.q;
  }
  return acc;
}

double pq_factorial(int n, const PQParams& params) {
  check_degree(n, "pq_factorial");
  detail::Scaled acc = detail::Scaled::one();
  double integer = 0.0;  // running [i]_{p,q}
  double qpow = 1.0;
  for (int i = 1; i <= n; ++i) {
    integer = integer * params.p + qpow;
    qpow *= params.q;
    acc.mul(integer);
  }
  return acc.value();
}

namespace detail {

// [n over k]_{p,q} = p^{k(n-k)} * prod_{i=1..k} [n-k+i]_r / [i]_r, r = q/p.
// The r-integers never leave [1, n], so only the p-power needs scaling.
Scaled pq_binomial_scaled(int n, int k, const PQParams& params) {
  k = std::min(k, n - k);
  const double r = params.ratio();
  Scaled acc = pow_scaled(params.p, static_cast<long>(k) * (n - k));
  double denom = 0.0;                          // [i]_r
  double numer = ratio_integer(n - k, r);      // [n-k+i]_r
  for (int i = 1; i <= k; ++i) {
    denom = 1.0 + r * denom;
    numer = 1.0 + r * numer;
    acc.mul(numer);
    acc.div(denom);
  }
  return acc;
}

}  // namespace detail

double pq_binomial(int n, int k, const PQParams& params) {
  check_degree(n, "pq_binomial");
  if (k < 0 || k > n)
    throw std::domain_error("pq_binomial: need 0 <= k <= n");
  return detail::pq_binomial_scaled(n, k, params).value();
}

double falling_product(double x, int count, const PQParams& params) {
  check_degree(count, "falling_product");
  detail::Scaled acc = detail::Scaled::one();
  double ppow = 1.0;
  double qpow = 1.0;
  for (int s = 0; s < count; ++s) {
    acc.mul(ppow - qpow * x);
    ppow *= params.p;
    qpow *= params.q;
  }
  return acc.value();
}

double expand_product(double x, int count, const PQParams& params) {
  check_degree(count, "expand_product");
  const int n = count;
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    detail::Scaled term =
        detail::pow_scaled(params.p, static_cast<long>(n - k) * (n - k - 1) / 2);
    term.mul(detail::pow_scaled(params.q, static_cast<long>(k) * (k - 1) / 2));
    term.mul(detail::pq_binomial_scaled(n, k, params));
    term.mul(detail::pow_scaled(-x, k));
    sum += term.value();
  }
  return sum;
}

}  // namespace pqbs

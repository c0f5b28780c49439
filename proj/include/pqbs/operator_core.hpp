#pragma once

#include <Eigen/Core>

#include "pqbs/functions.hpp"
#include "pqbs/pq_calculus.hpp"

namespace pqbs {

/// One concrete Bernstein-Schurer operator of degree m+ell: m is the
/// normalization degree, ell the fixed Schurer shift, so functions are
/// sampled on [0, ell+1] while the operator is evaluated on [0,1].
struct OperatorSpec {
  int m = 1;
  int ell = 0;
  PQParams params;

  OperatorSpec(int m_, int ell_, PQParams params_) : m(m_), ell(ell_), params(params_) {
    if (m < 1) throw std::invalid_argument("OperatorSpec: m must be >= 1");
    if (ell < 0) throw std::invalid_argument("OperatorSpec: ell must be >= 0");
    if (m + ell > kMaxDegree)
      throw std::invalid_argument("OperatorSpec: m + ell exceeds ceiling " +
                                  std::to_string(kMaxDegree));
  }

  int degree() const { return m + ell; }
};

/// Normalized basis weights w_k(x) and sample nodes t_k for one point.
/// Invariants: weights >= 0 on [0,1] and sum to 1; nodes strictly increase
/// from 0 to [m+ell]_{p,q}/[m]_{p,q} <= ell+1.
struct WeightTable {
  Eigen::ArrayXd weights;
  Eigen::ArrayXd nodes;
  double x = 0.0;
};

/// Basis and nodes of the normalized operator at x in [0,1].
///
/// The normalized basis is evaluated through the ratio r = q/p: the
/// normalizer p^{n(n-1)/2}, the p^{k(k-1)/2} twist and the p-parts of the
/// falling factors cancel exactly, leaving
///   w_k(x) = [n over k]_r x^k prod_{s<n-k} (1 - r^s x),
/// every intermediate of which is far from the double range limits even at
/// degree 500. Nodes are [k]_{p,q} p^{n-k} / [m]_{p,q} = p^ell [k]_r / [m]_r.
WeightTable weight_table(const OperatorSpec& spec, double x);

/// sum_k w_k(x) f(t_k).
double evaluate(const OperatorSpec& spec, const FunctionHandle& f, double x);

/// Element-wise evaluate over xs; basis coefficients are set up once.
Eigen::ArrayXd evaluate_grid(const OperatorSpec& spec, const FunctionHandle& f,
                             const Eigen::ArrayXd& xs);

/// Pre-normalization operator variants, kept as regression witnesses: the
/// basis lacks the p-power normalization, so it does not reproduce
/// constants for p < 1. `bernstein` samples at [k]/[m+ell], `schurer`
/// at [k]/[m] (both without the node's p-power correction).
enum class UnnormalizedVariant { bernstein, schurer };

double evaluate_unnormalized(const OperatorSpec& spec, const FunctionHandle& f,
                             double x, UnnormalizedVariant variant);

/// q-Bernstein-Schurer operator, written directly from its own definition
/// (Gaussian binomials by the q-Pascal recurrence, q-integer nodes). Serves
/// as an independent reduction target for the p = 1 case.
double q_schurer_evaluate(int m, int ell, double q, const FunctionHandle& f, double x);

/// Classical Schurer operator: binomial weights, nodes k/m. Limit target
/// for p, q -> 1.
double classical_schurer_evaluate(int m, int ell, const FunctionHandle& f, double x);

}  // namespace pqbs

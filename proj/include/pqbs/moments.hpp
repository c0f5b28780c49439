#pragma once

#include "pqbs/operator_core.hpp"

namespace pqbs {

/// Closed-form operator moments at a point: images of 1, t, t^2 plus the
/// first and second central moments B(t-x;x), B((t-x)^2;x).
struct MomentSet {
  double x = 0.0;
  double e0 = 1.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double central1 = 0.0;
  double central2 = 0.0;
};

/// With A = [m+ell]/[m] and V = [m+ell] p^{m+ell-1} / [m]^2:
///   e1       = A x
///   e2       = V x + q A B x^2,              B = [m+ell-1]/[m]
///   central1 = (A - 1) x
///   central2 = (A - 1)^2 x^2 + V x(1-x)
/// The central2 form is the bias^2 + variance splitting of the textbook
/// expansion e2 - 2x e1 + x^2; the two agree to rounding but this one has
/// no cancellation.
MomentSet moments_closed_form(const OperatorSpec& spec, double x);

/// Radius fed to the modulus of continuity in the 2*omega(f, delta) error
/// bound: x|A-1| + sqrt(V x(1-x)). Uses the simplified radicand
/// p^{m+ell-1} x(1-x); the verbatim radicand (q[m+ell-1]-[m+ell])x^2 +
/// p^{m+ell-1} x is the same number but subtracts nearly equal terms.
double delta_m(const OperatorSpec& spec, double x);

/// Squared radius of the second-modulus and Lipschitz estimates; equals
/// the second central moment central1^2 + V x(1-x).
double delta_m_squared(const OperatorSpec& spec, double x);

}  // namespace pqbs

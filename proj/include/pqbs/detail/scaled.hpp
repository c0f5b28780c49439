#pragma once

#include <cmath>
#include <limits>

namespace pqbs::detail {

// Value kept as mantissa * 2^exponent so long products of small factors
// (p^s terms, basis pieces) stay representable until converted back.
// The mantissa is renormalized into [0.5, 1) after every operation.
struct Scaled {
  double mantissa = 0.0;
  long exponent = 0;

  static Scaled one() { return from(1.0); }

  static Scaled from(double v) {
    Scaled s;
    int e = 0;
    s.mantissa = std::frexp(v, &e);
    s.exponent = e;
    return s;
  }

  Scaled& mul(double v) {
    int e = 0;
    mantissa *= std::frexp(v, &e);
    exponent += e;
    normalize();
    return *this;
  }

  Scaled& mul(const Scaled& o) {
    mantissa *= o.mantissa;
    exponent += o.exponent;
    normalize();
    return *this;
  }

  Scaled& div(double v) {
    int e = 0;
    mantissa /= std::frexp(v, &e);
    exponent -= e;
    normalize();
    return *this;
  }

  Scaled& div(const Scaled& o) {
    mantissa /= o.mantissa;
    exponent -= o.exponent;
    normalize();
    return *this;
  }

  void normalize() {
    int e = 0;
    mantissa = std::frexp(mantissa, &e);
    exponent += e;
  }

  // Nearest double; underflows to 0 and overflows to inf like ldexp.
  double value() const {
    if (mantissa == 0.0) return 0.0;
    if (exponent > 3000) {
      return mantissa > 0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
    }
    if (exponent < -3000) return 0.0;
    return std::ldexp(mantissa, static_cast<int>(exponent));
  }
};

// base^e by squaring, e >= 0, without intermediate under/overflow.
inline Scaled pow_scaled(double base, long e) {
  Scaled acc = Scaled::one();
  Scaled b = Scaled::from(base);
  while (e > 0) {
    if (e & 1) acc.mul(b);
    b.mul(b);
    e >>= 1;
  }
  return acc;
}

}  // namespace pqbs::detail

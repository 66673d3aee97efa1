#pragma once

#include <string>

#include "ppk/poly.hpp"
#include "ppk/series.hpp"

namespace ppk {

/// Quotient of two polynomials over Q, defined at 0.
///
/// Stored canonically: numerator and denominator are coprime, have integer
/// coefficients whose joint content is 1, and the denominator's constant term
/// is positive. Two values represent the same function iff they compare equal.
class RationalFunctionQ {
 public:
  RationalFunctionQ() : num_({Rational(1)}), den_({Rational(1)}) {}
  RationalFunctionQ(PolyQ num, PolyQ den);
  explicit RationalFunctionQ(PolyQ poly) : RationalFunctionQ(std::move(poly), PolyQ({Rational(1)})) {}

  const PolyQ& numerator() const { return num_; }
  const PolyQ& denominator() const { return den_; }

  /// EvaluationError at a pole.
  Rational eval(const Rational& x) const;
  SeriesQ to_series(std::size_t order) const;

  friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(num) / (den)" or just "num" when the denominator is 1.
  std::string str() const;

 private:
  PolyQ num_;
  PolyQ den_;
};


inline Rational ratfunc_eval(const RationalFunctionQ& r, const Rational& x) { return r.eval(x); }

/// True when a and b are certainly coprime, decided by a gcd computation
/// modulo a large prime. False means "not decided" (possible common factor).
bool coprime_by_modular_gcd(const PolyQ& a, const PolyQ& b);

}  // namespace ppk

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ppk/rational.hpp"

namespace ppk {

/// Dense univariate polynomial over Q; index = degree, no trailing zeros.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(std::initializer_list<Rational> coeffs) : PolyQ(std::vector<Rational>(coeffs)) {}

  static PolyQ constant(const Rational& c) { return PolyQ({c}); }
  static PolyQ monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  PolyQ derivative() const;
  PolyQ scaled(const Rational& s) const;
  PolyQ monic() const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionError for a zero divisor.
  static std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

  /// Human-readable form "2 + x + 2x^2"; coefficients shown as "num/den".
  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both inputs are zero).
PolyQ gcd(PolyQ a, PolyQ b);

/// Square-free decomposition f = c * prod g_i^i (Yun); returns (g_i, i) for
/// nonconstant g_i, each monic.
std::vector<std::pair<PolyQ, unsigned>> squarefree_decomposition(const PolyQ& f);

}  // namespace ppk

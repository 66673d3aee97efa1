#pragma once

#include <string>
#include <vector>

#include "ppk/poly.hpp"
#include "ppk/rational.hpp"

namespace ppk {

/// Power series truncated at an explicit order O: coefficients of x^0..x^O.
/// Binary operations require equal orders; there is no implicit truncation.
class SeriesQ {
 public:
  explicit SeriesQ(std::size_t order) : c_(order + 1) {}
  /// Takes the first order+1 coefficients of `coeffs`, zero-padding as needed.
  SeriesQ(std::vector<Rational> coeffs, std::size_t order);
  static SeriesQ from_poly(const PolyQ& p, std::size_t order);
  static SeriesQ one(std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  Rational& operator[](std::size_t k) { return c_[k]; }
  bool is_zero() const;

  SeriesQ& operator+=(const SeriesQ& o);
  SeriesQ& operator-=(const SeriesQ& o);
  SeriesQ& operator*=(const SeriesQ& o) { return *this = *this * o; }
  friend SeriesQ operator+(SeriesQ a, const SeriesQ& b) { return a += b; }
  friend SeriesQ operator-(SeriesQ a, const SeriesQ& b) { return a -= b; }
  friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);
  friend bool operator==(const SeriesQ& a, const SeriesQ& b) { return a.c_ == b.c_; }

  SeriesQ scaled(const Rational& s) const;

  /// JSON-style array of "num/den" strings, degree 0 first.
  std::string str() const;

 private:
  std::vector<Rational> c_;
};

enum class SeriesOp { add, mul };

SeriesQ series_arith(const SeriesQ& a, const SeriesQ& b, SeriesOp op);
/// q with q*b = a; DivisionError if b(0) = 0.
SeriesQ series_div(const SeriesQ& a, const SeriesQ& b);
/// Requires f(0) = 1 (DomainError otherwise).
SeriesQ series_log(const SeriesQ& f);
/// Requires g(0) = 0 (DomainError otherwise).
SeriesQ series_exp(const SeriesQ& g);
SeriesQ series_pow(const SeriesQ& f, unsigned k);

}  // namespace ppk

#include "ppk/rational.hpp"

#include <cmath>
#include <ostream>

#include "ppk/errors.hpp"

namespace ppk {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw DivisionError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view n = text.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(n, true) || !valid_int(d, false))
    throw UsageError("malformed rational: '" + std::string(text) + "'");
  std::string ns(n);
  if (ns[0] == '+') ns.erase(0, 1);
  return Rational(mpz_class(ns), mpz_class(std::string(d)));
}

long double Rational::to_long_double() const {
  // mpq_get_d truncates to double; split off the integer part for a little
  // more precision on values that matter (|x| < 2^53 integer part).
  mpz_class q = v_.get_num() / v_.get_den();
  mpq_class frac = v_ - mpq_class(q);
  return static_cast<long double>(q.get_d()) + static_cast<long double>(frac.get_d());
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DivisionError("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ppk

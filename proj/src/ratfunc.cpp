#include "ppk/ratfunc.hpp"

#include <cstdint>
#include <optional>
#include <vector>

#include "ppk/errors.hpp"

namespace ppk {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::uint64_t reduce(const mpz_class& z) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(kPrime));
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return r.get_ui();
}

std::optional<std::vector<std::uint64_t>> image(const PolyQ& f) {
  std::vector<std::uint64_t> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    std::uint64_t d = reduce(c.den());
    if (d == 0) return std::nullopt;
    out.push_back(mul_mod(reduce(c.num()), inv_mod(d)));
  }
  return out;
}

void trim(std::vector<std::uint64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Degree of gcd(a, b) over GF(kPrime).
int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = inv_mod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t q = mul_mod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + kPrime - mul_mod(q, b[i])) % kPrime;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

mpz_class lcm_of_dens(const PolyQ& f, mpz_class acc) {
  for (const auto& c : f.coeffs()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.raw().get_den_mpz_t());
  return acc;
}

mpz_class gcd_of_nums(const PolyQ& f, mpz_class acc) {
  for (const auto& c : f.coeffs()) mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.raw().get_num_mpz_t());
  return acc;
}

}  // namespace

bool coprime_by_modular_gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return false;
  auto ia = image(a);
  auto ib = image(b);
  if (!ia || !ib) return false;
  if (ia->back() == 0 || ib->back() == 0) return false;
  return gcd_degree_mod(std::move(*ia), std::move(*ib)) == 0;
}

RationalFunctionQ::RationalFunctionQ(PolyQ num, PolyQ den) {
  if (den.is_zero()) throw DivisionError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = PolyQ{};
    den_ = PolyQ({Rational(1)});
    return;
  }
  if (den.degree() > 0 && num.degree() > 0 && !coprime_by_modular_gcd(num, den)) {
    PolyQ g = gcd(num, den);
    if (g.degree() > 0) {
      num = PolyQ::divmod(num, g).first;
      den = PolyQ::divmod(den, g).first;
    }
  }
  if (den.coeff(0).is_zero()) throw DomainError("rational function not defined at 0");
  mpz_class l = lcm_of_dens(den, lcm_of_dens(num, mpz_class(1)));
  PolyQ n2 = num.scaled(Rational(l));
  PolyQ d2 = den.scaled(Rational(l));
  mpz_class g = gcd_of_nums(d2, gcd_of_nums(n2, mpz_class(0)));
  Rational s(mpz_class(1), g);
  if (d2.coeff(0).sign() < 0) s = -s;
  num_ = n2.scaled(s);
  den_ = d2.scaled(s);
}

Rational RationalFunctionQ::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw EvaluationError("rational function has a pole at " + x.str());
  return num_.eval(x) / d;
}

SeriesQ RationalFunctionQ::to_series(std::size_t order) const {
  return series_div(SeriesQ::from_poly(num_, order), SeriesQ::from_poly(den_, order));
}

std::string RationalFunctionQ::str() const {
  if (den_.degree() == 0) {
    return den_.coeff(0) == Rational(1) ? num_.str() : "(" + num_.str() + ") / " + den_.str();
  }
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace ppk

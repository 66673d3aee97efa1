#pragma once

#include <random>
#include <string>
#include <vector>

#include "ppk/rational.hpp"
#include "ppk/series.hpp"
#include "ppk/words.hpp"

namespace ppk::test {

inline Rational Q(const std::string& s) { return Rational::parse(s); }
inline Word W(const std::string& s, unsigned p = 2) { return Word::parse(s, p); }

inline std::vector<Rational> Qs(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return out;
}

/// Small random rational: numerator in [-9, 9], denominator in [1, 6].
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline SeriesQ random_series(std::mt19937_64& rng, std::size_t order, const Rational& constant) {
  SeriesQ s(order);
  s[0] = constant;
  for (std::size_t k = 1; k <= order; ++k) s[k] = random_rational(rng);
  return s;
}

/// Random word of exactly `len` digits with a nonzero leading digit.
inline Word random_tilde_word(std::mt19937_64& rng, unsigned p, std::size_t len) {
  std::uniform_int_distribution<unsigned> digit(0, p - 1), lead(1, p - 1);
  std::vector<std::uint8_t> d(len);
  for (std::size_t i = 0; i + 1 < len; ++i) d[i] = static_cast<std::uint8_t>(digit(rng));
  d[len - 1] = static_cast<std::uint8_t>(lead(rng));
  return Word::from_lsd(p, std::move(d));
}

}  // namespace ppk::test

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ppk/ratfunc.hpp"
#include "ppk/series.hpp"
#include "ppk/words.hpp"

namespace ppk {

/// r_w = Tbar_w Tbar_{w_LR} / (Tbar_{w_R} Tbar_{w_L}) for w in W-tilde.
RationalFunctionQ r_w_quotient(const Word& w);
/// The leading correction coefficient alpha of an admissible word.
Rational r_w_alpha(const Word& w);
/// r_w = 1 + alpha x^{mu-1} / (Tbar_{w_L} Tbar_{w_R}) for w in W.
RationalFunctionQ r_w_closed(const Word& w);
/// r_w expanded to the given order straight from the quotient of row
/// polynomials (no gcd normalization).
SeriesQ r_w_series(const Word& w, std::size_t order);

/// Product of X_w^k over distinct admissible words; empty = constant 1.
class Monomial {
 public:
  using Factor = std::pair<Word, unsigned>;

  Monomial() = default;
  /// Sorts factors by word and merges repeated words; UsageError for zero
  /// exponents or non-admissible words.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_constant() const { return f_.empty(); }
  /// sum of exponent * (|w| - 1)
  unsigned weight() const;
  unsigned degree() const;

  /// "X[10]^2*X[110]", or "1" for the constant monomial.
  std::string str() const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

 private:
  std::vector<Factor> f_;
};

/// Display/storage order: total weight ascending; within a weight, exponent
/// vectors over the length-then-lex word list compared lexicographically,
/// larger first. Gives 1, X[10], X[10]^2, X[100], X[110], X[10]^3, ...
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// P_j as a map from monomials to nonzero rational coefficients.
struct BlockPolynomial {
  unsigned p = 2;
  unsigned j = 0;
  std::map<Monomial, Rational, MonomialOrder> terms;

  std::size_t term_count() const { return terms.size(); }
  Rational coeff(const Monomial& m) const;
  /// "-1/8*X[10] + 1/8*X[10]^2 + X[100] + 1/4*X[110]"
  std::string str() const;
  std::string to_json(int indent = -1) const;
  static BlockPolynomial from_json(const std::string& text);
};

/// Every monomial over W of total weight <= j, in MonomialOrder.
std::vector<Monomial> monomials_up_to_weight(unsigned p, unsigned j);

/// prod (log r_w)^k / k! truncated at `order`; UsageError if order < weight.
SeriesQ monomial_coefficient_series(const Monomial& m, unsigned p, std::size_t order);

/// Truncated powers (log r_w)^k / k! for all w in W_j, shared read-only by
/// the coefficient kernels.
class LogPowerTable {
 public:
  LogPowerTable(unsigned p, unsigned j);
  unsigned p() const { return p_; }
  unsigned order() const { return j_; }
  const SeriesQ& power(const Word& w, unsigned k) const;
  /// [x^j] of the monomial's generating function.
  Rational top_coefficient(const Monomial& m) const;

 private:
  unsigned p_;
  unsigned j_;
  std::map<Word, std::vector<SeriesQ>> powers_;
};

/// P_j by coefficient extraction, parallel over monomials.
BlockPolynomial build_Pj(unsigned p, unsigned j);
/// Single-threaded reference for build_Pj.
BlockPolynomial build_Pj_serial(unsigned p, unsigned j);
/// P'_j = P_0 + ... + P_{j-1}; UsageError for j = 0.
BlockPolynomial cumulative_Pj(unsigned p, unsigned j);

/// Substitutes X_w := |n|_w.
Rational evaluate_P(const BlockPolynomial& P, Natural n);
/// Substitutes X_w := count(w) for an arbitrary count function.
template <class CountFn>
Rational evaluate_P_with(const BlockPolynomial& P, CountFn&& count) {
  std::map<Word, Rational> cache;
  Rational total;
  for (const auto& [m, c] : P.terms) {
    Rational term = c;
    for (const auto& [w, k] : m.factors()) {
      auto it = cache.find(w);
      if (it == cache.end()) it = cache.emplace(w, Rational(count(w))).first;
      term *= pow(it->second, static_cast<long>(k));
    }
    total += term;
  }
  return total;
}

/// Checks Tbar_v = prod_{w in W-tilde} r_w^{|v|_w} as series to `order`.
bool telescope_check(const Word& v, std::size_t order);

}  // namespace ppk

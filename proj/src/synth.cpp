#include "ppk/synth.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "ppk/errors.hpp"
#include "ppk/parallel.hpp"
#include "ppk/theta.hpp"

namespace ppk {

namespace {

void require_tilde(const Word& w, const char* what) {
  if (!classify(w).in_W_tilde) throw DomainError(std::string(what) + ": word " + w.str() + " is not in W-tilde");
}

void require_admissible(const Word& w, const char* what) {
  if (!classify(w).in_W) throw DomainError(std::string(what) + ": word " + w.str() + " is not admissible");
}

}  // namespace

RationalFunctionQ r_w_quotient(const Word& w) {
  require_tilde(w, "r_w_quotient");
  const Truncations t = truncations(w);
  return RationalFunctionQ(Tbar(w) * Tbar(t.left_right), Tbar(t.right) * Tbar(t.left));
}

Rational r_w_alpha(const Word& w) {
  require_admissible(w, "r_w_alpha");
  const unsigned p = w.base();
  const std::size_t mu = w.length();
  const long lead = w.leading();
  const long last = w.trailing();
  Rational alpha = pow(Rational(static_cast<long>(p)), static_cast<long>(mu - 2));
  alpha *= Rational(mpz_class(lead), mpz_class(lead + 1));
  alpha *= Rational(mpz_class(static_cast<long>(p) - last - 1), mpz_class(last + 1));
  // Interior digits w_{mu-2}..w_1: a digit e contributes (e+1)^{-2}.
  for (std::size_t i = 1; i + 1 < mu; ++i) {
    const long d = w.digit(i) + 1;
    alpha /= Rational(d * d);
  }
  return alpha;
}

RationalFunctionQ r_w_closed(const Word& w) {
  require_admissible(w, "r_w_closed");
  const Truncations t = truncations(w);
  PolyQ den = Tbar(t.left) * Tbar(t.right);
  PolyQ num = den + PolyQ::monomial(r_w_alpha(w), w.length() - 1);
  return RationalFunctionQ(std::move(num), std::move(den));
}

SeriesQ r_w_series(const Word& w, std::size_t order) {
  require_tilde(w, "r_w_series");
  const Truncations t = truncations(w);
  auto s = [order](const Word& v) { return SeriesQ::from_poly(Tbar(v), order); };
  return series_div(s(w) * s(t.left_right), s(t.right) * s(t.left));
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& [w, k] : factors) {
    if (k == 0) throw UsageError("monomial exponent must be positive");
    require_admissible(w, "Monomial");
    if (!f_.empty() && f_.back().first == w)
      f_.back().second += k;
    else
      f_.emplace_back(std::move(w), k);
  }
}

unsigned Monomial::weight() const {
  unsigned s = 0;
  for (const auto& [w, k] : f_) s += k * ppk::weight(w);
  return s;
}

unsigned Monomial::degree() const {
  unsigned s = 0;
  for (const auto& f : f_) s += f.second;
  return s;
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& [w, k] : f_) {
    if (!s.empty()) s += "*";
    s += "X[" + w.str() + "]";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t i = 0; i < std::min(fa.size(), fb.size()); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return fa.size() > fb.size();
}

Rational BlockPolynomial::coeff(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rational(0) : it->second;
}

std::string BlockPolynomial::str() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const Rational mag = abs(c);
    if (first)
      s += c.sign() < 0 ? "-" : "";
    else
      s += c.sign() < 0 ? " - " : " + ";
    first = false;
    if (m.is_constant())
      s += mag.str();
    else if (mag == Rational(1))
      s += m.str();
    else
      s += mag.str() + "*" + m.str();
  }
  return s;
}

std::string BlockPolynomial::to_json(int indent) const {
  nlohmann::ordered_json doc;
  doc["p"] = p;
  doc["j"] = j;
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::array();
    for (const auto& [w, k] : m.factors()) mono.push_back({{"word", w.str()}, {"exp", k}});
    doc["terms"].push_back({{"monomial", std::move(mono)}, {"coeff", c.str()}});
  }
  return doc.dump(indent);
}

BlockPolynomial BlockPolynomial::from_json(const std::string& text) {
  BlockPolynomial P;
  try {
    const auto doc = nlohmann::json::parse(text);
    P.p = doc.at("p").get<unsigned>();
    P.j = doc.at("j").get<unsigned>();
    for (const auto& t : doc.at("terms")) {
      std::vector<Monomial::Factor> f;
      for (const auto& x : t.at("monomial"))
        f.emplace_back(Word::parse(x.at("word").get<std::string>(), P.p), x.at("exp").get<unsigned>());
      Rational c = Rational::parse(t.at("coeff").get<std::string>());
      if (!c.is_zero()) P.terms[Monomial(std::move(f))] += c;
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed block polynomial JSON: ") + e.what());
  }
  return P;
}

std::vector<Monomial> monomials_up_to_weight(unsigned p, unsigned j) {
  const std::vector<Word> words = enumerate_admissible(p, j);
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> current;
  // Depth-first over the word list, choosing an exponent for each word.
  auto rec = [&](auto&& self, std::size_t idx, unsigned budget) -> void {
    if (idx == words.size()) {
      out.emplace_back(current);
      return;
    }
    self(self, idx + 1, budget);
    const unsigned wt = weight(words[idx]);
    for (unsigned k = 1; k * wt <= budget; ++k) {
      current.emplace_back(words[idx], k);
      self(self, idx + 1, budget - k * wt);
      current.pop_back();
    }
  };
  rec(rec, 0, j);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

SeriesQ monomial_coefficient_series(const Monomial& m, unsigned p, std::size_t order) {
  if (order < m.weight())
    throw UsageError("monomial_coefficient_series: order " + std::to_string(order) + " below weight " +
                     std::to_string(m.weight()));
  SeriesQ acc = SeriesQ::one(order);
  for (const auto& [w, k] : m.factors()) {
    if (w.base() != p) throw UsageError("monomial word base differs from p");
    SeriesQ lg = series_log(r_w_series(w, order));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), k);
    acc = acc * series_pow(lg, k).scaled(Rational(mpz_class(1), fact));
  }
  return acc;
}

LogPowerTable::LogPowerTable(unsigned p, unsigned j) : p_(p), j_(j) {
  for (const Word& w : enumerate_admissible(p, j)) {
    const unsigned wt = weight(w);
    std::vector<SeriesQ> pw;
    pw.push_back(SeriesQ::one(j));
    const SeriesQ lg = series_log(r_w_series(w, j));
    for (unsigned k = 1; k * wt <= j; ++k)
      pw.push_back((pw.back() * lg).scaled(Rational(1) / Rational(static_cast<long>(k))));
    powers_.emplace(w, std::move(pw));
  }
}

const SeriesQ& LogPowerTable::power(const Word& w, unsigned k) const {
  auto it = powers_.find(w);
  if (it == powers_.end() || k >= it->second.size())
    throw UsageError("log power table has no entry for " + w.str() + "^" + std::to_string(k));
  return it->second[k];
}

Rational LogPowerTable::top_coefficient(const Monomial& m) const {
  const auto& f = m.factors();
  if (f.empty()) return j_ == 0 ? Rational(1) : Rational(0);
  if (m.weight() > j_) return Rational(0);
  if (f.size() == 1) return power(f[0].first, f[0].second)[j_];
  SeriesQ acc = power(f[0].first, f[0].second);
  for (std::size_t i = 1; i + 1 < f.size(); ++i) acc = acc * power(f[i].first, f[i].second);
  const SeriesQ& last = power(f.back().first, f.back().second);
  Rational c;
  for (std::size_t i = 0; i <= j_; ++i)
    if (!acc[i].is_zero() && !last[j_ - i].is_zero()) c += acc[i] * last[j_ - i];
  return c;
}

BlockPolynomial build_Pj_serial(unsigned p, unsigned j) {
  const LogPowerTable table(p, j);
  BlockPolynomial P{p, j, {}};
  for (const Monomial& m : monomials_up_to_weight(p, j)) {
    Rational c = table.top_coefficient(m);
    if (!c.is_zero()) P.terms.emplace(m, std::move(c));
  }
  return P;
}

BlockPolynomial build_Pj(unsigned p, unsigned j) {
  const LogPowerTable table(p, j);
  const std::vector<Monomial> monos = monomials_up_to_weight(p, j);
  std::vector<Rational> coeffs(monos.size());
  parallel_for(monos.size(), [&](std::size_t i) { coeffs[i] = table.top_coefficient(monos[i]); });
  BlockPolynomial P{p, j, {}};
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (!coeffs[i].is_zero()) P.terms.emplace_hint(P.terms.end(), monos[i], std::move(coeffs[i]));
  return P;
}

BlockPolynomial cumulative_Pj(unsigned p, unsigned j) {
  if (j == 0) throw UsageError("cumulative_Pj needs j >= 1");
  BlockPolynomial acc{p, j, {}};
  for (unsigned i = 0; i < j; ++i) {
    for (auto& [m, c] : build_Pj(p, i).terms) {
      Rational& slot = acc.terms[m];
      slot += c;
      if (slot.is_zero()) acc.terms.erase(m);
    }
  }
  return acc;
}

Rational evaluate_P(const BlockPolynomial& P, Natural n) {
  const Word digits = expand(n, P.p);
  return evaluate_P_with(P, [&](const Word& w) { return factor_count(digits, w); });
}

bool telescope_check(const Word& v, std::size_t order) {
  const unsigned p = v.base();
  if (!v.empty() && v.leading() == 0) throw DomainError("telescope_check: word must start with a nonzero digit");
  const SeriesQ lhs = SeriesQ::from_poly(Tbar(v), order);
  // Every factor of v in W-tilde is a contiguous block whose top digit is nonzero.
  std::set<Word> factors;
  const auto& d = v.lsd_digits();
  for (std::size_t hi = 0; hi < d.size(); ++hi) {
    if (d[hi] == 0) continue;
    for (std::size_t lo = 0; lo <= hi; ++lo)
      factors.insert(Word::from_lsd(p, std::vector<std::uint8_t>(d.begin() + lo, d.begin() + hi + 1)));
  }
  SeriesQ rhs = SeriesQ::one(order);
  for (const Word& w : factors) {
    const Natural count = factor_count(v, w);
    rhs = rhs * series_pow(r_w_series(w, order), static_cast<unsigned>(count));
  }
  return lhs == rhs;
}

}  // namespace ppk

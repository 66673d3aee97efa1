#include "ppk/analysis.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "ppk/errors.hpp"
#include "ppk/parallel.hpp"
#include "ppk/theta.hpp"

namespace ppk {

std::vector<mpz_class> term_bound_series(unsigned p, unsigned j_max) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  // sum_k (1/k) (p-1)^2 x^k / (1 - p x^k) = sum_k sum_{m>=0} (p-1)^2 p^m x^{k(m+1)} / k
  SeriesQ inner(j_max);
  const long sq = static_cast<long>(p - 1) * static_cast<long>(p - 1);
  for (unsigned k = 1; k <= j_max; ++k) {
    Rational pm(1);
    for (unsigned e = k; e <= j_max; e += k) {
      inner[e] += Rational(sq) * pm / Rational(static_cast<long>(k));
      pm *= Rational(static_cast<long>(p));
    }
  }
  const SeriesQ e = series_exp(inner);
  std::vector<mpz_class> out;
  Rational running;
  for (unsigned j = 0; j <= j_max; ++j) {
    running += e[j];
    if (!running.is_integer()) throw DomainError("term bound is not an integer at j = " + std::to_string(j));
    out.push_back(running.num());
  }
  return out;
}

AsymptoticConstants asymptotic_constants(unsigned p) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  AsymptoticConstants c{p, double(p - 1) * double(p - 1) / double(p), 0.0};
  for (unsigned k = 2;; ++k) {
    const double term = 1.0 / (double(k) * (std::pow(double(p), double(k - 1)) - 1.0));
    c.sigma += term;
    if (term < 1e-15) break;
  }
  return c;
}

double term_bound_asymptotic(unsigned p, unsigned j) {
  if (j == 0) throw UsageError("asymptotic bound needs j >= 1");
  const AsymptoticConstants c = asymptotic_constants(p);
  const double lead = std::exp(c.mu * (c.sigma - 0.5)) /
                      (2.0 * p * std::pow(c.mu, 0.25) * std::sqrt(std::numbers::pi));
  const double log_growth = 2.0 * std::sqrt(c.mu * j) + j * std::log(double(p)) - 0.75 * std::log(double(j));
  return lead * std::exp(log_growth);
}

std::string to_string(Convergence c) {
  switch (c) {
    case Convergence::convergent: return "convergent";
    case Convergence::divergent: return "divergent";
    case Convergence::boundary: return "boundary";
  }
  return "?";
}

bool RootProfile::complete() const {
  unsigned nz = 0, np = 0;
  for (const auto& z : zeros) nz += z.multiplicity;
  for (const auto& q : poles) np += q.multiplicity;
  return static_cast<int>(nz) == std::max(r.numerator().degree(), 0) &&
         static_cast<int>(np) == std::max(r.denominator().degree(), 0);
}

RootProfile root_profile(const RationalFunctionQ& r, double tol, const RootOptions& opt) {
  RootProfile prof;
  prof.r = r;
  prof.zeros = roots_with_multiplicity(r.numerator(), opt);
  prof.poles = roots_with_multiplicity(r.denominator(), opt);
  long double best = 0;
  for (const auto* group : {&prof.zeros, &prof.poles})
    for (const auto& z : *group) {
      const long double xi = 1.0L / std::abs(z.root);
      if (!prof.dominant_singularity || xi > best) {
        best = xi;
        prof.dominant_singularity = z.root;
      }
    }
  prof.max_xi_modulus = static_cast<double>(best);
  if (prof.max_xi_modulus > 1.0 + tol)
    prof.classification = Convergence::divergent;
  else if (prof.max_xi_modulus >= 1.0 - tol)
    prof.classification = Convergence::boundary;
  else
    prof.classification = Convergence::convergent;
  if (prof.classification == Convergence::boundary) {
    auto in_band = [tol](const std::vector<RootWithMultiplicity>& rs) {
      unsigned n = 0;
      for (const auto& z : rs)
        if (std::abs(1.0L / std::abs(z.root) - 1.0L) <= tol) ++n;
      return n;
    };
    const PolyQ& num = r.numerator();
    const PolyQ& den = r.denominator();
    const bool certified = in_band(prof.zeros) == unit_circle_root_count(num) &&
                           in_band(prof.poles) == unit_circle_root_count(den) &&
                           !num.eval(Rational(1)).is_zero() && !den.eval(Rational(1)).is_zero();
    if (certified) {
      prof.unit_circle_certified = true;
      prof.max_xi_modulus = 1.0;
      prof.classification = Convergence::convergent;
    }
  }
  if (prof.classification == Convergence::convergent) prof.coefficient_sum = std::log(r.eval(Rational(1)).to_double());
  return prof;
}

std::complex<long double> log_rat_coeff_exact(const RootProfile& profile, unsigned n) {
  if (n == 0) throw UsageError("log_rat_coeff_exact needs n >= 1");
  if (!profile.complete()) throw UsageError("log_rat_coeff_exact needs a complete root profile");
  std::complex<long double> acc = 0;
  for (const auto& z : profile.zeros) acc += static_cast<long double>(z.multiplicity) * std::pow(1.0L / z.root, n);
  for (const auto& q : profile.poles) acc -= static_cast<long double>(q.multiplicity) * std::pow(1.0L / q.root, n);
  return -acc / static_cast<long double>(n);
}

RootProfile classify_word(const Word& w, double tol) {
  if (!is_admissible(w)) throw DomainError("classify_word: " + w.str() + " is not admissible");
  RootProfile prof = root_profile(r_w_quotient(w), tol);
  prof.word = w;
  return prof;
}

std::vector<Word> ConvergenceScan::convergent() const {
  std::vector<Word> out;
  for (const auto& prof : profiles)
    if (prof.classification == Convergence::convergent) out.push_back(*prof.word);
  return out;
}

namespace {

// Splits a base-2 word into maximal runs of equal digits, most significant first.
std::vector<std::pair<char, std::size_t>> runs(const Word& w) {
  std::vector<std::pair<char, std::size_t>> out;
  for (char ch : w.str()) {
    if (!out.empty() && out.back().first == ch)
      ++out.back().second;
    else
      out.emplace_back(ch, 1);
  }
  return out;
}

}  // namespace

bool in_family_ones_zero(const Word& w) {
  if (w.base() != 2 || w.empty()) return false;
  auto r = runs(w);
  return r.size() == 2 && r[0].first == '1' && r[1].first == '0' && r[1].second == 1;
}

bool in_family_ones_4s1_zero_zero(const Word& w) {
  if (w.base() != 2 || w.empty()) return false;
  auto r = runs(w);
  return r.size() == 2 && r[0].first == '1' && r[0].second % 4 == 1 && r[1].first == '0' &&
         r[1].second == 2;
}

bool in_family_ones_zero_ones_zero(const Word& w) {
  if (w.base() != 2 || w.empty()) return false;
  auto r = runs(w);
  return r.size() == 4 && r[0].first == '1' && r[1].second == 1 && r[2].second >= 2 && r[3].second == 1;
}

namespace {

ConvergenceScan partition(std::vector<RootProfile> profiles) {
  ConvergenceScan scan;
  for (const auto& prof : profiles) {
    const Word& w = *prof.word;
    if (prof.classification == Convergence::boundary) {
      scan.boundary.push_back(w);
    } else if (prof.classification == Convergence::convergent) {
      if (in_family_ones_zero(w))
        scan.ones_zero.push_back(w);
      else if (in_family_ones_4s1_zero_zero(w))
        scan.ones_4s1_zero_zero.push_back(w);
      else if (in_family_ones_zero_ones_zero(w))
        scan.ones_zero_ones_zero.push_back(w);
      else
        scan.exceptional.push_back(w);
    }
  }
  scan.profiles = std::move(profiles);
  return scan;
}

}  // namespace

ConvergenceScan scan_convergent_words_serial(unsigned max_len, double tol) {
  std::vector<RootProfile> profiles;
  for (const Word& w : enumerate_admissible_by_length(2, max_len)) profiles.push_back(classify_word(w, tol));
  return partition(std::move(profiles));
}

ConvergenceScan scan_convergent_words(unsigned max_len, double tol) {
  const std::vector<Word> words = enumerate_admissible_by_length(2, max_len);
  std::vector<RootProfile> profiles(words.size());
  parallel_for(words.size(), [&](std::size_t i) { profiles[i] = classify_word(words[i], tol); });
  return partition(std::move(profiles));
}

namespace {

std::string format_complex(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(10);
  const double re = static_cast<double>(z.real());
  const double im = static_cast<double>(z.imag());
  if (std::abs(im) <= 1e-12 * std::max(1.0, std::abs(re))) {
    os << re;
  } else {
    os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return os.str();
}

}  // namespace

std::string classification_csv(const std::vector<RootProfile>& profiles) {
  std::ostringstream os;
  os << "word,class,max_xi_modulus,dominant_singularity,coefficient_sum\n";
  os << std::setprecision(12);
  for (const auto& prof : profiles) {
    os << (prof.word ? prof.word->str() : std::string()) << "," << to_string(prof.classification) << ","
       << prof.max_xi_modulus << ",";
    if (prof.dominant_singularity) os << format_complex(*prof.dominant_singularity);
    os << ",";
    if (prof.coefficient_sum) os << *prof.coefficient_sum;
    os << "\n";
  }
  return os.str();
}

PolyQ q_poly(unsigned r) {
  std::vector<Rational> c(r + 2);
  c[r + 1] += 4;
  c[r] += 1;
  c[2] -= 4;
  c[0] -= 1;
  return PolyQ(std::move(c));
}

namespace {

// f(x/2) for a polynomial f(t).
PolyQ at_half_x(const PolyQ& f) {
  std::vector<Rational> c = f.coeffs();
  Rational scale(1);
  for (auto& x : c) {
    x *= scale;
    scale /= 2;
  }
  return PolyQ(std::move(c));
}

// 1 - t^k
PolyQ one_minus_power(unsigned k) { return PolyQ({Rational(1)}) - PolyQ::monomial(Rational(1), k); }

}  // namespace

FamilyReport closed_form_family(unsigned s, FamilyVariant variant) {
  if (s == 0) throw UsageError("closed_form_family needs s >= 1");
  FamilyReport rep;
  std::vector<unsigned> msd(s, 1);
  if (variant == FamilyVariant::ones_zero) {
    msd.push_back(0);
    std::vector<std::uint8_t> lsd(msd.rbegin(), msd.rend());
    rep.word = Word::from_lsd(2, std::move(lsd));
    rep.closed_form = RationalFunctionQ(at_half_x(one_minus_power(s + 1)), at_half_x(one_minus_power(1)));
    rep.matches = rep.closed_form == RationalFunctionQ(Tbar(rep.word));
    return rep;
  }
  msd.push_back(0);
  msd.push_back(0);
  std::vector<std::uint8_t> lsd(msd.rbegin(), msd.rend());
  rep.word = Word::from_lsd(2, std::move(lsd));
  const unsigned r = s;
  PolyQ num = at_half_x(q_poly(r + 1) * one_minus_power(r));
  PolyQ den = at_half_x(q_poly(r) * one_minus_power(r + 1));
  rep.closed_form = RationalFunctionQ(std::move(num), std::move(den));
  rep.matches = rep.closed_form == r_w_quotient(rep.word);

  std::vector<Complex> c;
  const PolyQ q = q_poly(r);
  for (const auto& a : q.coeffs()) c.emplace_back(a.to_long_double(), 0);
  const Complex half_i(0, 0.5L);
  bool first = true;
  for (const Complex& z : aberth_roots(c)) {
    if (first || std::abs(z - half_i) < std::abs(rep.q_root - half_i)) rep.q_root = z;
    first = false;
  }
  rep.q_root_approx = half_i + std::pow(half_i, static_cast<int>(r)) * Complex(0.5L, -0.25L);
  rep.q_root_above_half = std::abs(rep.q_root) > 0.5L;
  return rep;
}

CoefficientSumReport coefficient_sum(const Monomial& m, double tol) {
  CoefficientSumReport rep;
  double value = 1.0;
  for (const auto& [w, k] : m.factors()) {
    RootProfile prof = classify_word(w, tol);
    if (prof.classification != Convergence::convergent || prof.unit_circle_certified) {
      rep.refused = true;
      const std::string what = prof.unit_circle_certified ? "on the unit circle" : to_string(prof.classification);
      rep.reason += (rep.reason.empty() ? "" : "; ") + w.str() + " is " + what +
                    " (max |xi| = " + std::to_string(prof.max_xi_modulus) + ")";
    } else {
      const Rational at_one = prof.r.eval(Rational(1));
      rep.r_at_one.push_back(at_one);
      value *= std::pow(std::log(at_one.to_double()), double(k)) / std::tgamma(double(k) + 1.0);
    }
    rep.profiles.push_back(std::move(prof));
  }
  if (rep.refused) return rep;
  rep.value = value;
  rep.error_bound = 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + m.degree()) * std::abs(value);
  return rep;
}

}  // namespace ppk

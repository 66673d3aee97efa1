#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ppk/ratfunc.hpp"
#include "ppk/roots.hpp"
#include "ppk/synth.hpp"
#include "ppk/words.hpp"

namespace ppk {

// ---- Term counts ------------------------------------------------------------

/// B_0..B_{j_max}: [x^j] (1/(1-x)) exp(sum_k (1/k)(p-1)^2 x^k / (1 - p x^k)),
/// expanded exactly.
std::vector<mpz_class> term_bound_series(unsigned p, unsigned j_max);

struct AsymptoticConstants {
  unsigned p;
  double mu;     ///< (p-1)^2 / p
  double sigma;  ///< sum_{k>=2} 1 / (k (p^{k-1} - 1))
};
AsymptoticConstants asymptotic_constants(unsigned p);

/// Leading term of the asymptotic expansion of B_j; UsageError for j = 0.
double term_bound_asymptotic(unsigned p, unsigned j);

// ---- Roots of r_w and coefficient behaviour -----------------------------------

enum class Convergence { convergent, divergent, boundary };
std::string to_string(Convergence c);

/// Factorization data for r(x) = prod (1 - xi_i x)^{eps_i}: zeros carry
/// eps = +multiplicity, poles eps = -multiplicity, xi = 1/root.
struct RootProfile {
  std::optional<Word> word;
  RationalFunctionQ r;
  std::vector<RootWithMultiplicity> zeros;
  std::vector<RootWithMultiplicity> poles;
  double max_xi_modulus = 0;
  /// Root of smallest modulus among zeros and poles; empty when r = 1.
  std::optional<Complex> dominant_singularity;
  Convergence classification = Convergence::convergent;
  /// Every root in the tolerance band was shown exactly to lie on |x| = 1,
  /// so max |xi| = 1 and the coefficients still sum to log r(1).
  bool unit_circle_certified = false;
  /// log r(1) when convergent.
  std::optional<double> coefficient_sum;

  /// Multiplicities account for the full numerator and denominator degrees.
  bool complete() const;
};

/// Roots of the canonical numerator and denominator; classification by
/// max |xi_i| against 1 with a tolerance band of width `tol`. Band roots are
/// then checked exactly: if all of them lie on the unit circle (and none at
/// x = 1) the word is convergent, otherwise it stays boundary.
RootProfile root_profile(const RationalFunctionQ& r, double tol = 1e-6, const RootOptions& opt = {});

/// [x^n] log r(x) = -(1/n) sum eps_i xi_i^n; UsageError for n = 0 or an
/// incomplete profile.
std::complex<long double> log_rat_coeff_exact(const RootProfile& profile, unsigned n);

/// Profile of r_w for admissible w.
RootProfile classify_word(const Word& w, double tol = 1e-6);

struct ConvergenceScan {
  std::vector<Word> ones_zero;                ///< 1^s 0, s >= 1
  std::vector<Word> ones_4s1_zero_zero;       ///< 1^{4s+1} 00, s >= 0
  std::vector<Word> ones_zero_ones_zero;      ///< 1^s 0 1^t 0, s >= 1, t >= 2
  std::vector<Word> exceptional;              ///< convergent, outside the families
  std::vector<Word> boundary;                 ///< |xi| within tol of 1: not decided
  std::vector<RootProfile> profiles;          ///< every scanned word, in order

  std::vector<Word> convergent() const;
};

bool in_family_ones_zero(const Word& w);
bool in_family_ones_4s1_zero_zero(const Word& w);
bool in_family_ones_zero_ones_zero(const Word& w);

/// Classifies every admissible base-2 word of length <= max_len (parallel).
ConvergenceScan scan_convergent_words(unsigned max_len, double tol = 1e-6);
ConvergenceScan scan_convergent_words_serial(unsigned max_len, double tol = 1e-6);

/// CSV: word,class,max_xi_modulus,dominant_singularity,coefficient_sum
std::string classification_csv(const std::vector<RootProfile>& profiles);

// ---- Closed forms for 1^s 0 and 1^r 00 ---------------------------------------

enum class FamilyVariant { ones_zero, ones_zero_zero };

/// q_r(t) = 4 t^{r+1} + t^r - 4 t^2 - 1
PolyQ q_poly(unsigned r);

struct FamilyReport {
  Word word{2};
  RationalFunctionQ closed_form;
  /// ones_zero: closed form equals Tbar_{1^s 0}.
  /// ones_zero_zero: closed form equals r_{1^r 00}.
  bool matches = false;
  /// ones_zero_zero only: the root of q_r nearest i/2, its one-step Newton
  /// approximation, and whether |root| > 1/2.
  Complex q_root{0, 0};
  Complex q_root_approx{0, 0};
  bool q_root_above_half = false;
};

FamilyReport closed_form_family(unsigned s, FamilyVariant variant);

// ---- Sums of coefficient sequences --------------------------------------------

struct CoefficientSumReport {
  bool refused = false;
  std::string reason;
  std::vector<RootProfile> profiles;
  std::vector<Rational> r_at_one;  ///< exact r_w(1) per factor
  double value = 0;                ///< prod (log r_w(1))^k / k!
  double error_bound = 0;
};

/// Sum over j of the coefficients of M in P_j; refuses unless every factor's
/// r_w has all zeros and poles strictly outside the closed unit disc.
CoefficientSumReport coefficient_sum(const Monomial& m, double tol = 1e-6);

}  // namespace ppk

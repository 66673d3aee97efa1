#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ppk/analysis.hpp"
#include "ppk/errors.hpp"
#include "test_util.hpp"

using namespace ppk;
using ppk::test::Q;
using ppk::test::W;

namespace {

PolyQ P(std::initializer_list<const char*> xs) { return PolyQ(test::Qs(xs)); }

Monomial M(std::initializer_list<std::pair<const char*, unsigned>> fs) {
  std::vector<Monomial::Factor> out;
  for (auto [w, k] : fs) out.emplace_back(Word::parse(w, 2), k);
  return Monomial(std::move(out));
}

}  // namespace

TEST(Analysis, TermBound) {
  const auto b = term_bound_series(2, 11);
  const long expect[] = {1, 2, 5, 12, 30, 72, 176, 420, 1005, 2378, 5611, 13144};
  for (unsigned j = 0; j <= 11; ++j) EXPECT_EQ(b[j], expect[j]) << j;
  EXPECT_EQ(term_bound_series(3, 0)[0], 1);
  for (unsigned p : {2u, 3u}) {
    const unsigned J = p == 2 ? 9 : 5;
    const auto bp = term_bound_series(p, J);
    for (unsigned j = 0; j <= J; ++j) EXPECT_LE(mpz_class(build_Pj(p, j).term_count()), bp[j]) << p << " " << j;
  }
}

TEST(Analysis, Asymptotics) {
  const auto c2 = asymptotic_constants(2);
  EXPECT_DOUBLE_EQ(c2.mu, 0.5);
  const auto c3 = asymptotic_constants(3);
  EXPECT_DOUBLE_EQ(c3.mu, 4.0 / 3.0);
  double sigma = 0;
  for (int k = 2; k < 200; ++k) sigma += 1.0 / (k * (std::pow(3.0, k - 1) - 1.0));
  EXPECT_NEAR(c3.sigma, sigma, 1e-12);
  // The stated leading constant undershoots the exact bound by p^{3/2}; the
  // rescaled ratio approaches 1 from below at the O(1/sqrt(j)) rate.
  const auto b = term_bound_series(2, 80);
  const double scale = std::pow(2.0, 1.5);
  const double r40 = b[40].get_d() / term_bound_asymptotic(2, 40) / scale;
  const double r80 = b[80].get_d() / term_bound_asymptotic(2, 80) / scale;
  EXPECT_NEAR(r40, 0.79366, 1e-4);
  EXPECT_GT(r80, r40);
  EXPECT_LT(r80, 1.0);
  for (unsigned j = 1; j < 60; ++j) EXPECT_LT(term_bound_asymptotic(2, j), term_bound_asymptotic(2, j + 1));
  EXPECT_THROW(term_bound_asymptotic(2, 0), UsageError);
}

TEST(Analysis, LogCoefficientsExact) {
  // r = 1/(1-x)
  const RootProfile geo = root_profile(RationalFunctionQ(P({"1"}), P({"1", "-1"})));
  for (unsigned n = 1; n <= 10; ++n) EXPECT_NEAR(static_cast<double>(log_rat_coeff_exact(geo, n).real()), 1.0 / n, 1e-12);
  EXPECT_THROW(log_rat_coeff_exact(geo, 0), UsageError);

  const RootProfile p110 = classify_word(W("110"));
  for (unsigned n = 1; n <= 12; ++n) {
    const std::complex<double> e(std::cos(2 * std::numbers::pi * n / 3), std::sin(2 * std::numbers::pi * n / 3));
    const std::complex<double> expect = std::pow(2.0, -double(n)) / n * (std::pow(-1.0, n) - e - std::conj(e));
    const auto got = log_rat_coeff_exact(p110, n);
    EXPECT_NEAR(static_cast<double>(got.real()), expect.real(), 1e-14);
    EXPECT_NEAR(static_cast<double>(got.imag()), 0.0, 1e-14);
  }

  RootProfile partial = p110;
  partial.poles.clear();
  EXPECT_THROW(log_rat_coeff_exact(partial, 1), UsageError);
}

TEST(Analysis, LogCoefficientsMatchSeries) {
  for (const Word& w : enumerate_admissible_by_length(2, 8)) {
    const RootProfile prof = classify_word(w);
    ASSERT_TRUE(prof.complete());
    const SeriesQ lg = series_log(prof.r.to_series(20));
    const double xi = std::max(prof.max_xi_modulus, 1e-300);
    for (unsigned n = 1; n <= 20; ++n) {
      const auto got = log_rat_coeff_exact(prof, n);
      const double bound = 1e-8 * std::pow(xi, n);
      ASSERT_NEAR(static_cast<double>(got.real()), lg[n].to_double(), bound) << w.str() << " n=" << n;
      ASSERT_NEAR(static_cast<double>(got.imag()), 0.0, bound) << w.str() << " n=" << n;
    }
  }
}

TEST(Analysis, ClassifyExamples) {
  const RootProfile p1010 = classify_word(W("1010"));
  EXPECT_EQ(p1010.classification, Convergence::divergent);
  ASSERT_TRUE(p1010.dominant_singularity.has_value());
  EXPECT_NEAR(static_cast<double>(p1010.dominant_singularity->real()), -0.86408, 1e-4);
  EXPECT_NEAR(static_cast<double>(p1010.dominant_singularity->imag()), 0.0, 1e-10);
  EXPECT_FALSE(p1010.coefficient_sum.has_value());

  const RootProfile p10 = classify_word(W("10"));
  EXPECT_EQ(p10.classification, Convergence::convergent);
  EXPECT_NEAR(p10.max_xi_modulus, 0.5, 1e-12);
  ASSERT_TRUE(p10.coefficient_sum.has_value());
  EXPECT_NEAR(*p10.coefficient_sum, std::log(1.5), 1e-14);

  const RootProfile p110 = classify_word(W("110"));
  EXPECT_EQ(p110.classification, Convergence::convergent);
  for (const auto* g : {&p110.zeros, &p110.poles})
    for (const auto& z : *g) EXPECT_NEAR(static_cast<double>(std::abs(z.root)), 2.0, 1e-12);
  EXPECT_NEAR(*p110.coefficient_sum, std::log(7.0 / 6.0), 1e-14);

  const RootProfile p10100 = classify_word(W("10100"));
  EXPECT_EQ(p10100.classification, Convergence::divergent);
  EXPECT_NEAR(static_cast<double>(p10100.dominant_singularity->real()), -0.86408, 1e-4);

  const RootProfile p100 = classify_word(W("100"));
  EXPECT_EQ(p100.classification, Convergence::convergent);
  EXPECT_TRUE(p100.unit_circle_certified);
  EXPECT_EQ(p100.max_xi_modulus, 1.0);

  EXPECT_THROW(classify_word(W("11")), DomainError);
}

TEST(Analysis, UnitCircleCount) {
  EXPECT_EQ(unit_circle_root_count(P({"2", "1", "2"})), 2u);
  EXPECT_EQ(unit_circle_root_count(P({"1", "1", "1"})), 2u);
  EXPECT_EQ(unit_circle_root_count(P({"1", "0", "1"})), 2u);
  EXPECT_EQ(unit_circle_root_count(P({"1", "1"})), 1u);
  EXPECT_EQ(unit_circle_root_count(P({"-1", "1"})), 1u);
  EXPECT_EQ(unit_circle_root_count(P({"1", "-1/2"})), 0u);
  EXPECT_EQ(unit_circle_root_count(P({"1", "-3", "1"})), 0u);  // reciprocal real pair off the circle
  EXPECT_EQ(unit_circle_root_count(P({"1", "1"}) * P({"1", "1"}) * P({"2", "1", "2"})), 3u);
  EXPECT_EQ(unit_circle_root_count(P({"0", "1", "1"})), 1u);
  EXPECT_EQ(unit_circle_root_count(P({"4"})), 0u);
  EXPECT_EQ(sturm_count(P({"-2", "0", "1"}), Q("-2"), Q("2")), 2u);
  EXPECT_EQ(sturm_count(P({"-2", "0", "1"}), Q("0"), Q("2")), 1u);
  EXPECT_EQ(sturm_count(P({"1", "0", "1"}), Q("-9"), Q("9")), 0u);
}

TEST(Analysis, ScanSmall) {
  const ConvergenceScan two = scan_convergent_words(2);
  ASSERT_EQ(two.convergent().size(), 1u);
  EXPECT_EQ(two.convergent()[0], W("10"));
  const ConvergenceScan ten = scan_convergent_words(10);
  std::string ones = "1";
  for (unsigned s = 1; s <= 9; ++s, ones += "1") {
    const Word w = W(ones + "0");
    EXPECT_TRUE(std::find(ten.ones_zero.begin(), ten.ones_zero.end(), w) != ten.ones_zero.end()) << w.str();
  }
  EXPECT_TRUE(ten.boundary.empty());
}

TEST(Analysis, ScanSerialMatchesParallel) {
  const ConvergenceScan a = scan_convergent_words(9), b = scan_convergent_words_serial(9);
  EXPECT_EQ(a.convergent(), b.convergent());
  EXPECT_EQ(a.exceptional, b.exceptional);
  EXPECT_EQ(classification_csv(a.profiles), classification_csv(b.profiles));
}

TEST(Analysis, ScanStableUnderTolerance) {
  const ConvergenceScan a = scan_convergent_words(10, 1e-6), b = scan_convergent_words(10, 5e-7);
  ASSERT_EQ(a.profiles.size(), b.profiles.size());
  for (std::size_t i = 0; i < a.profiles.size(); ++i)
    EXPECT_EQ(a.profiles[i].classification, b.profiles[i].classification) << a.profiles[i].word->str();
}

TEST(Analysis, FamilyPredicates) {
  EXPECT_TRUE(in_family_ones_zero(W("1110")));
  EXPECT_FALSE(in_family_ones_zero(W("1100")));
  EXPECT_TRUE(in_family_ones_4s1_zero_zero(W("1111100")));
  EXPECT_TRUE(in_family_ones_4s1_zero_zero(W("100")));
  EXPECT_FALSE(in_family_ones_4s1_zero_zero(W("11100")));
  EXPECT_TRUE(in_family_ones_zero_ones_zero(W("10110")));
  EXPECT_FALSE(in_family_ones_zero_ones_zero(W("1010")));
  EXPECT_FALSE(in_family_ones_zero_ones_zero(W("101100")));
}

TEST(Analysis, ClosedFormOnesZero) {
  for (unsigned s = 1; s <= 12; ++s) {
    const FamilyReport rep = closed_form_family(s, FamilyVariant::ones_zero);
    EXPECT_TRUE(rep.matches) << s;
    EXPECT_EQ(rep.word.str(), std::string(s, '1') + "0");
  }
  EXPECT_EQ(closed_form_family(1, FamilyVariant::ones_zero).closed_form, RationalFunctionQ(P({"1", "1/2"})));
  EXPECT_THROW(closed_form_family(0, FamilyVariant::ones_zero), UsageError);
}

TEST(Analysis, ClosedFormOnesZeroZero) {
  for (unsigned r = 1; r <= 12; ++r) EXPECT_TRUE(closed_form_family(r, FamilyVariant::ones_zero_zero).matches) << r;
  EXPECT_EQ(q_poly(1), P({"-1", "1"}));
  EXPECT_EQ(q_poly(3), P({"-1", "0", "-4", "1", "4"}));
  for (unsigned r : {5u, 9u, 13u}) {
    const FamilyReport rep = closed_form_family(r, FamilyVariant::ones_zero_zero);
    const double err = static_cast<double>(std::abs(rep.q_root - rep.q_root_approx));
    // One Newton step from i/2 leaves an error of order r 4^{-r}.
    EXPECT_LT(err, r * std::ldexp(1.0, -2 * static_cast<int>(r))) << r;
    EXPECT_GT(err, std::ldexp(1.0, -2 * static_cast<int>(r))) << r;
  }
  for (unsigned r = 4; r <= 16; ++r) {
    const FamilyReport rep = closed_form_family(r, FamilyVariant::ones_zero_zero);
    EXPECT_EQ(rep.q_root_above_half, r % 4 == 1 || r % 4 == 2) << r;
  }
}

TEST(Analysis, CoefficientSums) {
  const double l32 = std::log(1.5);
  auto x10 = coefficient_sum(M({{"10", 1}}));
  ASSERT_FALSE(x10.refused);
  EXPECT_NEAR(x10.value, l32, 1e-14);
  EXPECT_EQ(x10.r_at_one[0], Q("3/2"));
  auto x10sq = coefficient_sum(M({{"10", 2}}));
  EXPECT_NEAR(x10sq.value, 0.5 * l32 * l32, 1e-14);
  auto x110 = coefficient_sum(M({{"110", 1}}));
  EXPECT_NEAR(x110.value, std::log(7.0 / 6.0), 1e-14);
  EXPECT_EQ(x110.r_at_one[0], Q("7/6"));
  EXPECT_LE(x110.error_bound, 1e-14);
  auto x1010 = coefficient_sum(M({{"1010", 1}}));
  EXPECT_TRUE(x1010.refused);
  EXPECT_NE(x1010.reason.find("divergent"), std::string::npos);
  auto x100 = coefficient_sum(M({{"100", 1}}));
  EXPECT_TRUE(x100.refused);
  EXPECT_NE(x100.reason.find("unit circle"), std::string::npos);
  // partial sums of the coefficient series approach the reported value
  const SeriesQ s = monomial_coefficient_series(M({{"10", 1}, {"110", 1}}), 2, 60);
  double partial = 0;
  for (unsigned j = 0; j <= 60; ++j) partial += s[j].to_double();
  EXPECT_NEAR(partial, coefficient_sum(M({{"10", 1}, {"110", 1}})).value, 1e-12);
}

TEST(Analysis, Csv) {
  const std::string csv = classification_csv({classify_word(W("10")), classify_word(W("1010"))});
  std::istringstream in(csv);
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  EXPECT_EQ(header, "word,class,max_xi_modulus,dominant_singularity,coefficient_sum");
  EXPECT_EQ(row1.rfind("10,convergent,0.5,-2,0.405465108108", 0), 0u) << row1;
  EXPECT_EQ(row2.rfind("1010,divergent,", 0), 0u);
  EXPECT_EQ(row2.back(), ',');
}

#include <gtest/gtest.h>

#include "ppk/errors.hpp"
#include "ppk/poly.hpp"
#include "ppk/ratfunc.hpp"
#include "ppk/series.hpp"
#include "test_util.hpp"

using namespace ppk;
using ppk::test::Q;
using ppk::test::Qs;

namespace {

SeriesQ S(std::initializer_list<const char*> xs, std::size_t order) { return SeriesQ(Qs(xs), order); }

PolyQ P(std::initializer_list<const char*> xs) { return PolyQ(Qs(xs)); }

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Q("2/4").str(), "1/2");
  EXPECT_EQ(Q("+3/6").str(), "1/2");
  EXPECT_EQ(Q("-4/2").str(), "-2");
  EXPECT_THROW(Rational::parse("4/-2"), UsageError);
  EXPECT_EQ(Q("0/7").str(), "0");
  EXPECT_EQ(Q("0/7").den(), 1);
  EXPECT_THROW(Rational::parse("1/0"), DivisionError);
  EXPECT_THROW(Rational::parse("x"), UsageError);
  EXPECT_THROW(Rational::parse(""), UsageError);
  EXPECT_THROW(Q("1") / Q("0"), DivisionError);
}

TEST(Rational, AdditionMatchesCrossMultiplication) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> big(-1'000'000'000L, 1'000'000'000L);
  for (int i = 0; i < 1000; ++i) {
    const mpz_class a = big(rng), c = big(rng);
    mpz_class b = big(rng), d = big(rng);
    if (b == 0) b = 1;
    if (d == 0) d = 7;
    const Rational sum = Rational(a, b) + Rational(c, d);
    // (a/b + c/d) = (ad + cb) / bd; compare by cross-multiplication
    const mpz_class num = a * d + c * b;
    const mpz_class den = b * d;
    EXPECT_EQ(sum.num() * den, num * sum.den());
    EXPECT_GT(sum.den(), 0);
  }
}

TEST(Rational, Pow) {
  EXPECT_EQ(pow(Q("2/3"), 3), Q("8/27"));
  EXPECT_EQ(pow(Q("2/3"), -2), Q("9/4"));
  EXPECT_EQ(pow(Q("5"), 0), Q("1"));
  EXPECT_THROW(pow(Q("0"), -1), DivisionError);
}

TEST(Poly, Basics) {
  const PolyQ a = P({"1", "1"});   // 1 + x
  const PolyQ b = P({"-1", "1"});  // -1 + x
  EXPECT_EQ(a * b, P({"-1", "0", "1"}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(P({"2", "1", "2"}).str(), "2 + x + 2x^2");
  EXPECT_EQ(P({"0", "1/2"}).str(), "1/2*x");
  EXPECT_EQ(P({"1", "-1/4"}).str(), "1 - 1/4*x");
  EXPECT_EQ(P({}).str(), "0");
  auto [q, r] = PolyQ::divmod(P({"-1", "0", "1"}), a);
  EXPECT_EQ(q, b);
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(PolyQ::divmod(a, PolyQ()), DivisionError);
}

TEST(Poly, GcdAndSquarefree) {
  const PolyQ x1 = P({"1", "1"});
  const PolyQ x2 = P({"2", "1"});
  const PolyQ x3 = P({"3", "1"});
  EXPECT_EQ(gcd(x1 * x2, x1 * x3), x1);
  const auto sf = squarefree_decomposition((x1 * x1 * x1 * x2).scaled(Q("5")));
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0].first, x2);
  EXPECT_EQ(sf[0].second, 1u);
  EXPECT_EQ(sf[1].first, x1);
  EXPECT_EQ(sf[1].second, 3u);
}

TEST(Series, Arith) {
  EXPECT_EQ(series_arith(S({"1"}, 3), S({"0"}, 3), SeriesOp::add), S({"1", "0", "0", "0"}, 3));
  EXPECT_EQ(series_arith(S({"1", "1/2"}, 2), S({"1", "1/2"}, 2), SeriesOp::mul), S({"1", "1", "1/4"}, 2));
  EXPECT_THROW(series_arith(SeriesQ(2), SeriesQ(3), SeriesOp::add), UsageError);
  EXPECT_THROW(series_arith(SeriesQ(2), SeriesQ(3), SeriesOp::mul), UsageError);
}

TEST(Series, ProductMatchesNaiveConvolution) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const std::size_t order = 1 + i % 10;
    const SeriesQ a = test::random_series(rng, order, test::random_rational(rng));
    const SeriesQ b = test::random_series(rng, order, test::random_rational(rng));
    const SeriesQ c = a * b;
    for (std::size_t n = 0; n <= order; ++n) {
      Rational expect;
      for (std::size_t k = 0; k <= n; ++k) expect += a[k] * b[n - k];
      EXPECT_EQ(c[n], expect);
    }
  }
}

TEST(Series, Div) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const SeriesQ a = test::random_series(rng, 8, Q("3/2"));
    EXPECT_EQ(series_div(a, a), SeriesQ::one(8));
  }
  EXPECT_EQ(series_div(SeriesQ::one(3), S({"1", "-1/2"}, 3)), S({"1", "1/2", "1/4", "1/8"}, 3));
  // 1 + x^2 / (1 + x/2)
  const SeriesQ r100 = SeriesQ::one(3) + series_div(S({"0", "0", "1"}, 3), S({"1", "1/2"}, 3));
  EXPECT_EQ(r100, S({"1", "0", "1", "-1/2"}, 3));
  EXPECT_THROW(series_div(SeriesQ::one(3), S({"0", "1"}, 3)), DivisionError);
  EXPECT_THROW(series_div(SeriesQ::one(3), SeriesQ::one(4)), UsageError);
}

TEST(Series, DivUndoesMul) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 50; ++i) {
    const SeriesQ a = test::random_series(rng, 9, test::random_rational(rng));
    const SeriesQ b = test::random_series(rng, 9, Q("-2/3"));
    EXPECT_EQ(series_div(series_arith(a, b, SeriesOp::mul), b), a);
  }
}

TEST(Series, LogExp) {
  EXPECT_TRUE(series_log(SeriesQ::one(5)).is_zero());
  EXPECT_EQ(series_log(S({"1", "1/2"}, 5)), S({"0", "1/2", "-1/8", "1/24", "-1/64", "1/160"}, 5));
  EXPECT_EQ(series_exp(SeriesQ(4)), SeriesQ::one(4));
  EXPECT_EQ(series_exp(S({"0", "1"}, 3)), S({"1", "1", "1/2", "1/6"}, 3));
  EXPECT_THROW(series_log(S({"2", "1"}, 3)), DomainError);
  EXPECT_THROW(series_exp(S({"1", "1"}, 3)), DomainError);
}

TEST(Series, ExpLogRoundTrip) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 100; ++i) {
    const std::size_t order = 1 + i % 12;
    const SeriesQ f = test::random_series(rng, order, Q("1"));
    EXPECT_EQ(series_exp(series_log(f)), f);
    const SeriesQ g = test::random_series(rng, order, Q("0"));
    EXPECT_EQ(series_log(series_exp(g)), g);
  }
}

TEST(Series, Pow) {
  const SeriesQ a = S({"1", "1/2"}, 4);
  EXPECT_EQ(series_pow(a, 0), SeriesQ::one(4));
  EXPECT_EQ(series_pow(a, 3), a * a * a);
}

TEST(Series, Str) { EXPECT_EQ(S({"1", "-1/8"}, 2).str(), R"(["1", "-1/8", "0"])"); }

TEST(RationalFunction, CanonicalEquality) {
  const PolyQ x1 = P({"1", "1"}), x2 = P({"2", "1"}), x3 = P({"3", "1"});
  const RationalFunctionQ a(x1 * x2, x1 * x3);
  const RationalFunctionQ b(x2.scaled(Q("7/3")), x3.scaled(Q("7/3")));
  const RationalFunctionQ c(x2.scaled(Q("-1")), x3.scaled(Q("-1")));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a.numerator(), P({"2", "1"}));
  EXPECT_GT(a.denominator().coeff(0).sign(), 0);
  EXPECT_FALSE(a == RationalFunctionQ(x2, x1));
  EXPECT_THROW(RationalFunctionQ(x1, PolyQ()), DivisionError);
}

TEST(RationalFunction, CanonicalMatchesCrossMultiplication) {
  std::mt19937_64 rng(16);
  auto rp = [&](std::size_t deg) {
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = test::random_rational(rng);
    if (c[0].is_zero()) c[0] = Rational(1);
    if (c.back().is_zero()) c.back() = Rational(1);
    return PolyQ(std::move(c));
  };
  for (int i = 0; i < 100; ++i) {
    const PolyQ n = rp(i % 4), d = rp(i % 3), common = rp(1 + i % 2);
    const RationalFunctionQ a(n * common, d * common);
    const RationalFunctionQ b(n, d);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.numerator() * d, n * a.denominator());
  }
}

TEST(RationalFunction, Eval) {
  const RationalFunctionQ r10(P({"1", "1/2"}));
  EXPECT_EQ(ratfunc_eval(r10, Q("1")), Q("3/2"));
  // r_110 = 1 + (x^2/4) / (1 + x/2)
  const RationalFunctionQ r110(P({"1", "1/2", "1/4"}), P({"1", "1/2"}));
  EXPECT_EQ(ratfunc_eval(r110, Q("1")), Q("7/6"));
  EXPECT_EQ(ratfunc_eval(r110, Q("0")), Q("1"));
  EXPECT_THROW(ratfunc_eval(r110, Q("-2")), EvaluationError);
  EXPECT_EQ(r110.to_series(3), S({"1", "0", "1/4", "-1/8"}, 3));
}

TEST(RationalFunction, ModularCoprimality) {
  const PolyQ x1 = P({"1", "1"}), x2 = P({"2", "1"});
  EXPECT_TRUE(coprime_by_modular_gcd(x1, x2));
  EXPECT_FALSE(coprime_by_modular_gcd(x1 * x2, x1));
}

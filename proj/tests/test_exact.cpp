#include "hyperforms/ball.hpp"
#include "hyperforms/exact.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace hyperforms;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// independent oracle: lcm folded with gcd on machine integers
unsigned long long lcm_fold(unsigned n)
{
  unsigned long long r = 1;
  for (unsigned k = 2; k <= n; ++k) {
    unsigned long long a = r, b = k;
    while (b) {
      auto t = a % b;
      a = b;
      b = t;
    }
    r = r / a * k;
  }
  return r;
}

} // namespace

TEST(Exact, LcmUpto)
{
  EXPECT_EQ(lcm_upto(0), 1);
  EXPECT_EQ(lcm_upto(1), 1);
  EXPECT_EQ(lcm_upto(6), 60);
  EXPECT_EQ(lcm_upto(10), 2520);
  for (unsigned n = 0; n <= 40; ++n)
    EXPECT_EQ(lcm_upto(n), Integer(std::to_string(lcm_fold(n)))) << n;
  for (long n = 1; n <= 60; ++n)
    EXPECT_TRUE(mpz_divisible_p(lcm_upto(n).get_mpz_t(), lcm_upto(n - 1).get_mpz_t()));
  EXPECT_THROW(lcm_upto(-1), DomainError);
}

TEST(Exact, Bernoulli)
{
  EXPECT_EQ(bernoulli(0), q(1));
  EXPECT_EQ(bernoulli(2), q(1, 6));
  EXPECT_EQ(bernoulli(12), q(-691, 2730));
  EXPECT_THROW(bernoulli(3), DomainError);
  // defining recurrence, checked with B_1 = -1/2
  for (unsigned k = 2; k <= 60; k += 2) {
    Rational s(0);
    for (unsigned j = 0; j <= k; ++j) {
      if (j > 1 && j % 2 == 1)
        continue;
      s += Rational(binomial(k + 1, j)) * bernoulli(j);
    }
    EXPECT_EQ(s, 0) << k;
  }
}

TEST(Exact, EulerNumbers)
{
  EXPECT_EQ(euler_number(0), 1);
  EXPECT_EQ(euler_number(2), -1);
  EXPECT_EQ(euler_number(4), 5);
  EXPECT_EQ(euler_number(6), -61);
  EXPECT_EQ(euler_number(8), 1385);
  EXPECT_EQ(euler_number(5), 0);
}

TEST(Exact, GammaHalf)
{
  EXPECT_EQ(gamma_half(q(3)), PiMonomial(q(2), 0));
  EXPECT_EQ(gamma_half(q(1, 2)), PiMonomial(q(1), 1));
  EXPECT_EQ(gamma_half(q(7, 2)), PiMonomial(q(15, 8), 1));
  EXPECT_EQ(gamma_half(q(-1, 2)), PiMonomial(q(-2), 1));
  EXPECT_THROW(gamma_half(q(0)), PoleError);
  EXPECT_THROW(gamma_half(q(-3)), PoleError);
  EXPECT_THROW(gamma_half(q(1, 4)), DomainError);
}

TEST(Exact, GammaHalfRecursionProperty)
{
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> pick(-19, 41);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = q(pick(rng), 2);
    if (is_nonpositive_integer(a) || is_nonpositive_integer(a + 1))
      continue;
    EXPECT_EQ(gamma_half(a + 1), PiMonomial(a, 0) * gamma_half(a)) << to_string(a);
  }
}

TEST(Exact, GammaRatio)
{
  EXPECT_EQ(gamma_ratio({q(4)}, {q(2)}), PiMonomial(q(6), 0));
  EXPECT_EQ(gamma_ratio({q(3), q(3, 2), q(3, 2), q(2)}, {q(2), q(5, 2), q(5, 2), q(1)}),
            PiMonomial(q(8, 9), 0));
  EXPECT_EQ(gamma_ratio({q(1, 2), q(1, 2)}, {}), PiMonomial(q(1), 2));
  EXPECT_EQ(gamma_ratio({q(1)}, {q(1, 2)}).half_pi_exponent(), -1);
}

TEST(Exact, GammaRatioAgainstLogGamma)
{
  // oracle: exp(sum lgamma) with MPFR's own lgamma, independent of the factorial formulas
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> pick(1, 41);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> num, den;
    for (int i = 0; i < 3; ++i)
      num.push_back(q(pick(rng), 2));
    for (int i = 0; i < 3; ++i)
      den.push_back(q(pick(rng), 2));
    PiMonomial m = gamma_ratio(num, den);
    BallReal v = evaluate(m, 40);
    mpfr_t acc, t;
    mpfr_init2(acc, 300);
    mpfr_init2(t, 300);
    mpfr_set_ui(acc, 0, MPFR_RNDN);
    int sign = 0;
    for (auto &a : num) {
      mpfr_set_q(t, a.get_mpq_t(), MPFR_RNDN);
      mpfr_lngamma(t, t, MPFR_RNDN);
      mpfr_add(acc, acc, t, MPFR_RNDN);
    }
    for (auto &a : den) {
      mpfr_set_q(t, a.get_mpq_t(), MPFR_RNDN);
      mpfr_lgamma(t, &sign, t, MPFR_RNDN);
      mpfr_sub(acc, acc, t, MPFR_RNDN);
    }
    mpfr_exp(acc, acc, MPFR_RNDN);
    mpfr_sub(acc, acc, v.mid(), MPFR_RNDN);
    mpfr_div(acc, acc, v.mid(), MPFR_RNDN);
    EXPECT_LT(std::fabs(mpfr_get_d(acc, MPFR_RNDN)), 1e-35);
    mpfr_clear(acc);
    mpfr_clear(t);
  }
}

TEST(Exact, ParseAndPrintRational)
{
  EXPECT_EQ(parse_rational("3/2"), q(3, 2));
  EXPECT_EQ(parse_rational("-6/4"), q(-3, 2));
  EXPECT_EQ(parse_rational("5"), q(5));
  EXPECT_EQ(parse_rational("2.5"), q(5, 2));
  EXPECT_EQ(to_string(q(0)), "0/1");
  EXPECT_EQ(to_string(q(-3, 6)), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
}

#include "hyperforms/hyper.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hyperforms;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

PfqSpec spec(std::vector<Rational> up, std::vector<Rational> low, int z = 1)
{
  return PfqSpec{std::move(up), std::move(low), z};
}

} // namespace

TEST(Hyper, DecayExponent)
{
  PfqSpec s = spec({q(1), q(1)}, {q(2)});
  RatioSeries r = pfq_series(s);
  EXPECT_EQ(decay_exponent(r.P, r.Q), q(1));
}

TEST(Hyper, AlternatingLog2)
{
  BallReal v = eval_pfq(spec({q(1), q(1)}, {q(2)}, -1), 40);
  BallReal ref = const_log2(40);
  EXPECT_TRUE(v.overlaps(ref));
  EXPECT_TRUE(v.width_at_most_pow10(-39));
}

TEST(Hyper, GaussFourOverPi)
{
  // 2F1(1/2,1/2;2;1) = 4/pi
  BallReal v = eval_pfq(spec({q(1, 2), q(1, 2)}, {q(2)}), 40);
  BallReal ref = BallReal(4, 40) / const_pi(40);
  EXPECT_TRUE(v.overlaps(ref));
  EXPECT_TRUE(v.width_at_most_pow10(-38));
}

TEST(Hyper, TerminatingIsExact)
{
  // 2F1(-3, 1; 2; 1) = 1 - 3/2 + 1 - 1/4 = 1/4
  RatioSeries r = pfq_series(spec({q(-3), q(1)}, {q(2)}));
  SeriesSum s = sum_ratio_series(r, 30);
  EXPECT_TRUE(s.terminated);
  EXPECT_EQ(s.value, q(1, 4));
  EXPECT_EQ(s.error, q(0));
}

TEST(Hyper, GaussRandomTriples)
{
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> d(1, 12);
  int checked = 0;
  while (checked < 20) {
    Rational a = q(d(rng), 2), b = q(d(rng), 2);
    Rational c = a + b + q(d(rng), 2);
    if (c - a - b <= q(1, 2))
      continue;
    PiMonomial exact = gamma_ratio({c, c - a - b}, {c - a, c - b});
    BallReal v = eval_pfq(spec({a, b}, {c}), 30);
    EXPECT_TRUE(v.overlaps(evaluate(exact, 40))) << to_string(a) << " " << to_string(b) << " " << to_string(c);
    ++checked;
  }
}

TEST(Hyper, RefinementStaysInside)
{
  PfqSpec s = spec({q(1, 2), q(1, 4), q(3, 4)}, {q(5, 4), q(7, 4)});
  BallReal lo = eval_pfq(s, 20);
  BallReal hi = eval_pfq(s, 40);
  EXPECT_TRUE(lo.overlaps(hi));
  EXPECT_TRUE(hi.width_at_most_pow10(-38));
}

TEST(Hyper, WellPoisedQuinticAtZero)
{
  // pi^2 / Gamma(3/2)^4 * 5F4(1, 1/2 x4; 3/2 x4; 1) = pi^4 / 6
  PiMonomial pre = PiMonomial(q(1), 4) / gamma_ratio({q(3, 2), q(3, 2), q(3, 2), q(3, 2)}, {});
  PfqSpec s = spec({q(1), q(1, 2), q(1, 2), q(1, 2), q(1, 2)}, {q(3, 2), q(3, 2), q(3, 2), q(3, 2)});
  BallReal v = eval_prefactored(pre, s, 40);
  BallReal ref = evaluate(PiMonomial(q(1, 6), 8), 50);
  EXPECT_TRUE(v.overlaps(ref));
  EXPECT_TRUE(v.width_at_most_pow10(-37));
}

TEST(Hyper, Refusals)
{
  EXPECT_THROW(eval_pfq(spec({q(1), q(1)}, {q(2)}), 20), DivergenceError);
  EXPECT_THROW(eval_pfq(spec({q(1), q(1)}, {q(-2)}), 20), PoleError);
  EXPECT_THROW(eval_pfq(spec({q(1), q(1, 3)}, {q(3)}), 20), DomainError);
  EXPECT_THROW(eval_pfq(spec({q(1)}, {q(3)}), 20), DomainError);
  // margin exactly 1/2 at z = 1 is refused
  EXPECT_THROW(eval_pfq(spec({q(1, 2), q(1)}, {q(2)}), 20), DivergenceError);
  // alternating with margin 0 is accepted
  BallReal v = eval_pfq(spec({q(1, 2), q(1, 2)}, {q(1)}, -1), 20);
  EXPECT_TRUE(v.strictly_positive());
}

#include "hyperforms/linear_form.hpp"
#include "hyperforms/ratfunc.hpp"

#include <gtest/gtest.h>

using namespace hyperforms;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
}

TEST(LinearForm, LabelNamesRoundTrip)
{
  for (const auto &name : {"one", "G", "log2", "pi", "pi2", "pi4", "zeta(3)", "zeta(11)", "beta(4)", "euler_gamma"})
    EXPECT_EQ(BasisLabel::parse(name).name(), name);
  EXPECT_THROW(BasisLabel::parse("zeta(1)"), DomainError);
  EXPECT_THROW(BasisLabel::parse("beta(3)"), DomainError);
  EXPECT_THROW(BasisLabel::parse("e"), DomainError);
}

TEST(LinearForm, ZetaPiConversionUsesSixAndNinety)
{
  EXPECT_EQ(zeta_even_over_pi(2), q(1, 6));
  EXPECT_EQ(zeta_even_over_pi(4), q(1, 90));
  EXPECT_EQ(zeta_even_over_pi(6), q(1, 945));
  ConstantLinearForm f(BasisLabel::zeta(2), q(6));
  EXPECT_EQ(f.in_pi_basis().coeff(BasisLabel::pi(2)), q(1));
  ConstantLinearForm g(BasisLabel::pi(4), q(1));
  EXPECT_EQ(g.in_zeta_basis().coeff(BasisLabel::zeta(4)), q(90));
  EXPECT_TRUE(f == ConstantLinearForm(BasisLabel::pi(2), q(1)));
}

TEST(LinearForm, ZetaEvenMatchesBallConstants)
{
  for (int m = 1; m <= 6; ++m) {
    BallReal lhs = const_zeta(2 * m, 40);
    BallReal rhs = evaluate(ConstantLinearForm(BasisLabel::pi(2 * m), zeta_even_over_pi(2 * m)), 40);
    EXPECT_TRUE(lhs.overlaps(rhs)) << m;
  }
}

TEST(LinearForm, ArithmeticAndCancellation)
{
  ConstantLinearForm a = ConstantLinearForm::constant(q(1, 2)) + ConstantLinearForm(BasisLabel::catalan(), q(3));
  ConstantLinearForm b = ConstantLinearForm(BasisLabel::catalan(), q(-3));
  ConstantLinearForm c = a + b;
  EXPECT_EQ(c.support().size(), 1u);
  EXPECT_EQ(c.coeff(BasisLabel::one()), q(1, 2));
  EXPECT_EQ(c.coeff(BasisLabel::log2()), q(0));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(LinearForm, JsonRoundTrip)
{
  ConstantLinearForm f = ConstantLinearForm(BasisLabel::pi(4), q(19, 6)) + ConstantLinearForm(BasisLabel::pi(2), q(-125, 4));
  nlohmann::json j = to_json(f);
  EXPECT_EQ(j.dump(), R"({"basis":["pi2","pi4"],"coeffs":["-125/4","19/6"]})");
  EXPECT_TRUE(form_from_json(j) == f);
}

TEST(LinearForm, EvaluationIsLinear)
{
  ConstantLinearForm f = ConstantLinearForm(BasisLabel::catalan(), q(7, 3)) + ConstantLinearForm(BasisLabel::zeta(3), q(-2));
  ConstantLinearForm g = ConstantLinearForm(BasisLabel::log2(), q(5)) + ConstantLinearForm(BasisLabel::zeta(3), q(11, 7));
  BallReal sum = evaluate(f + g, 40);
  BallReal parts = evaluate(f, 40) + evaluate(g, 40);
  EXPECT_TRUE(sum.overlaps(parts));
  EXPECT_TRUE(sum.width_at_most_pow10(-39));
}

// Hurwitz reduction table against direct summation by the series engine.
TEST(LinearForm, HurwitzTableMatchesDirectSums)
{
  for (int i = 2; i <= 8; ++i)
    for (const Rational &f : {q(1), q(1, 2), q(1, 4), q(3, 4), q(-5, 4), q(7, 2)}) {
      FactoredRationalFunction R;
      R.factor(0, -i);
      BallReal direct = direct_sum(R, SummationGrid{f, 0, false}, 40);
      BallReal table = evaluate(hurwitz_form(i, f), 40);
      EXPECT_TRUE(direct.overlaps(table)) << i << " " << to_string(f);
    }
}

TEST(LinearForm, DigammaDifferencesMatchDirectSums)
{
  // sum_t [1/(t+1) - 1/(t+f)] = psi(f) - psi(1)
  for (const Rational &f : {q(1, 2), q(1, 4), q(3, 4), q(9, 4)}) {
    FactoredRationalFunction R(f - 1);
    R.factor(-1, -1).factor(-f, -1);
    BallReal direct = direct_sum(R, SummationGrid{0, 0, false}, 40);
    ConstantLinearForm table = hurwitz_form(1, f) * q(-1) + hurwitz_form(1, q(1));
    EXPECT_EQ(table.coeff(BasisLabel::euler_gamma()), q(0));
    EXPECT_TRUE(direct.overlaps(evaluate(table, 40))) << to_string(f);
  }
}

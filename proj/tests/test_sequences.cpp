#include "hyperforms/sequences.hpp"

#include <gtest/gtest.h>

using namespace hyperforms;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

ConstantLinearForm pi_form(const Rational &c4, const Rational &c2)
{
  return ConstantLinearForm(BasisLabel::pi(4), c4) + ConstantLinearForm(BasisLabel::pi(2), c2);
}

} // namespace

TEST(Sequences, FamilyNames)
{
  for (Family f : all_families())
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("ZETA3"), DomainError);
  EXPECT_THROW(build_family(Family::log2_r, 31), DomainError);
  EXPECT_NO_THROW(build_family(Family::log2_r, 31, 40));
}

TEST(Sequences, PiSquaredInitialForms)
{
  EXPECT_TRUE(build_form(Family::pi2_r, 0) == pi_form(q(1, 6), q(0)));
  EXPECT_TRUE(build_form(Family::pi2_r, 1) == pi_form(q(19, 6), q(-125, 4)));
}

TEST(Sequences, LogTwoFirstForm)
{
  ConstantLinearForm want = ConstantLinearForm(BasisLabel::log2(), q(3)) + ConstantLinearForm::constant(q(-2));
  EXPECT_TRUE(build_form(Family::log2_r, 1) == want);
}

TEST(Sequences, FormsMatchDirectSummation)
{
  for (Family f : all_families())
    for (int n = 0; n <= 8; ++n) {
      BallReal form = evaluate(build_form(f, n), 30);
      BallReal direct = evaluate_direct(f, n, 30);
      EXPECT_TRUE(form.overlaps(direct)) << family_name(f) << " " << n;
      EXPECT_TRUE(direct.width_at_most_pow10(-29));
    }
}

TEST(Sequences, FormsMatchHypergeometricSeries)
{
  for (Family f : all_families())
    for (int n = 0; n <= 5; ++n)
      EXPECT_TRUE(evaluate(build_form(f, n), 30).overlaps(evaluate_series(f, n, 30))) << family_name(f) << " " << n;
}

TEST(Sequences, BasisRestrictions)
{
  for (int n = 0; n <= 10; ++n) {
    ConstantLinearForm c = extract_form(Family::catalan_wt, n);
    for (BasisLabel l : {BasisLabel::pi(1), BasisLabel::pi(2), BasisLabel::log2()})
      EXPECT_EQ(c.coeff(l), q(0)) << n;
    EXPECT_EQ(build_form(Family::pi2_r, n).coeff(BasisLabel::one()), q(0)) << n;
  }
}

TEST(Sequences, CrossChecks)
{
  VerificationReport cat = cross_check(Family::catalan_r, Family::catalan_wt, 2, 50);
  EXPECT_TRUE(cat.pass) << cat.detail;
  EXPECT_TRUE(cat.forms_equal);
  VerificationReport lg = cross_check(Family::log2_r, Family::log2_wt, 3, 50);
  EXPECT_TRUE(lg.pass) << lg.detail;
  EXPECT_TRUE(lg.forms_equal);
  EXPECT_TRUE(cross_check(Family::log2_r, Family::log2_r, 0, 50).pass);
  EXPECT_FALSE(cross_check(Family::log2_r, Family::catalan_r, 1, 30).pass);
}

TEST(Sequences, LogTwoRecurrenceFit)
{
  auto rec = fit_recurrence(Family::log2_r, 2, 1, 0, 12);
  ASSERT_TRUE(rec.has_value());
  EXPECT_EQ(rec->coeffs[2], Poly({q(1), q(1)}));
  EXPECT_EQ(rec->coeffs[1], Poly({q(-3), q(-6)}));
  EXPECT_EQ(rec->coeffs[0], Poly({q(0), q(1)}));
  EXPECT_EQ(rec->status, "fitted");
  EXPECT_EQ(rec->verified_to, 15);
}

TEST(Sequences, LogTwoRecurrenceHoldsExactly)
{
  Recurrence rec;
  rec.order = 2;
  rec.coeffs = {Poly({q(0), q(1)}), Poly({q(-3), q(-6)}), Poly({q(1), q(1)})};
  std::vector<ConstantLinearForm> forms;
  for (int n = 0; n <= 21; ++n)
    forms.push_back(build_form(Family::log2_r, n));
  EXPECT_TRUE(recurrence_holds(rec, forms, 0, 1, 20));
}

TEST(Sequences, ConstantSequence)
{
  std::vector<ConstantLinearForm> forms(10, ConstantLinearForm(BasisLabel::catalan(), q(3, 7)));
  auto rec = fit_recurrence(forms, 0, 1, 0);
  ASSERT_TRUE(rec.has_value());
  EXPECT_EQ(rec->coeffs[1], Poly::constant(q(1)));
  EXPECT_EQ(rec->coeffs[0], Poly::constant(q(-1)));
}

TEST(Sequences, NoRecurrenceIsNull)
{
  std::vector<ConstantLinearForm> forms;
  for (int n = 0; n < 12; ++n)
    forms.push_back(ConstantLinearForm::constant(Rational(factorial(n * n))));
  EXPECT_FALSE(fit_recurrence(forms, 0, 1, 1).has_value());
  EXPECT_THROW(fit_recurrence(Family::log2_r, 2, 1, 0, 8), DomainError);
}

TEST(Sequences, PiSquaredCharacteristicPolynomial)
{
  std::optional<Recurrence> rec;
  for (int d = 1; d <= 8 && !rec; ++d)
    rec = fit_recurrence(Family::pi2_r, 2, d, 0, 3 * (d + 1) + 3);
  ASSERT_TRUE(rec.has_value());
  EXPECT_EQ(characteristic_polynomial(*rec), Poly({q(1), q(-123), q(1)}));
}

TEST(Sequences, PiSquaredRatioTrend)
{
  // |r_{n+1}/r_n| approaches the smaller characteristic root phi^-10 from below, slowly
  const double phi10 = std::pow((1 + std::sqrt(5.0)) / 2, -10);
  double prev = 0;
  BallReal r = evaluate(build_form(Family::pi2_r, 4), 40);
  for (int n = 4; n <= 20; ++n) {
    BallReal next = evaluate(build_form(Family::pi2_r, n + 1), 40);
    double rel = std::fabs((next / r).to_double()) / phi10;
    EXPECT_GT(rel, prev) << n;
    EXPECT_LT(rel, 1.0) << n;
    prev = rel;
    r = next;
  }
  EXPECT_GT(prev, 0.95);
}

TEST(Sequences, CatalanIntegrality)
{
  IntegralityCertificate c0 = certify_integrality(Family::catalan_wt, 0);
  EXPECT_EQ(c0.scale, 1);
  EXPECT_TRUE(c0.pass);
  IntegralityCertificate c1 = certify_integrality(Family::catalan_wt, 1);
  EXPECT_EQ(c1.scale, 16);
  EXPECT_TRUE(c1.pass);
  IntegralityCertificate c4 = certify_integrality(Family::catalan_wt, 4);
  EXPECT_EQ(c4.scale, Integer(65536) * 420 * 420);
  EXPECT_TRUE(c4.pass);
  for (int n = 0; n <= 8; ++n)
    EXPECT_LE(certify_integrality(Family::catalan_wt, n).minimal_power_of_two, 4 * n);
  EXPECT_THROW(certify_integrality(Family::pi2_r, 1), DomainError);
}

TEST(Sequences, LogTwoIntegrality)
{
  for (int n = 0; n <= 10; ++n) {
    IntegralityCertificate c = certify_integrality(Family::log2_wt, n);
    EXPECT_TRUE(c.conjectural);
    EXPECT_TRUE(c.pass) << n;
  }
}

#include "hyperforms/identities.hpp"
#include "hyperforms/sequences.hpp"

#include <gtest/gtest.h>

using namespace hyperforms;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

} // namespace

TEST(Identities, Names)
{
  for (IdentityId id : all_identities())
    EXPECT_EQ(parse_identity(identity_name(id)), id);
  EXPECT_THROW(parse_identity("TH_ZETA"), DomainError);
  EXPECT_EQ(identity_parameters(IdentityId::t7635).size(), 6u);
}

TEST(Identities, CatalanIdentityAtSamplePoint)
{
  IdentityReport r = verify_identity(IdentityId::th_cat, {{"n", q(1)}, {"c", q(3, 2)}, {"d", q(5, 2)}}, 40);
  EXPECT_TRUE(r.pass) << r.lhs.to_string() << " " << r.rhs.to_string();
}

TEST(Identities, CatalanSpecialisationGivesBothSequences)
{
  // c = d = n + 1/2 turns the two sides into r_n and the weighted sequence
  for (int n = 0; n <= 3; ++n) {
    const Rational c = q(2 * n + 1, 2);
    IdentitySides s = identity_sides(IdentityId::th_cat, {{"n", q(n)}, {"c", c}, {"d", c}});
    FamilyInstance cat = build_family(Family::catalan_r, n);
    BallReal lhs = eval_prefactored(cat.prefactor, s.lhs.series, 50);
    BallReal direct = evaluate_direct(Family::catalan_wt, n, 50);
    EXPECT_TRUE(lhs.overlaps(direct)) << n;
    BallReal rhs = eval_prefactored(cat.prefactor * s.rhs.prefactor(), s.rhs.series, 50);
    EXPECT_TRUE(rhs.overlaps(direct)) << n;
  }
}

TEST(Identities, LogTwoSpecialisation)
{
  for (int n = 0; n <= 5; ++n) {
    ParamMap p{{"x", q(n + 1)}, {"a", q(n + 1, 2)}, {"b", q(3 * n + 3, 2)}};
    IdentitySides s = identity_sides(IdentityId::th_ln2, p);
    PiMonomial pre = gamma_ratio({q(n + 1), q(n + 1)}, {q(2 * n + 2)}) * s.rhs.prefactor();
    BallReal rhs = eval_prefactored(pre, s.rhs.series, 40);
    EXPECT_TRUE(rhs.overlaps(evaluate_direct(Family::log2_wt, n, 40))) << n;
  }
}

TEST(Identities, RarifiedAperyCase)
{
  IdentityReport r = verify_identity(IdentityId::eq_2n1_4n2, {{"n", q(1)}}, 40);
  EXPECT_TRUE(r.pass);
  BallReal apery = eval_pfq(PfqSpec{{q(3), q(3), q(3)}, {q(6), q(6)}, 1}, 40);
  EXPECT_TRUE(r.rhs.overlaps(apery));
}

TEST(Identities, PiSquaredTheoremOnDiagonal)
{
  for (int n = 0; n <= 3; ++n) {
    const Rational a = q(2 * n + 1);
    IdentityReport th = verify_identity(IdentityId::th_pi2, {{"a", a}, {"b", a}, {"c", a}}, 40);
    EXPECT_TRUE(th.pass) << n;
    IdentityReport eq = verify_identity(IdentityId::eq_2n1_4n2, {{"n", q(n)}}, 40);
    EXPECT_TRUE(eq.pass) << n;
    EXPECT_TRUE(th.rhs.overlaps(eq.lhs)) << n;
    EXPECT_TRUE(th.lhs.overlaps(eq.rhs)) << n;
  }
}

TEST(Identities, LogTwoSweep)
{
  std::map<std::string, ParamRange> box{{"x", {q(1, 2), q(8), q(1, 2)}},
                                        {"a", {q(1, 2), q(8), q(1, 2)}},
                                        {"b", {q(1, 2), q(8), q(1, 2)}}};
  SweepResult r = sweep(IdentityId::th_ln2, box, 25, 40);
  EXPECT_EQ(r.reports.size(), 25u);
  EXPECT_EQ(r.failures, 0);
}

TEST(Identities, WellPoisedSweep)
{
  SweepResult r = sweep(IdentityId::t7635, default_ranges(IdentityId::t7635), 10, 30, 99);
  EXPECT_EQ(r.reports.size(), 10u);
  EXPECT_EQ(r.failures, 0);
}

TEST(Identities, SweepIsDeterministic)
{
  SweepResult a = sweep(IdentityId::t3240, default_ranges(IdentityId::t3240), 5, 20, 5);
  SweepResult b = sweep(IdentityId::t3240, default_ranges(IdentityId::t3240), 5, 20, 5);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (size_t i = 0; i < a.reports.size(); ++i)
    EXPECT_EQ(a.reports[i].params, b.reports[i].params);
  EXPECT_EQ(a.skipped, b.skipped);
}

TEST(Identities, ProofChainComposes)
{
  int checked = 0;
  for (int a = 1; a <= 4 && checked < 3; ++a)
    for (int b2 = 1; b2 <= 6 && checked < 3; b2 += 2)
      for (int c = 1; c <= 4 && checked < 3; ++c)
        for (int d = 2; d <= 8 && checked < 3; ++d) {
          ParamMap p{{"a", q(a)}, {"b", q(b2, 2)}, {"c", q(c)}, {"d", q(d)}};
          if (admissibility_failure(IdentityId::eq_3f2_7f6, p) || admissibility_failure(IdentityId::t3240, p))
            continue;
          ChainReport r;
          try {
            r = verify_pi2_chain(p, 30);
          } catch (const InadmissibleError &) {
            continue;
          }
          EXPECT_TRUE(r.pass) << params_to_string(p);
          EXPECT_TRUE(r.prefactors_equal) << params_to_string(p);
          ++checked;
        }
  EXPECT_EQ(checked, 3);
}

TEST(Identities, InadmissibleIsNamed)
{
  try {
    verify_identity(IdentityId::th_ln2, {{"x", q(1)}, {"a", q(3)}, {"b", q(1)}}, 20);
    FAIL();
  } catch (const InadmissibleError &e) {
    EXPECT_NE(std::string(e.what()).find("TH_LN2"), std::string::npos);
  }
  EXPECT_TRUE(admissibility_failure(IdentityId::th_ln2, {{"x", q(1, 3)}, {"a", q(1)}, {"b", q(3)}}).has_value());
  EXPECT_TRUE(admissibility_failure(IdentityId::th_pi2, {{"a", q(3, 2)}, {"b", q(2)}, {"c", q(2)}}).has_value());
  EXPECT_THROW(identity_sides(IdentityId::th_ln2, {{"x", q(1)}, {"a", q(1)}}), DomainError);
}

TEST(Identities, PerturbedSideIsDetected)
{
  ParamMap p{{"x", q(3, 2)}, {"a", q(2)}, {"b", q(5)}};
  IdentitySides s = identity_sides(IdentityId::th_ln2, p);
  s.rhs.series.upper[1] += q(1, 2);
  BallReal lhs = evaluate_side(s.lhs, 40), rhs = evaluate_side(s.rhs, 40);
  EXPECT_FALSE(lhs.overlaps(rhs));
}

TEST(Identities, SidesAreEvaluatedIndependently)
{
  // changing the working precision of one side leaves the other untouched
  ParamMap p{{"a", q(1)}, {"b", q(3, 2)}, {"c", q(2)}, {"d", q(4)}};
  IdentitySides s = identity_sides(IdentityId::t3240, p);
  BallReal rhs = evaluate_side(s.rhs, 40);
  for (long d : {25L, 40L, 70L})
    EXPECT_TRUE(evaluate_side(s.lhs, d).overlaps(rhs));
}

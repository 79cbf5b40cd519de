#include "hyperforms/group.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace hyperforms;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

std::set<ParamMatrix> as_set(const std::vector<ParamMatrix> &v) { return {v.begin(), v.end()}; }

} // namespace

TEST(Group, BuildMatrixBySubstitution)
{
  ParamMatrix m = build_matrix(q(1), q(1), q(1, 2), q(2), q(3, 2));
  EXPECT_EQ(m.c[0], q(0)); // 2 + 3/2 - 1 - 1 - 1/2 - 1
  EXPECT_EQ(m.at(1, 1), q(0));
  EXPECT_EQ(m.at(1, 2), q(0));
  EXPECT_EQ(m.at(1, 3), q(-1, 2));
  EXPECT_EQ(m.at(3, 1), q(-1, 2));
  EXPECT_EQ(m.at(3, 2), q(1, 2));
  EXPECT_EQ(m.at(3, 3), q(0));
  EXPECT_TRUE(is_consistent(m));
  m.at(2, 2) += 1;
  EXPECT_FALSE(is_consistent(m));
}

TEST(Group, EqualUpperParametersGiveEqualRows)
{
  ParamMatrix m = build_matrix(q(3), q(3), q(5, 2), q(7), q(15, 2));
  EXPECT_EQ(act(generator("a1"), m), m);
}

TEST(Group, OrderAndInvolutions)
{
  EXPECT_EQ(generate_group().size(), 120u);
  for (const auto &g : group_generators())
    EXPECT_EQ(compose(g, g), identity_element());
  EXPECT_EQ(generate_subgroup({generator("a1"), generator("a2"), generator("b")}).size(), 12u);
}

TEST(Group, ImagesStayConsistent)
{
  ParamMatrix m = build_matrix(q(2), q(3), q(7, 2), q(9), q(17, 2));
  for (const auto &g : generate_group())
    EXPECT_TRUE(is_consistent(act(g, m)));
}

TEST(Group, JsonRoundTrip)
{
  ParamMatrix m = build_matrix(q(2), q(3), q(7, 2), q(9), q(17, 2));
  nlohmann::json j = to_json(m);
  EXPECT_EQ(j.size(), 10u);
  EXPECT_EQ(j.at("c13"), "11/2");
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_THROW(matrix_from_json(nlohmann::json::object()), DomainError);
}

TEST(Group, TrivialGeneratorsPermuteSeriesParameters)
{
  ParamMatrix m = build_matrix(q(1), q(2), q(3, 2), q(11, 2), q(5));
  for (const char *name : {"a1", "a2", "b"}) {
    PfqSpec s = matrix_series(m), t = matrix_series(act(generator(name), m));
    std::multiset<Rational> su(s.upper.begin(), s.upper.end()), tu(t.upper.begin(), t.upper.end());
    std::multiset<Rational> sl(s.lower.begin(), s.lower.end()), tl(t.lower.begin(), t.lower.end());
    EXPECT_EQ(su, tu) << name;
    EXPECT_EQ(sl, tl) << name;
  }
}

TEST(Group, InvariantMatchesGaussWhenSeriesReduces)
{
  // a3 = b3 reduces 3F2 to 2F1(1); the quantity becomes 1/(Gamma(b2-a1) Gamma(b2-a2) Gamma(b3))
  ParamMatrix m = build_matrix(q(1), q(2), q(3, 2), q(9, 2), q(3, 2));
  BallReal exact = evaluate(gamma_ratio({}, {q(7, 2), q(5, 2), q(3, 2)}), 40);
  EXPECT_TRUE(invariant_value(m, 40).overlaps(exact));
  OrbitReport rep = orbit_invariant_check(m, 30);
  EXPECT_GT(rep.evaluated, 0);
  for (const auto &mem : rep.members)
    if (mem.value)
      EXPECT_TRUE(mem.value->overlaps(exact)) << to_string(mem.matrix);
}

TEST(Group, ThomaeImageAgrees)
{
  ParamMatrix m = build_matrix(q(1), q(2), q(3, 2), q(11, 2), q(5));
  ParamMatrix hm = act(generator("h"), m);
  EXPECT_NE(hm, m);
  BallReal x = invariant_value(m, 40), y = invariant_value(hm, 40);
  EXPECT_TRUE(x.overlaps(y)) << x.to_string() << " " << y.to_string();
  ParamMatrix bad = build_matrix(q(2), q(2), q(3, 2), q(11, 2), q(5));
  EXPECT_FALSE(invariant_value(m, 40).overlaps(invariant_value(bad, 40)));
}

TEST(Group, OrbitInvarianceSkipsDivergentMembers)
{
  ParamMatrix m = build_matrix(q(1), q(1), q(1, 2), q(5, 2), q(2));
  OrbitReport rep = orbit_invariant_check(m, 30);
  EXPECT_EQ(rep.members.size(), 120u);
  EXPECT_GT(rep.skipped, 0);
  EXPECT_GT(rep.evaluated, 0);
  EXPECT_EQ(rep.evaluated + rep.skipped, 120);
  EXPECT_TRUE(rep.pass);
}

TEST(Group, OrbitInvarianceAtGenericPoint)
{
  ParamMatrix m = build_matrix(q(2), q(3), q(5, 2), q(7), q(13, 2));
  OrbitReport rep = orbit_invariant_check(m, 30);
  EXPECT_EQ(rep.skipped, 0);
  EXPECT_TRUE(rep.pass);
}

TEST(Group, DisplayedRepresentativesBelongToGroup)
{
  const auto &g = generate_group();
  for (const auto &r : pattern_representatives())
    EXPECT_TRUE(std::binary_search(g.begin(), g.end(), r));
  auto elems = half_integer_elements();
  EXPECT_EQ(std::set<GroupElement>(elems.begin(), elems.end()).size(), 12u);
}

TEST(Group, HalfIntegerRepresentativesMatchBruteForce)
{
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(0, 6);
  int tested = 0;
  while (tested < 10) {
    const Rational a1 = q(1 + d(rng)), a2 = q(1 + d(rng)), a3 = q(2 * d(rng) + 1, 2);
    const Rational top = std::max(a1, a2);
    const Rational b2 = top + d(rng) + 1, b3 = top + q(2 * d(rng) + 1, 2);
    ASSERT_TRUE(satisfies_cond(a1, a2, a3, b2, b3));
    ParamMatrix m = build_matrix(a1, a2, a3, b2, b3);
    bool above = true;
    for (const auto &x : m.c)
      above = above && x >= q(-1, 2);
    if (!above)
      continue;
    ++tested;
    auto reps = classify_half_integer_reps(m);
    EXPECT_EQ(reps.size(), 12u);
    for (const auto &r : reps)
      EXPECT_TRUE(has_half_integer_pattern(r));
    EXPECT_EQ(as_set(reps), as_set(brute_force_half_integer_reps(m))) << to_string(m);
  }
  EXPECT_THROW(classify_half_integer_reps(build_matrix(q(1), q(2), q(3), q(5), q(6))), DomainError);
}

TEST(Group, RecordMatricesAtNOne)
{
  // the reference (3,2) entries differ by one from the parametrisation
  for (int which : {1, 2}) {
    ParamMatrix got = shifted(record_matrix(1, which), 1), reference = reference_record_matrix(1, which);
    for (int i = 0; i < kSlots; ++i) {
      if (i == slot_index(3, 2))
        EXPECT_EQ(got.c[i] - reference.c[i], q(1)) << which;
      else
        EXPECT_EQ(got.c[i], reference.c[i]) << which << " " << slot_names()[i];
    }
    EXPECT_TRUE(has_half_integer_pattern(record_matrix(1, which)));
  }
  // the two collections are disjoint under the group
  ParamMatrix r2 = record_matrix(1, 2);
  for (const auto &g : generate_group())
    EXPECT_NE(act(g, record_matrix(1, 1)), r2);
}

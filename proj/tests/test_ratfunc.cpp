#include "hyperforms/ratfunc.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hyperforms;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

PartialFractionExpansion pf_of(std::initializer_list<std::tuple<Rational, int, Rational>> terms)
{
  PartialFractionExpansion pf;
  for (const auto &[c, i, a] : terms)
    pf.add(c, i, a);
  return pf;
}

// symmetric under t -> -n - t, all orders even
FactoredRationalFunction random_symmetric(std::mt19937_64 &rng, int n)
{
  std::uniform_int_distribution<int> mult(1, 3), coef(1, 9), rootnum(-40, 40);
  FactoredRationalFunction R(q(coef(rng), coef(rng)));
  int den = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    int M = 2 * mult(rng);
    R.factor(q(-k), -M);
    if (n - k != k)
      R.factor(q(k - n), -M);
    den += (n - k != k) ? 2 * M : M;
  }
  // numerator roots in pairs r, -n - r
  std::uniform_int_distribution<int> npairs(0, std::max(0, (den - 2) / 2));
  int pairs = std::min(npairs(rng), 4);
  for (int p = 0; p < pairs; ++p) {
    Rational r = q(rootnum(rng), 6);
    if (r == q(-n, 2))
      r += q(1, 6);
    R.factor(r, 1).factor(-q(n) - r, 1);
  }
  return R;
}

} // namespace

TEST(Ratfunc, TelescopingPair)
{
  FactoredRationalFunction R;
  R.factor(0, -1).factor(-1, -1);
  PartialFractionExpansion pf = partial_fractions(R);
  EXPECT_EQ(pf.terms.size(), 2u);
  EXPECT_EQ(pf.coeff(0, 1), q(1));
  EXPECT_EQ(pf.coeff(-1, 1), q(-1));
}

TEST(Ratfunc, SquaredPair)
{
  FactoredRationalFunction R(2);
  R.factor(q(-1, 2), 1).factor(0, -2).factor(-1, -2);
  PartialFractionExpansion pf = partial_fractions(R);
  EXPECT_EQ(pf.terms.size(), 2u);
  EXPECT_EQ(pf.coeff(0, 2), q(1));
  EXPECT_EQ(pf.coeff(-1, 2), q(-1));
}

TEST(Ratfunc, ImproperIsRejected)
{
  FactoredRationalFunction R;
  R.factor(1, 2).factor(0, -2);
  EXPECT_THROW(partial_fractions(R), DomainError);
}

TEST(Ratfunc, RandomRecombination)
{
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 4), order(1, 4), npoles(1, 6);
  for (int trial = 0; trial < 30; ++trial) {
    FactoredRationalFunction R(q(num(rng) | 1, den(rng)));
    int degden = 0;
    int np = npoles(rng);
    for (int p = 0; p < np; ++p) {
      int o = order(rng);
      R.factor(q(num(rng), den(rng)), -o);
    }
    degden = R.denominator_degree();
    std::uniform_int_distribution<int> nz(0, std::max(0, degden - 1));
    int zeros = nz(rng);
    for (int z = 0; z < zeros; ++z)
      R.factor(q(num(rng), 5), 1);
    if (!R.is_proper())
      continue;
    PartialFractionExpansion pf = partial_fractions(R);
    for (int k = 0; k < 20; ++k) {
      Rational t = q(num(rng), 7) + q(1, 11);
      EXPECT_EQ(pf(t), R(t));
    }
  }
}

TEST(Ratfunc, DerivativeRule)
{
  PartialFractionExpansion d = derivative(pf_of({{q(0), 1, q(1)}}));
  EXPECT_EQ(d.terms.size(), 1u);
  EXPECT_EQ(d.coeff(0, 2), q(-1));
  PartialFractionExpansion d2 = derivative(pf_of({{q(0), 2, q(1)}, {q(-1), 2, q(-1)}}));
  EXPECT_EQ(d2.coeff(0, 3), q(-2));
  EXPECT_EQ(d2.coeff(-1, 3), q(2));
}

TEST(Ratfunc, SymmetryExamples)
{
  SymmetryReport r = analyze_symmetry(pf_of({{q(0), 2, q(1)}, {q(-1), 2, q(1)}}), 1);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.sign, 1);
  EXPECT_EQ(r.center, q(-1, 2));
  EXPECT_EQ(r.column_sums.at(2), q(2));
  EXPECT_EQ(r.a0, q(4));
  EXPECT_EQ(r.lemma_a0, q(4));

  SymmetryReport bad = analyze_symmetry(pf_of({{q(0), 2, q(1)}, {q(-1), 2, q(2)}}), 1);
  EXPECT_FALSE(bad.verified);
  ASSERT_TRUE(bad.counterexample.has_value());
  EXPECT_EQ(bad.counterexample->first, 2);
}

TEST(Ratfunc, SumExamples)
{
  ConstantLinearForm a = sum_linear_form(pf_of({{q(0), 2, q(1)}}), SummationGrid{q(-1, 2), 1, false});
  EXPECT_TRUE(a == ConstantLinearForm(BasisLabel::zeta(2), q(3)));

  ConstantLinearForm b = sum_linear_form(pf_of({{q(-1), 1, q(1)}}), SummationGrid{q(0), 0, true});
  EXPECT_TRUE(b == ConstantLinearForm(BasisLabel::log2(), q(1)));

  PartialFractionExpansion quarter = pf_of({{q(-1, 4), 2, q(1)}, {q(-3, 4), 2, q(-1)}});
  ConstantLinearForm c0 = sum_linear_form(quarter, SummationGrid{q(0), 0, false});
  EXPECT_TRUE(c0 == ConstantLinearForm(BasisLabel::catalan(), q(16)));
  ConstantLinearForm c1 = sum_linear_form(quarter, SummationGrid{q(0), 1, false});
  EXPECT_TRUE(c1 == ConstantLinearForm(BasisLabel::catalan(), q(16)) + ConstantLinearForm::constant(q(-128, 9)));
}

TEST(Ratfunc, SumErrors)
{
  EXPECT_THROW(sum_linear_form(pf_of({{q(0), 1, q(1)}}), SummationGrid{q(1, 2), 0, false}), DivergenceError);
  EXPECT_THROW(sum_linear_form(pf_of({{q(1, 3), 2, q(1)}}), SummationGrid{q(0), 0, false}), DomainError);
  EXPECT_THROW(sum_linear_form(pf_of({{q(2), 2, q(1)}}), SummationGrid{q(0), 0, false}), PoleError);
  EXPECT_THROW(sum_linear_form(pf_of({{q(0), 2, q(1)}}), SummationGrid{q(1, 3), 0, false}), DomainError);
}

TEST(Ratfunc, AlternatingQuarterMatchesDirectSum)
{
  FactoredRationalFunction R;
  R.factor(q(-1, 2), -2).factor(q(-3), -1);
  PartialFractionExpansion pf = partial_fractions(R);
  SummationGrid g{q(0), 2, true};
  BallReal direct = direct_sum(R, g, 40);
  EXPECT_TRUE(direct.overlaps(evaluate(sum_linear_form(pf, g), 40)));
}

TEST(Ratfunc, LemmaOneOnRandomSymmetricFunctions)
{
  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<int> nd(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = nd(rng);
    FactoredRationalFunction R = random_symmetric(rng, n);
    PartialFractionExpansion pf = partial_fractions(R);
    SymmetryReport rep = analyze_symmetry(pf, n);
    ASSERT_TRUE(rep.verified) << trial;
    EXPECT_EQ(rep.sign, 1);
    EXPECT_EQ(rep.a0, rep.lemma_a0) << trial;
    for (const auto &[i, ai] : rep.column_sums)
      EXPECT_EQ(i % 2, 0) << trial;
    const int m = n >= 1 ? (n - 1) / 2 : -1;
    SummationGrid grid{q(-1, 2), -m, false};
    ConstantLinearForm generic = sum_linear_form(pf, grid);
    ConstantLinearForm lemma = lemma_form(rep);
    EXPECT_TRUE(generic == lemma) << trial << ": " << generic.to_string() << " vs " << lemma.to_string();
    for (const auto &[label, c] : generic.terms())
      if (label.kind == BasisLabel::Kind::zeta)
        EXPECT_EQ(label.index % 2, 0);
    BallReal direct = direct_sum(R, grid, 30);
    EXPECT_TRUE(direct.overlaps(evaluate(lemma, 30))) << trial;
  }
}

TEST(Ratfunc, DerivativeSumFactor)
{
  // integer poles, half-integer grid: zeta(i+1) coefficient is -i a_i (2^(i+1) - 1)
  PartialFractionExpansion pf = pf_of({{q(0), 2, q(3)}, {q(-1), 2, q(3)}, {q(0), 3, q(1)}, {q(-1), 3, q(-1)}, {q(-2), 4, q(5)}});
  ConstantLinearForm d = sum_linear_form(derivative(pf), SummationGrid{q(-1, 2), 1, false});
  for (int i = 2; i <= 4; ++i) {
    Rational ai(0);
    for (const auto &[key, a] : pf.terms)
      if (key.second == i)
        ai += a;
    Rational want = -ai * i * (Rational((1L << (i + 1)) - 1));
    EXPECT_EQ(d.coeff(BasisLabel::zeta(i + 1)), want) << i;
  }
}

TEST(Ratfunc, DirectDerivativeSum)
{
  FactoredRationalFunction R(3);
  R.factor(q(1, 2), 1).factor(0, -3).factor(-1, -3);
  SummationGrid g{q(-1, 2), 1, false};
  BallReal direct = direct_sum(R, g, 40, true);
  ConstantLinearForm f = sum_linear_form(derivative(partial_fractions(R)), g);
  EXPECT_TRUE(direct.overlaps(evaluate(f, 40)));
}

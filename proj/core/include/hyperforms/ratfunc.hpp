#pragma once

#include "hyperforms/ball.hpp"
#include "hyperforms/exact.hpp"
#include "hyperforms/linear_form.hpp"
#include "hyperforms/poly.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hyperforms {

// scalar * prod (t - r)^e over a map r -> e with e != 0 (negative e are poles)
class FactoredRationalFunction {
public:
  FactoredRationalFunction() = default;
  explicit FactoredRationalFunction(const Rational &scalar) : scalar_(scalar) {}

  // multiply by (t - root)^multiplicity; multiplicity may be negative
  FactoredRationalFunction &factor(const Rational &root, int multiplicity);
  FactoredRationalFunction &scale(const Rational &s);
  FactoredRationalFunction operator*(const FactoredRationalFunction &o) const;

  const Rational &scalar() const { return scalar_; }
  const std::map<Rational, int> &exponents() const { return exps_; }
  std::map<Rational, int> poles() const;
  std::map<Rational, int> zeros() const;
  int numerator_degree() const;
  int denominator_degree() const;
  bool is_proper() const { return numerator_degree() < denominator_degree(); }

  // exact value; PoleError at a pole
  Rational operator()(const Rational &t) const;

private:
  Rational scalar_{1};
  std::map<Rational, int> exps_;
};

// sum of a / (t - c)^i over keys (c, i)
struct PartialFractionExpansion {
  std::map<std::pair<Rational, int>, Rational> terms;
  std::vector<Rational> polynomial_part;

  void add(const Rational &pole, int order, const Rational &a);
  Rational coeff(const Rational &pole, int order) const;
  Rational operator()(const Rational &t) const;
  int max_order() const;
};

PartialFractionExpansion partial_fractions(const FactoredRationalFunction &R);
PartialFractionExpansion derivative(const PartialFractionExpansion &pf);

struct SymmetryReport {
  Rational center;       // R(t) = sign * R(2 center - t)
  Rational top_pole;     // the pole playing the role of t = 0
  int n = 0;
  int sign = 0;          // +1, -1, or 0 when not symmetric
  bool verified = false;
  std::optional<std::pair<int, int>> counterexample; // (i, k) with a_{i,n-k} != (-1)^i a_{i,k}
  std::map<int, Rational> column_sums;               // a_i
  Rational a0;           // constant term of sum_{t>=-m} R(top_pole + t - 1/2)
  Rational lemma_a0;     // 0 for even n, R(top_pole - m - 1/2)/2 for odd n
};

SymmetryReport analyze_symmetry(const PartialFractionExpansion &pf, int n);
// sum over even i of a_i (2^i - 1) zeta(i) + a0
ConstantLinearForm lemma_form(const SymmetryReport &report);

// t runs over start, start+1, ...; the summand is R(t + offset), times (-1)^t if alternating
struct SummationGrid {
  Rational offset{0};
  long start = 0;
  bool alternating = false;
};

// sum_{j>=0} 1/(j+q)^i for q with denominator 1, 2 or 4 (for i = 1 the value of -psi(q))
ConstantLinearForm hurwitz_form(int i, const Rational &q);

ConstantLinearForm sum_linear_form(const PartialFractionExpansion &pf, const SummationGrid &grid);

// Direct numerical summation of R (or of R' when derivative is set) over the grid.
BallReal direct_sum(const FactoredRationalFunction &R, const SummationGrid &grid, long digits,
                    bool derivative = false);

} // namespace hyperforms

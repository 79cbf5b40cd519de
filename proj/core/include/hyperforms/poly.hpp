#pragma once

#include "hyperforms/exact.hpp"

#include <vector>

namespace hyperforms {

// Dense univariate polynomial over Q, coefficients in ascending order.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational &c);
  static Poly monomial(const Rational &c, unsigned deg);
  static Poly linear(const Rational &root); // x - root

  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational> &coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator*(const Poly &o) const;
  Poly operator*(const Rational &s) const;
  Poly operator-() const;
  bool operator==(const Poly &o) const { return c_ == o.c_; }

  Rational operator()(const Rational &x) const;
  Poly shifted(const Rational &a) const; // p(x + a)
  Poly derivative() const;
  Poly pow(unsigned e) const;

  // All coefficients share one strict sign (zero coefficients allowed, leading nonzero):
  // returns +1/-1, or 0 when the test is inconclusive.
  int coefficient_sign() const;

private:
  void trim();
  std::vector<Rational> c_;
};

} // namespace hyperforms

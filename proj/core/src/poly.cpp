#include "hyperforms/poly.hpp"

#include <algorithm>

namespace hyperforms {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational &c) { return Poly({c}); }

Poly Poly::monomial(const Rational &c, unsigned deg)
{
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rational &root) { return Poly({-root, Rational(1)}); }

void Poly::trim()
{
  while (!c_.empty() && sgn(c_.back()) == 0)
    c_.pop_back();
}

Rational Poly::coeff(int i) const
{
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return Rational(0);
  return c_[i];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Poly Poly::operator+(const Poly &o) const
{
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i)
    v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly &o) const { return *this + (-o); }

Poly Poly::operator-() const
{
  std::vector<Rational> v(c_);
  for (auto &x : v)
    x = -x;
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly &o) const
{
  if (is_zero() || o.is_zero())
    return Poly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0)
      continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      v[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rational &s) const
{
  std::vector<Rational> v(c_);
  for (auto &x : v)
    x *= s;
  return Poly(std::move(v));
}

Rational Poly::operator()(const Rational &x) const
{
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * x + *it;
  return r;
}

Poly Poly::shifted(const Rational &a) const
{
  // Horner-style Taylor shift
  std::vector<Rational> v(c_);
  const int n = static_cast<int>(v.size());
  if (sgn(a) == 0)
    return *this;
  for (int i = 0; i < n - 1; ++i)
    for (int j = n - 2; j >= i; --j)
      v[j] += a * v[j + 1];
  return Poly(std::move(v));
}

Poly Poly::derivative() const
{
  if (c_.size() <= 1)
    return Poly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(v));
}

Poly Poly::pow(unsigned e) const
{
  Poly r = Poly::constant(Rational(1));
  Poly b = *this;
  while (e) {
    if (e & 1u)
      r = r * b;
    e >>= 1u;
    if (e)
      b = b * b;
  }
  return r;
}

int Poly::coefficient_sign() const
{
  if (c_.empty())
    return 0;
  int s = sgn(c_.back());
  for (const auto &x : c_)
    if (sgn(x) == -s)
      return 0;
  return s;
}

} // namespace hyperforms

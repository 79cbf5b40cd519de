#include "hyperforms/ratfunc.hpp"

#include "hyperforms/hyper.hpp"

#include <algorithm>
#include <cmath>

namespace hyperforms {

FactoredRationalFunction &FactoredRationalFunction::factor(const Rational &root, int multiplicity)
{
  if (multiplicity == 0)
    return *this;
  int &e = exps_[root];
  e += multiplicity;
  if (e == 0)
    exps_.erase(root);
  return *this;
}

FactoredRationalFunction &FactoredRationalFunction::scale(const Rational &s)
{
  scalar_ *= s;
  return *this;
}

FactoredRationalFunction FactoredRationalFunction::operator*(const FactoredRationalFunction &o) const
{
  FactoredRationalFunction r = *this;
  r.scalar_ *= o.scalar_;
  for (const auto &[root, e] : o.exps_)
    r.factor(root, e);
  return r;
}

std::map<Rational, int> FactoredRationalFunction::poles() const
{
  std::map<Rational, int> m;
  for (const auto &[r, e] : exps_)
    if (e < 0)
      m[r] = -e;
  return m;
}

std::map<Rational, int> FactoredRationalFunction::zeros() const
{
  std::map<Rational, int> m;
  for (const auto &[r, e] : exps_)
    if (e > 0)
      m[r] = e;
  return m;
}

int FactoredRationalFunction::numerator_degree() const
{
  int d = 0;
  for (const auto &[r, e] : exps_)
    if (e > 0)
      d += e;
  return d;
}

int FactoredRationalFunction::denominator_degree() const
{
  int d = 0;
  for (const auto &[r, e] : exps_)
    if (e < 0)
      d -= e;
  return d;
}

namespace {

Rational qpow(const Rational &b, int e)
{
  Rational r;
  const unsigned long a = static_cast<unsigned long>(std::abs(e));
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), a);
  r.canonicalize();
  return e < 0 ? Rational(1) / r : r;
}

} // namespace

Rational FactoredRationalFunction::operator()(const Rational &t) const
{
  Rational v = scalar_;
  for (const auto &[r, e] : exps_) {
    Rational d = t - r;
    if (sgn(d) == 0) {
      if (e < 0)
        throw PoleError("rational function evaluated at a pole " + to_string(t));
      return Rational(0);
    }
    v *= qpow(d, e);
  }
  return v;
}

void PartialFractionExpansion::add(const Rational &pole, int order, const Rational &a)
{
  if (sgn(a) == 0)
    return;
  auto key = std::make_pair(pole, order);
  Rational &slot = terms[key];
  slot += a;
  if (sgn(slot) == 0)
    terms.erase(key);
}

Rational PartialFractionExpansion::coeff(const Rational &pole, int order) const
{
  auto it = terms.find(std::make_pair(pole, order));
  return it == terms.end() ? Rational(0) : it->second;
}

Rational PartialFractionExpansion::operator()(const Rational &t) const
{
  Rational v(0);
  for (const auto &[key, a] : terms) {
    Rational d = t - key.first;
    if (sgn(d) == 0)
      throw PoleError("expansion evaluated at a pole " + to_string(t));
    v += a * qpow(d, -key.second);
  }
  Rational p(0);
  for (auto it = polynomial_part.rbegin(); it != polynomial_part.rend(); ++it)
    p = p * t + *it;
  return v + p;
}

int PartialFractionExpansion::max_order() const
{
  int m = 0;
  for (const auto &[key, a] : terms)
    m = std::max(m, key.second);
  return m;
}

PartialFractionExpansion partial_fractions(const FactoredRationalFunction &R)
{
  if (!R.is_proper())
    throw DomainError("partial_fractions: improper rational function");
  PartialFractionExpansion pf;
  if (sgn(R.scalar()) == 0)
    return pf;
  for (const auto &[c, M] : R.poles()) {
    // g(h) = R(c + h) h^M; Taylor coefficients from the logarithmic derivative
    Rational g0 = R.scalar();
    std::vector<Rational> delta;
    std::vector<int> mult;
    for (const auto &[r, e] : R.exponents()) {
      if (r == c)
        continue;
      g0 *= qpow(c - r, e);
      delta.push_back(c - r);
      mult.push_back(e);
    }
    std::vector<Rational> L(M, Rational(0));
    for (size_t f = 0; f < delta.size(); ++f) {
      Rational inv = Rational(1) / delta[f];
      Rational p = inv * mult[f];
      for (int k = 0; k < M; ++k) {
        L[k] += p;
        p *= -inv;
      }
    }
    std::vector<Rational> g(M, Rational(0));
    g[0] = g0;
    for (int j = 1; j < M; ++j) {
      Rational s(0);
      for (int l = 1; l <= j; ++l)
        s += L[l - 1] * g[j - l];
      g[j] = s / j;
    }
    for (int j = 0; j < M; ++j)
      pf.add(c, M - j, g[j]);
  }
  return pf;
}

PartialFractionExpansion derivative(const PartialFractionExpansion &pf)
{
  PartialFractionExpansion d;
  for (const auto &[key, a] : pf.terms)
    d.add(key.first, key.second + 1, -a * key.second);
  for (size_t i = 1; i < pf.polynomial_part.size(); ++i)
    d.polynomial_part.push_back(pf.polynomial_part[i] * static_cast<unsigned long>(i));
  return d;
}

SymmetryReport analyze_symmetry(const PartialFractionExpansion &pf, int n)
{
  if (n < 0)
    throw DomainError("analyze_symmetry: n must be nonnegative");
  SymmetryReport rep;
  rep.n = n;
  if (pf.terms.empty())
    throw DomainError("analyze_symmetry: empty expansion");
  Rational cmax = pf.terms.begin()->first.first;
  for (const auto &[key, a] : pf.terms)
    cmax = std::max(cmax, key.first);
  // a[i][k] for the pole cmax - k
  std::map<int, std::vector<Rational>> a;
  for (const auto &[key, v] : pf.terms) {
    Rational k = cmax - key.first;
    if (!is_integer(k) || k > n)
      throw DomainError("analyze_symmetry: pole " + to_string(key.first) + " is not of the form top - k, 0 <= k <= n");
    auto &col = a[key.second];
    col.resize(n + 1, Rational(0));
    col[k.get_num().get_si()] = v;
  }
  rep.top_pole = cmax;
  rep.center = cmax - Rational(n, 2);

  auto first_violation = [&](int eps) -> std::optional<std::pair<int, int>> {
    for (const auto &[i, col] : a)
      for (int k = 0; k <= n; ++k) {
        Rational want = col[k] * ((i % 2) ? -eps : eps);
        if (col[n - k] != want)
          return std::make_pair(i, k);
      }
    return std::nullopt;
  };
  auto plus = first_violation(1);
  if (!plus) {
    rep.sign = 1;
    rep.verified = true;
  } else if (!first_violation(-1)) {
    rep.sign = -1;
    rep.verified = true;
  } else {
    rep.counterexample = plus;
  }

  const int m = n >= 1 ? (n - 1) / 2 : -1; // floor((n-1)/2)
  Rational a0(0);
  for (const auto &[i, col] : a) {
    Rational colsum(0);
    for (int k = 0; k <= n; ++k) {
      colsum += col[k];
      if (sgn(col[k]) == 0)
        continue;
      // sum_{t>=-m} 1/(t+k-1/2)^i minus the full tail sum_{l>=1} 1/(l-1/2)^i
      Rational corr(0);
      for (int l = k - m; l <= 0; ++l)
        corr += qpow(Rational(2 * l - 1, 2), -i);
      for (int l = 1; l <= k - m - 1; ++l)
        corr -= qpow(Rational(2 * l - 1, 2), -i);
      a0 += col[k] * corr;
    }
    if (sgn(colsum) != 0)
      rep.column_sums[i] = colsum;
  }
  rep.a0 = a0;
  if (n % 2 == 0)
    rep.lemma_a0 = 0;
  else
    rep.lemma_a0 = pf(cmax - m - Rational(1, 2)) / 2;
  return rep;
}

ConstantLinearForm lemma_form(const SymmetryReport &report)
{
  ConstantLinearForm f = ConstantLinearForm::constant(report.a0);
  for (const auto &[i, ai] : report.column_sums) {
    if (i % 2)
      continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(i));
    f.add(BasisLabel::zeta(i), ai * Rational(p - 1));
  }
  return f;
}

namespace {

Rational pow2(long e)
{
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

// sum_{j>=0} 1/(j+f)^i for f in {1, 1/2, 1/4, 3/4}
ConstantLinearForm hurwitz_base(int i, const Rational &f)
{
  ConstantLinearForm r;
  const bool quarter = f.get_den() == 4;
  if (i == 1) {
    r.add(BasisLabel::euler_gamma(), 1);
    if (f == Rational(1, 2))
      r.add(BasisLabel::log2(), 2);
    if (quarter) {
      r.add(BasisLabel::log2(), 3);
      r.add(BasisLabel::pi(1), f == Rational(1, 4) ? Rational(1, 2) : Rational(-1, 2));
    }
    return r;
  }
  if (f == 1) {
    r.add(BasisLabel::zeta(i), 1);
    return r;
  }
  if (f == Rational(1, 2)) {
    r.add(BasisLabel::zeta(i), pow2(i) - 1);
    return r;
  }
  // (zeta(i,1/4) +- zeta(i,3/4)) / 2 with the sum 4^i lambda and the difference 4^i beta
  r.add(BasisLabel::zeta(i), pow2(i) * (pow2(i) - 1) / 2);
  Rational half_b = pow2(2 * i) / 2 * (f == Rational(1, 4) ? 1 : -1);
  if (i == 2) {
    r.add(BasisLabel::catalan(), half_b);
  } else if (i % 2 == 0) {
    r.add(BasisLabel::beta(i), half_b);
  } else {
    const unsigned k = static_cast<unsigned>((i - 1) / 2);
    Rational b = Rational(euler_number(2 * k)) / (pow2(2 * k + 2) * Rational(factorial(2 * k)));
    if (k % 2)
      b = -b;
    r.add(BasisLabel::pi(i), half_b * b);
  }
  return r;
}

} // namespace

ConstantLinearForm hurwitz_form(int i, const Rational &q)
{
  if (i < 1)
    throw DomainError("hurwitz_form: order must be positive");
  const Integer den = q.get_den();
  if (den != 1 && den != 2 && den != 4)
    throw DomainError("unsupported pole residue class " + to_string(q));
  if (is_nonpositive_integer(q))
    throw PoleError("summation point coincides with a pole");
  Integer fl = floor_of(q);
  Rational f = q - Rational(fl);
  if (sgn(f) == 0) {
    f = 1;
    fl -= 1;
  }
  const long N = fl.get_si();
  ConstantLinearForm r = hurwitz_base(i, f);
  Rational corr(0);
  for (long j = 0; j < N; ++j)
    corr -= qpow(f + j, -i);
  for (long j = N; j < 0; ++j)
    corr += qpow(f + j, -i);
  r.add(BasisLabel::one(), corr);
  return r;
}

ConstantLinearForm sum_linear_form(const PartialFractionExpansion &pf, const SummationGrid &grid)
{
  const Integer od = grid.offset.get_den();
  if (od != 1 && od != 2 && od != 4)
    throw DomainError("grid offset denominator must be 1, 2 or 4");
  if (!pf.polynomial_part.empty())
    throw DomainError("sum_linear_form: expansion has a polynomial part");
  if (!grid.alternating) {
    Rational s1(0);
    for (const auto &[key, a] : pf.terms)
      if (key.second == 1)
        s1 += a;
    if (sgn(s1) != 0)
      throw DivergenceError("nonvanishing order-1 coefficient sum " + to_string(s1));
  }
  ConstantLinearForm out;
  const Rational start(grid.start);
  for (const auto &[key, a] : pf.terms) {
    const int i = key.second;
    const Rational q = start + grid.offset - key.first;
    if (is_nonpositive_integer(q))
      throw PoleError("summation point coincides with the pole " + to_string(key.first));
    if (!grid.alternating) {
      out += hurwitz_form(i, q) * a;
    } else {
      if (q.get_den() != 1 && q.get_den() != 2)
        throw DomainError("unsupported pole residue class for an alternating sum " + to_string(q));
      Rational s = a * pow2(-i);
      if (grid.start % 2)
        s = -s;
      out += (hurwitz_form(i, q / 2) - hurwitz_form(i, (q + 1) / 2)) * s;
    }
  }
  if (sgn(out.coeff(BasisLabel::euler_gamma())) != 0)
    throw Error("sum_linear_form: Euler gamma did not cancel");
  return out;
}

namespace {

double fujiwara(const Poly &p)
{
  const int d = p.degree();
  if (d <= 0)
    return 0.0;
  const double lc = std::fabs(p.leading().get_d());
  double b = 0.0;
  for (int i = 1; i <= d; ++i)
    b = std::max(b, std::pow(std::fabs(p.coeff(d - i).get_d()) / lc, 1.0 / i));
  return 2.0 * b;
}

} // namespace

BallReal direct_sum(const FactoredRationalFunction &R, const SummationGrid &grid, long digits, bool deriv)
{
  std::map<Rational, int> g = R.exponents();
  Poly A = Poly::constant(Rational(1));
  int degree = R.numerator_degree() - R.denominator_degree();
  if (deriv) {
    // R' = R * A / prod (t - r)
    A = Poly();
    for (const auto &[r, e] : R.exponents()) {
      Poly term = Poly::constant(Rational(e));
      for (const auto &[r2, e2] : R.exponents())
        if (r2 != r)
          term = term * Poly::linear(r2);
      A = A + term;
    }
    for (auto &[r, e] : g)
      e -= 1;
    std::erase_if(g, [](const auto &kv) { return kv.second == 0; });
    degree = -1;
    for (const auto &[r, e] : g)
      degree += e;
    degree += A.degree() + 1;
  }
  if (sgn(R.scalar()) == 0 || A.is_zero())
    return BallReal(0, digits);
  if (!grid.alternating && degree > -2)
    throw DivergenceError("direct_sum: summand decays too slowly");
  if (grid.alternating && degree > -1)
    throw DivergenceError("direct_sum: summand does not decay");

  auto term = [&](const Rational &x) {
    Rational v = R.scalar() * A(x);
    for (const auto &[r, e] : g) {
      Rational d = x - r;
      if (sgn(d) == 0) {
        if (e < 0)
          throw PoleError("summation point coincides with a pole " + to_string(x));
        return Rational(0);
      }
      v *= qpow(d, e);
    }
    return v;
  };

  // beyond every root and pole
  Rational xmax = grid.offset + grid.start;
  for (const auto &[r, e] : g)
    xmax = std::max(xmax, Rational(r + 1));
  double ab = fujiwara(A);
  long T = std::max<long>(grid.start, ceil_of(xmax - grid.offset).get_si());
  T = std::max<long>(T, static_cast<long>(std::ceil(ab - grid.offset.get_d())) + 1);

  Rational head(0);
  for (long t = grid.start; t < T; ++t) {
    Rational v = term(grid.offset + t);
    head += (grid.alternating && (t % 2 != 0)) ? -v : v;
  }

  const Rational X = grid.offset + T;
  std::map<Rational, int> num, den; // linear factors k + a
  for (const auto &[r, e] : g) {
    if (e > 0) {
      num[X + 1 - r] += e;
      den[X - r] += e;
    } else {
      num[X - r] += -e;
      den[X + 1 - r] += -e;
    }
  }
  for (auto &[a, c] : num) {
    auto it = den.find(a);
    if (it != den.end()) {
      int k = std::min(c, it->second);
      c -= k;
      it->second -= k;
    }
  }
  Poly P = A.shifted(X + 1), Q = A.shifted(X);
  for (const auto &[a, c] : num)
    for (int j = 0; j < c; ++j)
      P = P * Poly::linear(-a);
  for (const auto &[a, c] : den)
    for (int j = 0; j < c; ++j)
      Q = Q * Poly::linear(-a);
  Rational u0 = term(X);
  if (grid.alternating && (T % 2 != 0))
    u0 = -u0;
  RatioSeries series{u0, P, Q, grid.alternating ? -1 : 1};
  SeriesSum s = sum_ratio_series(series, digits + 5);
  return BallReal(head + s.value, s.error, digits);
}

} // namespace hyperforms

#include "hyperforms/hyper.hpp"

#include <algorithm>
#include <cmath>

namespace hyperforms {

namespace {

using Series = std::vector<Rational>; // truncated power series in x

Series series_mul(const Series &a, const Series &b, size_t len)
{
  Series r(len, Rational(0));
  for (size_t i = 0; i < a.size() && i < len; ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (size_t j = 0; j < b.size() && i + j < len; ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_inverse(const Series &a, size_t len)
{
  if (a.empty() || sgn(a[0]) == 0)
    throw Error("series_inverse: zero constant term");
  Series r(len, Rational(0));
  r[0] = Rational(1) / a[0];
  for (size_t n = 1; n < len; ++n) {
    Rational s(0);
    for (size_t i = 1; i <= n && i < a.size(); ++i)
      s += a[i] * r[n - i];
    r[n] = -s / a[0];
  }
  return r;
}

// (1 + x)^e for integer e
Series binomial_series(long e, size_t len)
{
  Series r(len, Rational(0));
  Rational c(1);
  for (size_t i = 0; i < len; ++i) {
    r[i] = c;
    c = c * Rational(e - static_cast<long>(i)) / Rational(static_cast<long>(i) + 1);
  }
  return r;
}

// x^d p(1/x)
Series reversed(const Poly &p, size_t len)
{
  Series r(len, Rational(0));
  const int d = p.degree();
  for (int i = 0; i <= d && static_cast<size_t>(i) < len; ++i)
    r[i] = p.coeff(d - i);
  return r;
}

Rational pow10_inv(long d)
{
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::max(0L, d)));
  return Rational(Integer(1), p);
}

Rational pow_q(const Rational &b, unsigned long e)
{
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

// Fujiwara bound on the moduli of the roots
double root_bound(const Poly &p)
{
  const int d = p.degree();
  if (d <= 0)
    return 0.0;
  const double lc = std::fabs(p.leading().get_d());
  double b = 0.0;
  for (int i = 1; i <= d; ++i) {
    double a = std::fabs(p.coeff(d - i).get_d()) / lc;
    if (i == d)
      a /= 2.0;
    b = std::max(b, std::pow(a, 1.0 / i));
  }
  return 2.0 * b;
}

// Coefficients c_0..c_N of phi(k) = k^eps sum c_j k^-j with
// phi(k) - rho(k) phi(k+1) = 1 + O(k^(eps-N-1)).
std::vector<Rational> solve_phi(const Poly &P, const Poly &Q, int z, int eps, int N)
{
  const size_t len = static_cast<size_t>(N + 3);
  Series rho = series_mul(reversed(P, len), series_inverse(reversed(Q, len), len), len);
  for (auto &r : rho)
    r *= z;
  // G_j(x) = x^j (1 - rho(x) (1 + x)^(eps - j))
  std::vector<Series> G(N + 1);
  for (int j = 0; j <= N; ++j) {
    Series t = series_mul(rho, binomial_series(eps - j, len), len);
    Series g(len, Rational(0));
    for (size_t i = 0; i + j < len; ++i) {
      Rational v = (i == 0 ? Rational(1) : Rational(0)) - t[i];
      g[i + j] = v;
    }
    G[j] = g;
  }
  std::vector<Rational> c(N + 1, Rational(0));
  for (int r = 0; r <= N; ++r) {
    const size_t row = static_cast<size_t>(r + eps);
    Rational rhs = (row == static_cast<size_t>(eps)) ? Rational(1) : Rational(0);
    for (int j = 0; j < r; ++j)
      rhs -= c[j] * G[j][row];
    const Rational &lead = G[r][row];
    if (sgn(lead) == 0)
      throw Error("tail expansion: singular leading coefficient");
    c[r] = rhs / lead;
  }
  return c;
}

} // namespace

Rational decay_exponent(const Poly &P, const Poly &Q)
{
  const int d = Q.degree();
  if (P.degree() != d || d < 0)
    throw DomainError("ratio series: numerator and denominator degrees differ");
  return (Q.coeff(d - 1) - P.coeff(d - 1)) / Q.leading();
}

SeriesSum sum_ratio_series(const RatioSeries &series, long digits)
{
  if (series.z != 1 && series.z != -1)
    throw DomainError("ratio series: argument must be +1 or -1");
  Poly P = series.P, Q = series.Q;
  int z = series.z;
  if (P.is_zero() || Q.is_zero())
    throw DomainError("ratio series: zero polynomial");
  if (P.degree() != Q.degree())
    throw DomainError("ratio series: numerator and denominator degrees differ");
  if (P.leading() == -Q.leading()) {
    P = -P;
    z = -z;
  } else if (P.leading() != Q.leading()) {
    throw DomainError("ratio series: |ratio| does not tend to 1");
  }
  SeriesSum out;
  if (sgn(series.first) == 0) {
    out.terminated = true;
    return out;
  }

  const Rational m = decay_exponent(P, Q);
  const int eps = z == 1 ? 1 : 0;
  if ((z == 1 && m <= 1) || (z == -1 && m <= 0))
    throw DivergenceError("series does not converge");

  const int N = static_cast<int>(digits / 2 + 12);
  const int Ne = N - eps;
  std::vector<Rational> c = solve_phi(P, Q, z, eps, N);
  std::vector<Rational> ac(N + 1, Rational(0));
  for (int j = 0; j <= N; ++j)
    ac[N - j] = c[j];
  const Poly A(ac);
  const Poly kpow = Poly::monomial(Rational(1), static_cast<unsigned>(Ne));
  const Poly k1pow = Poly({Rational(1), Rational(1)}).pow(static_cast<unsigned>(Ne));
  const Poly k2pow = Poly({Rational(2), Rational(1)}).pow(static_cast<unsigned>(Ne));
  const Poly E = kpow * k1pow * Q;
  const Poly D = A * k1pow * Q - kpow * k1pow * Q - P * A.shifted(Rational(1)) * kpow * Rational(z);

  Rational mu(0);
  if (!D.is_zero()) {
    Rational ew = m - Rational(D.degree() - E.degree());
    if (ew <= 1)
      throw Error("tail certificate: insufficient decay");
    mu = Rational(1) + (ew - 1) / 2;
  }
  const Poly Q1 = Q.shifted(Rational(1));
  const Poly D1 = D.shifted(Rational(1));

  double rb = std::max(root_bound(P), root_bound(Q));
  long K = std::max<long>(16, N) + static_cast<long>(std::ceil(4.0 * rb));
  const long K_limit = 1L << 22;

  Rational sum(0), u = series.first;
  long k = 0;
  for (;;) {
    for (; k < K; ++k) {
      sum += u;
      Rational pk = P(Rational(k));
      if (sgn(pk) == 0) {
        out.value = sum;
        out.terms = k + 1;
        out.terminated = true;
        return out;
      }
      Rational qk = Q(Rational(k));
      if (sgn(qk) == 0)
        throw PoleError("series: lower parameter pole reached");
      u = u * pk / qk;
      if (z < 0)
        u = -u;
    }
    // u = u_K
    const Rational KK(K);
    const Poly PK = P.shifted(KK), QK = Q.shifted(KK);
    const int sP = PK.coefficient_sign(), sQ = QK.coefficient_sign();
    bool ok = sP != 0 && sQ != 0;
    int sD = 0;
    if (ok && !D.is_zero()) {
      sD = D.shifted(KK).coefficient_sign();
      ok = sD != 0;
    }
    if (ok && !D.is_zero()) {
      const Poly kp = Poly({Rational(0), Rational(1)});
      const Poly kmu = Poly({mu, Rational(1)});
      Poly F = kp * D * k2pow * Q1 * Rational(sD * sQ) - kmu * P * D1 * kpow * Rational(sP * sD);
      ok = F.shifted(KK).coefficient_sign() > 0 || F.is_zero();
    }
    if (ok) {
      const Rational kne = pow_q(KK, static_cast<unsigned long>(Ne));
      Rational value = sum + u * A(KK) / kne;
      Rational bound(0);
      if (!D.is_zero()) {
        Rational w = abs_of(u * D(KK) / E(KK));
        bound = w * (KK + mu - 1) / (mu - 1);
      }
      Rational scale = std::max(Rational(1), abs_of(value));
      if (bound <= pow10_inv(digits) * scale) {
        out.value = value;
        out.error = bound;
        out.terms = K;
        return out;
      }
    }
    K *= 2;
    if (K > K_limit)
      throw Error("series tail bound did not converge");
  }
}

Rational pfq_margin(const PfqSpec &spec)
{
  Rational m(0);
  for (const auto &b : spec.lower)
    m += b;
  for (const auto &a : spec.upper)
    m -= a;
  return m;
}

bool pfq_terminates(const PfqSpec &spec)
{
  for (const auto &a : spec.upper)
    if (is_nonpositive_integer(a))
      return true;
  return false;
}

void check_pfq(const PfqSpec &spec)
{
  if (spec.argument != 1 && spec.argument != -1)
    throw DomainError("pFq argument must be +1 or -1");
  if (spec.upper.size() != spec.lower.size() + 1)
    throw DomainError("pFq: only p = q + 1 is supported");
  for (const auto *list : {&spec.upper, &spec.lower})
    for (const auto &a : *list)
      if (a.get_den() != 1 && a.get_den() != 2 && a.get_den() != 4)
        throw DomainError("pFq: parameter denominator must be 1, 2 or 4: " + to_string(a));
  // first index at which the series stops
  Integer stop = -1;
  for (const auto &a : spec.upper)
    if (is_nonpositive_integer(a) && (stop < 0 || -a.get_num() < stop))
      stop = -a.get_num();
  for (const auto &b : spec.lower)
    if (is_nonpositive_integer(b) && (stop < 0 || -b.get_num() < stop))
      throw PoleError("pFq: lower parameter " + to_string(b) + " is a reachable pole");
  if (stop >= 0)
    return;
  const Rational margin = pfq_margin(spec);
  if (spec.argument == 1 && margin <= Rational(1, 2))
    throw DivergenceError("pFq(1): convergence margin " + to_string(margin) + " <= 1/2 refused");
  if (spec.argument == -1 && margin <= Rational(-1, 2))
    throw DivergenceError("pFq(-1): convergence margin " + to_string(margin) + " <= -1/2 refused");
}

RatioSeries pfq_series(const PfqSpec &spec)
{
  std::vector<Rational> up = spec.upper, low = spec.lower;
  low.push_back(Rational(1));
  // cancel equal parameters that cannot vanish
  for (auto it = up.begin(); it != up.end();) {
    auto jt = std::find(low.begin(), low.end(), *it);
    if (jt != low.end() && !is_nonpositive_integer(*it)) {
      low.erase(jt);
      it = up.erase(it);
    } else {
      ++it;
    }
  }
  Poly P = Poly::constant(Rational(1)), Q = Poly::constant(Rational(1));
  for (const auto &a : up)
    P = P * Poly::linear(-a);
  for (const auto &b : low)
    Q = Q * Poly::linear(-b);
  return RatioSeries{Rational(1), P, Q, spec.argument};
}

BallReal eval_pfq(const PfqSpec &spec, long digits)
{
  check_pfq(spec);
  SeriesSum s = sum_ratio_series(pfq_series(spec), digits + 5);
  return BallReal(s.value, s.error, digits);
}

BallReal eval_prefactored(const PiMonomial &prefactor, const PfqSpec &spec, long digits)
{
  // extra digits so that a large prefactor does not eat the requested accuracy
  BallReal pre_low = evaluate(prefactor, 20);
  double mag = pre_low.magnitude();
  long extra = mag > 1.0 ? static_cast<long>(std::ceil(std::log10(mag))) : 0;
  BallReal f = eval_pfq(spec, digits + extra + 5);
  BallReal pre = evaluate(prefactor, digits + extra + 10);
  return (pre * f).with_digits(digits);
}

} // namespace hyperforms

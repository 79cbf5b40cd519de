#include "hyperforms/zetaforms.hpp"

#include <algorithm>

namespace hyperforms {

std::string variant_name(ZetaVariant v) { return v == ZetaVariant::r ? "R" : "WT"; }

ZetaVariant parse_variant(const std::string &name)
{
  if (name == "R" || name == "r")
    return ZetaVariant::r;
  if (name == "WT" || name == "wt")
    return ZetaVariant::wt;
  throw DomainError("unknown zeta variant " + name + " (expected R or WT)");
}

void validate(const ZetaFormSpec &spec)
{
  if (spec.s < 8 || spec.s % 2)
    throw DomainError("s must be an even integer >= 8, got " + std::to_string(spec.s));
  if (spec.n < 0)
    throw DomainError("n must be nonnegative");
  if (spec.s >= 40 && spec.n > 3 && !spec.allow_large)
    throw DomainError("forms with s >= 40 are limited to n <= 3 unless explicitly allowed");
}

namespace {

Integer pow_z(const Integer &b, unsigned long e)
{
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Integer pow2(unsigned long e) { return pow_z(Integer(2), e); }

} // namespace

FactoredRationalFunction build_R(const ZetaFormSpec &spec)
{
  validate(spec);
  const int s = spec.s, n = spec.n;
  const bool odd_case = spec.variant == ZetaVariant::r;
  Rational scalar(pow_z(factorial(static_cast<unsigned long>(n)), static_cast<unsigned long>(s - 6)) *
                  pow2(static_cast<unsigned long>(12 * n + (odd_case ? 1 : 0))));
  FactoredRationalFunction R(scalar);
  if (odd_case)
    R.factor(make_rational(-n, 2), 1);
  for (int j = 1; j <= 3 * n; ++j)
    R.factor(Rational(2 * (n - j) + 1, 2), 2);
  for (int j = 0; j <= n; ++j)
    R.factor(Rational(-j), -s);
  return R;
}

SummationGrid zeta_grid()
{
  SummationGrid g;
  g.offset = Rational(-1, 2);
  g.start = 1;
  g.alternating = false;
  return g;
}

namespace {

void check_parity(const ZetaFormSpec &spec, const ConstantLinearForm &f)
{
  // which zeta parity may appear and whether a constant may appear
  const bool odd_zeta = (spec.variant == ZetaVariant::r) != spec.derivative;
  const bool constant_allowed = odd_zeta;
  for (const auto &label : f.support()) {
    bool ok = false;
    if (label.kind == BasisLabel::Kind::one)
      ok = constant_allowed;
    else if (label.kind == BasisLabel::Kind::zeta)
      ok = label.index >= 2 && (label.index % 2 == 1) == odd_zeta;
    if (!ok)
      throw Error("parity violation in " + variant_name(spec.variant) + (spec.derivative ? "'" : "") +
                  " form at s=" + std::to_string(spec.s) + ", n=" + std::to_string(spec.n) + ": term " +
                  label.name());
  }
}

} // namespace

ConstantLinearForm zeta_form(const ZetaFormSpec &spec)
{
  PartialFractionExpansion pf = partial_fractions(build_R(spec));
  ConstantLinearForm f;
  if (spec.derivative)
    f = -sum_linear_form(derivative(pf), zeta_grid());
  else
    f = sum_linear_form(pf, zeta_grid());
  f = f.in_zeta_basis();
  check_parity(spec, f);
  return f;
}

BallReal zeta_direct(const ZetaFormSpec &spec, long digits)
{
  BallReal v = direct_sum(build_R(spec), zeta_grid(), digits, spec.derivative);
  return spec.derivative ? -v : v;
}

ZetaCoefficients zeta_coefficients(int s, int n, ZetaVariant variant)
{
  ZetaFormSpec spec{s, n, variant, false, true};
  ZetaCoefficients c;
  c.s = s;
  c.n = n;
  c.variant = variant;
  PartialFractionExpansion pf = partial_fractions(build_R(spec));
  for (const auto &[key, v] : pf.terms)
    c.a[key.second] += v;
  for (auto it = c.a.begin(); it != c.a.end();)
    it = sgn(it->second) == 0 ? c.a.erase(it) : std::next(it);
  spec.derivative = variant == ZetaVariant::wt;
  c.a0 = zeta_form(spec).coeff(BasisLabel::one());
  return c;
}

ZetaIntegralityReport integrality_check(int s, int n)
{
  validate({s, n, ZetaVariant::r, false, true});
  ZetaIntegralityReport rep;
  rep.s = s;
  rep.n = n;
  rep.d_n = lcm_upto(n);
  const Rational d(rep.d_n);
  auto dpow = [&](int k) { return Rational(pow_z(rep.d_n, static_cast<unsigned long>(k))); };
  auto entry = [&](const std::string &name, int i, int power, const Rational &value) {
    Rational scaled = value * dpow(power);
    rep.entries.push_back({name, i, power, value, scaled, is_integer(scaled)});
  };
  auto minimal = [&](const Rational &v) {
    for (int k = 0; k <= 4 * s; ++k)
      if (is_integer(v * dpow(k)))
        return k;
    return -1;
  };

  const ZetaCoefficients a = zeta_coefficients(s, n, ZetaVariant::r);
  const ZetaCoefficients ah = zeta_coefficients(s, n, ZetaVariant::wt);
  auto get = [](const ZetaCoefficients &c, int i) {
    auto it = c.a.find(i);
    return it == c.a.end() ? Rational(0) : it->second;
  };
  for (int i = 1; i <= s; ++i)
    entry("a_" + std::to_string(i), i, s - i, get(a, i));
  for (int i = 1; i <= s; ++i)
    entry("ahat_" + std::to_string(i), i, s - i, get(ah, i));
  entry("a_0", 0, s, a.a0);
  entry("ahat_0", 0, s + 1, ah.a0);
  rep.minimal_power_a0 = minimal(a.a0);
  rep.minimal_power_ahat0 = minimal(ah.a0);
  rep.ahat0_at_power_s = is_integer(ah.a0 * dpow(s));
  rep.pass = std::all_of(rep.entries.begin(), rep.entries.end(), [](const auto &e) { return e.integral; });
  return rep;
}

Poly asymptotic_polynomial(int s)
{
  if (s < 1)
    throw DomainError("asymptotic polynomial needs s >= 1");
  const unsigned us = static_cast<unsigned>(s);
  const Poly x = Poly::monomial(Rational(1), 1);
  return x * x * Poly::linear(Rational(-2)).pow(us) - Poly::linear(Rational(-3)).pow(2) * Poly::linear(Rational(-1)).pow(us);
}

BallReal log_g(int s, const BallReal &x, long digits)
{
  const long w = digits + 10;
  auto c = [w](long v) { return BallReal(v, w); };
  BallReal r = c(12) * const_log2(w) + c(6) * log(x + c(3), w) + c(s) * log(x + c(1), w) -
               c(2L * s) * log(x + c(2), w);
  return r.with_digits(digits);
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval mul(const Interval &a, const Interval &b)
{
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval eval(const Poly &p, const Interval &x)
{
  Interval r{p.leading(), p.leading()};
  for (int i = p.degree() - 1; i >= 0; --i) {
    r = mul(r, x);
    r.lo += p.coeff(i);
    r.hi += p.coeff(i);
  }
  return r;
}

Rational dyadic(const Rational &q, long bits, bool up)
{
  Integer scale = pow2(static_cast<unsigned long>(bits));
  Rational t = q * Rational(scale);
  Rational r(up ? ceil_of(t) : floor_of(t), scale);
  r.canonicalize();
  return r;
}

// Root of p in [lo, hi] given a sign change, to width below 2^-bits.
Interval certified_root(const Poly &p, Rational lo, Rational hi, long bits)
{
  const Poly dp = p.derivative();
  const int sign_lo = sgn(p(lo));
  if (sign_lo == 0)
    return {lo, lo};
  if (sgn(p(hi)) != -sign_lo)
    throw DomainError("no sign change of the asymptotic polynomial on [" + to_string(lo) + ", " + to_string(hi) + "]");
  const Rational target(Integer(1), pow2(static_cast<unsigned long>(bits)));
  auto bisect = [&] {
    Rational mid = (lo + hi) / 2;
    int sm = sgn(p(mid));
    if (sm == 0)
      lo = hi = mid;
    else if (sm == sign_lo)
      lo = mid;
    else
      hi = mid;
  };
  for (int iter = 0; hi - lo > target && iter < 20 * bits; ++iter) {
    Interval d = eval(dp, {lo, hi});
    if (sgn(d.lo) <= 0 && sgn(d.hi) >= 0) {
      bisect();
      continue;
    }
    // interval Newton step from a dyadic point inside
    const Rational m = dyadic((lo + hi) / 2, bits + 8, false);
    const Rational pm = p(m);
    Rational n1 = m - pm / d.lo, n2 = m - pm / d.hi;
    if (n1 > n2)
      std::swap(n1, n2);
    Rational nlo = dyadic(std::max(lo, n1), bits + 8, false), nhi = dyadic(std::min(hi, n2), bits + 8, true);
    nlo = std::max(nlo, lo);
    nhi = std::min(nhi, hi);
    if (nlo > nhi)
      throw Error("interval Newton lost the root");
    if (nhi - nlo > (hi - lo) / 2) {
      // slow progress: fall back to one bisection
      lo = nlo;
      hi = nhi;
      bisect();
    } else {
      lo = nlo;
      hi = nhi;
    }
  }
  return {lo, hi};
}

BallReal eval_ball(const Poly &p, const BallReal &x, long digits)
{
  BallReal r(p.leading(), digits);
  for (int i = p.degree() - 1; i >= 0; --i)
    r = r * x + BallReal(p.coeff(i), digits);
  return r;
}

} // namespace

AsymptoticsResult asymptotics(int s, long digits)
{
  if (s < 8 || s % 2)
    throw DomainError("s must be an even integer >= 8, got " + std::to_string(s));
  AsymptoticsResult res;
  res.s = s;
  res.digits = digits;
  const Poly P = asymptotic_polynomial(s);
  const long bits = static_cast<long>((digits + 6) * 3.3219280948873623) + 8;
  // P(-1) = 1 > 0, P(0) = -9 < 0, P(1) = 3^s - 16 * 2^s > 0 for s >= 8
  Interval pos = certified_root(P, Rational(0), Rational(1), bits);
  Interval neg = certified_root(P, Rational(-1), Rational(0), bits);
  const long w = digits + 10;
  auto ball = [w](const Interval &x) { return BallReal((x.lo + x.hi) / 2, (x.hi - x.lo) / 2, w); };
  BallReal x0 = ball(pos), x0p = ball(neg);
  res.x0 = x0.with_digits(digits);
  res.x0p = x0p.with_digits(digits);
  res.p_x0 = eval_ball(P, x0, w).with_digits(digits);
  res.p_x0p = eval_ball(P, x0p, w).with_digits(digits);
  res.ln_g_x0 = log_g(s, x0, digits);
  res.ln_g_x0p = log_g(s, x0p, digits);
  res.separated = res.ln_g_x0p.strictly_less(res.ln_g_x0);
  return res;
}

TheoremCoefficient theorem_coefficient(int m, int collection)
{
  if (collection != 1 && collection != 2)
    throw DomainError("collection must be 1 or 2");
  if (m < 1 || m > 21)
    throw DomainError("m must lie in 1..21");
  const unsigned um = static_cast<unsigned>(m);
  TheoremCoefficient c;
  c.m = m;
  c.collection = collection;
  const Rational two2m(pow2(2 * um));
  const Rational denom = Rational(pow2(2 * um + 1) - 1) * Rational(factorial(2 * um));
  if (collection == 1) {
    c.kappa = two2m * Rational(pow2(2 * um + 2) - 1) * abs_of(bernoulli(2 * um + 2)) / (denom * (m + 1));
    c.in_stated_range = m <= 19;
  } else {
    c.kappa = two2m * Rational(pow2(2 * um) - 1) * abs_of(bernoulli(2 * um)) / (denom * m);
    c.in_stated_range = true;
  }
  return c;
}

std::vector<TheoremCoefficient> theorem_table(int collection)
{
  std::vector<TheoremCoefficient> t;
  for (int m = 1; m <= 21; ++m)
    t.push_back(theorem_coefficient(m, collection));
  return t;
}

Rational kappa_from_forms(int s, int n, int m, int collection)
{
  if (collection != 1 && collection != 2)
    throw DomainError("collection must be 1 or 2");
  if (m < 1 || 2 * m + 1 > s)
    throw DomainError("kappa_from_forms needs 1 <= m and 2m+1 <= s");
  const ZetaVariant v = collection == 1 ? ZetaVariant::r : ZetaVariant::wt;
  ConstantLinearForm plain = zeta_form({s, n, v, false, true});
  ConstantLinearForm deriv = zeta_form({s, n, v, true, true});
  Rational num, den;
  if (collection == 1) {
    // r - (lambda/pi) r' keeps zeta(2m+1) against pi^(2m+1)
    num = deriv.in_pi_basis().coeff(BasisLabel::pi(2 * m + 2));
    den = plain.coeff(BasisLabel::zeta(2 * m + 1));
  } else {
    // r-hat' - (4 lambda pi) r-hat keeps zeta(2m+1) against pi^(2m+1)
    num = 4 * plain.in_pi_basis().coeff(BasisLabel::pi(2 * m));
    den = deriv.coeff(BasisLabel::zeta(2 * m + 1));
  }
  if (sgn(den) == 0)
    throw DomainError("vanishing zeta coefficient; choose another n");
  return num / den;
}

nlohmann::json to_json(const ZetaFormSpec &spec, const ConstantLinearForm &form)
{
  return {{"s", spec.s},
          {"n", spec.n},
          {"variant", variant_name(spec.variant)},
          {"derivative", spec.derivative},
          {"form", to_json(form)}};
}

nlohmann::json to_json(const ZetaIntegralityReport &rep)
{
  nlohmann::json entries = nlohmann::json::array();
  for (const auto &e : rep.entries)
    entries.push_back({{"name", e.name},
                       {"i", e.i},
                       {"power", e.power},
                       {"value", to_string(e.value)},
                       {"scaled", to_string(e.scaled)},
                       {"integral", e.integral}});
  return {{"s", rep.s},
          {"n", rep.n},
          {"d_n", to_string(rep.d_n)},
          {"entries", entries},
          {"minimal_power_a0", rep.minimal_power_a0},
          {"minimal_power_ahat0", rep.minimal_power_ahat0},
          {"ahat0_at_power_s", rep.ahat0_at_power_s},
          {"pass", rep.pass}};
}

nlohmann::json to_json(const AsymptoticsResult &res)
{
  return {{"s", res.s},
          {"digits", res.digits},
          {"x0", to_json(res.x0)},
          {"x0p", to_json(res.x0p)},
          {"P_x0", to_json(res.p_x0)},
          {"P_x0p", to_json(res.p_x0p)},
          {"ln_g_x0", to_json(res.ln_g_x0)},
          {"ln_g_x0p", to_json(res.ln_g_x0p)},
          {"separated", res.separated}};
}

nlohmann::json to_json(const TheoremCoefficient &c)
{
  return {{"m", c.m}, {"collection", c.collection}, {"kappa", to_string(c.kappa)}, {"in_stated_range", c.in_stated_range}};
}

} // namespace hyperforms

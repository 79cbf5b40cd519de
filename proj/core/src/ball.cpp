#include "hyperforms/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <utility>

namespace hyperforms {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

class Scratch {
public:
  explicit Scratch(mpfr_prec_t p = kRadPrec) { mpfr_init2(v, p); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch &) = delete;
  Scratch &operator=(const Scratch &) = delete;
  mpfr_t v;
};

// upper bound for |x| rounded to radius precision
void abs_up(mpfr_ptr out, mpfr_srcptr x)
{
  mpfr_abs(out, x, MPFR_RNDU);
}

// lower bound for |x|
void abs_down(mpfr_ptr out, mpfr_srcptr x)
{
  mpfr_abs(out, x, MPFR_RNDD);
}

void set_q(mpfr_ptr out, const Rational &q, mpfr_rnd_t rnd)
{
  mpfr_set_q(out, q.get_mpq_t(), rnd);
}

} // namespace

long digits_to_bits(long digits)
{
  if (digits < 1)
    throw DomainError("digits must be positive");
  return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 32;
}

BallReal::BallReal(Raw, mpfr_prec_t prec, long digits) : digits_(digits)
{
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

BallReal::BallReal() : BallReal(Raw{}, digits_to_bits(10), 10) {}

BallReal::BallReal(long value, long digits) : BallReal(Raw{}, digits_to_bits(digits), digits)
{
  int t = mpfr_set_si(mid_, value, MPFR_RNDN);
  add_rounding_error(t);
}

BallReal::BallReal(const Rational &value, long digits)
  : BallReal(Raw{}, digits_to_bits(digits), digits)
{
  int t = mpfr_set_q(mid_, value.get_mpq_t(), MPFR_RNDN);
  add_rounding_error(t);
}

BallReal::BallReal(const Rational &mid, const Rational &rad, long digits)
  : BallReal(mid, digits)
{
  if (sgn(rad) < 0)
    throw DomainError("negative radius");
  Scratch r;
  set_q(r.v, rad, MPFR_RNDU);
  mpfr_add(rad_, rad_, r.v, MPFR_RNDU);
}

BallReal::BallReal(const BallReal &o) : BallReal(Raw{}, o.precision(), o.digits_)
{
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

BallReal::BallReal(BallReal &&o) noexcept : digits_(o.digits_)
{
  std::memcpy(mid_, o.mid_, sizeof(mpfr_t));
  std::memcpy(rad_, o.rad_, sizeof(mpfr_t));
  // leave o in a valid minimal state
  mpfr_init2(o.mid_, MPFR_PREC_MIN);
  mpfr_init2(o.rad_, MPFR_PREC_MIN);
  mpfr_set_zero(o.mid_, 1);
  mpfr_set_zero(o.rad_, 1);
}

BallReal &BallReal::operator=(const BallReal &o)
{
  if (this != &o) {
    mpfr_set_prec(mid_, o.precision());
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
    digits_ = o.digits_;
  }
  return *this;
}

BallReal &BallReal::operator=(BallReal &&o) noexcept
{
  if (this != &o) {
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
    std::swap(digits_, o.digits_);
  }
  return *this;
}

BallReal::~BallReal()
{
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void BallReal::add_rounding_error(int ternary)
{
  if (ternary == 0 || mpfr_zero_p(mid_))
    return;
  // |error| < ulp(mid) = 2^(EXP(mid) - prec)
  Scratch u;
  mpfr_set_ui_2exp(u.v, 1, mpfr_get_exp(mid_) - precision(), MPFR_RNDU);
  mpfr_add(rad_, rad_, u.v, MPFR_RNDU);
}

BallReal BallReal::operator+(const BallReal &o) const
{
  BallReal r(Raw{}, std::max(precision(), o.precision()), std::max(digits_, o.digits_));
  int t = mpfr_add(r.mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

BallReal BallReal::operator-(const BallReal &o) const
{
  BallReal r(Raw{}, std::max(precision(), o.precision()), std::max(digits_, o.digits_));
  int t = mpfr_sub(r.mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

BallReal BallReal::operator-() const
{
  BallReal r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

BallReal BallReal::operator*(const BallReal &o) const
{
  BallReal r(Raw{}, std::max(precision(), o.precision()), std::max(digits_, o.digits_));
  int t = mpfr_mul(r.mid_, mid_, o.mid_, MPFR_RNDN);
  // |m1| r2 + |m2| r1 + r1 r2
  Scratch a, b;
  abs_up(a.v, mid_);
  mpfr_mul(a.v, a.v, o.rad_, MPFR_RNDU);
  abs_up(b.v, o.mid_);
  mpfr_mul(b.v, b.v, rad_, MPFR_RNDU);
  mpfr_add(r.rad_, a.v, b.v, MPFR_RNDU);
  mpfr_mul(a.v, rad_, o.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, a.v, MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

BallReal BallReal::operator/(const BallReal &o) const
{
  Scratch lo;
  abs_down(lo.v, o.mid_);
  mpfr_sub(lo.v, lo.v, o.rad_, MPFR_RNDD);
  if (mpfr_sgn(lo.v) <= 0)
    throw DomainError("division by a ball containing zero");
  BallReal r(Raw{}, std::max(precision(), o.precision()), std::max(digits_, o.digits_));
  int t = mpfr_div(r.mid_, mid_, o.mid_, MPFR_RNDN);
  // (|m1| r2 + |m2| r1) / (|m2| (|m2| - r2))
  Scratch a, b, d;
  abs_up(a.v, mid_);
  mpfr_mul(a.v, a.v, o.rad_, MPFR_RNDU);
  abs_up(b.v, o.mid_);
  mpfr_mul(b.v, b.v, rad_, MPFR_RNDU);
  mpfr_add(a.v, a.v, b.v, MPFR_RNDU);
  abs_down(d.v, o.mid_);
  mpfr_mul(d.v, d.v, lo.v, MPFR_RNDD);
  mpfr_div(r.rad_, a.v, d.v, MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

BallReal BallReal::widened(const Rational &extra) const
{
  if (sgn(extra) < 0)
    throw DomainError("negative widening");
  BallReal r(*this);
  Scratch e;
  set_q(e.v, extra, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, e.v, MPFR_RNDU);
  return r;
}

BallReal BallReal::with_digits(long digits) const
{
  BallReal r(Raw{}, digits_to_bits(digits), digits);
  int t = mpfr_set(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

bool BallReal::contains(const Rational &q) const
{
  // |q - mid| <= rad, evaluated with a little extra precision
  Scratch d(precision() + 64);
  set_q(d.v, q, MPFR_RNDN);
  mpfr_sub(d.v, d.v, mid_, MPFR_RNDN);
  mpfr_abs(d.v, d.v, MPFR_RNDD);
  Scratch slack;
  mpfr_set_ui_2exp(slack.v, 1, (mpfr_zero_p(mid_) ? 0 : mpfr_get_exp(mid_)) - precision() - 40,
                   MPFR_RNDU);
  mpfr_add(slack.v, slack.v, rad_, MPFR_RNDU);
  return mpfr_lessequal_p(d.v, slack.v) != 0;
}

bool BallReal::contains_zero() const
{
  Scratch a;
  abs_down(a.v, mid_);
  return mpfr_lessequal_p(a.v, rad_) != 0;
}

bool BallReal::overlaps(const BallReal &o) const
{
  Scratch d(std::max(precision(), o.precision()) + 8);
  mpfr_sub(d.v, mid_, o.mid_, MPFR_RNDN);
  mpfr_abs(d.v, d.v, MPFR_RNDD);
  Scratch s;
  mpfr_add(s.v, rad_, o.rad_, MPFR_RNDU);
  return mpfr_lessequal_p(d.v, s.v) != 0;
}

bool BallReal::strictly_positive() const
{
  if (mpfr_sgn(mid_) <= 0)
    return false;
  Scratch a;
  mpfr_set(a.v, mid_, MPFR_RNDD);
  return mpfr_greater_p(a.v, rad_) != 0;
}

bool BallReal::strictly_negative() const { return (-*this).strictly_positive(); }

bool BallReal::strictly_less(const BallReal &o) const { return (o - *this).strictly_positive(); }

bool BallReal::width_at_most_pow10(long e) const
{
  Scratch w, p;
  mpfr_mul_2ui(w.v, rad_, 1, MPFR_RNDU);
  mpfr_set_si(p.v, 10, MPFR_RNDD);
  mpfr_pow_si(p.v, p.v, e, MPFR_RNDD);
  return mpfr_lessequal_p(w.v, p.v) != 0;
}

double BallReal::magnitude() const
{
  Scratch a;
  abs_up(a.v, mid_);
  mpfr_add(a.v, a.v, rad_, MPFR_RNDU);
  return mpfr_get_d(a.v, MPFR_RNDU);
}

long BallReal::rad_log10() const
{
  if (mpfr_zero_p(rad_))
    return -1000000;
  Scratch l;
  mpfr_log10(l.v, rad_, MPFR_RNDU);
  return static_cast<long>(std::floor(mpfr_get_d(l.v, MPFR_RNDU)));
}

std::string BallReal::separation(const BallReal &a, const BallReal &b)
{
  Scratch d(std::max(a.precision(), b.precision()) + 8);
  mpfr_sub(d.v, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_abs(d.v, d.v, MPFR_RNDN);
  char *buf = nullptr;
  mpfr_asprintf(&buf, "%.3Re", d.v);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

double BallReal::to_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

std::string BallReal::mid_string(int significant) const
{
  if (significant <= 0)
    significant = static_cast<int>(digits_) + 5;
  char *buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", significant - 1, mid_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string BallReal::rad_string() const
{
  char *buf = nullptr;
  mpfr_asprintf(&buf, "%.3RUe", rad_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string BallReal::to_string() const { return mid_string() + " +/- " + rad_string(); }

BallReal abs(const BallReal &x)
{
  return mpfr_sgn(x.mid()) < 0 ? -x : x;
}

namespace {

Rational to_rational(mpfr_srcptr v)
{
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, v);
  Rational r(q);
  mpq_clear(q);
  return r;
}

Rational ulp_of(mpfr_srcptr y)
{
  Rational u(1);
  if (mpfr_zero_p(y))
    return Rational(0);
  long e = mpfr_get_exp(y) - static_cast<long>(mpfr_get_prec(y));
  if (e >= 0)
    mpz_mul_2exp(u.get_num_mpz_t(), u.get_num_mpz_t(), e);
  else
    mpz_mul_2exp(u.get_den_mpz_t(), u.get_den_mpz_t(), -e);
  return u;
}

// value = y (rounded, ternary t) with propagated radius bound `prop`
BallReal assemble(mpfr_srcptr y, int t, mpfr_srcptr prop, long digits)
{
  Rational extra = to_rational(prop);
  if (t != 0)
    extra += ulp_of(y);
  return BallReal(to_rational(y), extra, digits);
}

} // namespace

BallReal exp(const BallReal &x, long digits)
{
  mpfr_t y;
  mpfr_init2(y, digits_to_bits(digits));
  int t = mpfr_exp(y, x.mid(), MPFR_RNDN);
  // exp(m) (exp(r) - 1) <= exp(m rounded up) expm1(r)
  Scratch a, b;
  mpfr_set(a.v, x.mid(), MPFR_RNDU);
  mpfr_exp(a.v, a.v, MPFR_RNDU);
  mpfr_expm1(b.v, x.rad(), MPFR_RNDU);
  mpfr_mul(a.v, a.v, b.v, MPFR_RNDU);
  BallReal r = assemble(y, t, a.v, digits);
  mpfr_clear(y);
  return r;
}

BallReal log(const BallReal &x, long digits)
{
  Scratch lo;
  mpfr_sub(lo.v, x.mid(), x.rad(), MPFR_RNDD);
  if (mpfr_sgn(lo.v) <= 0)
    throw DomainError("ln: ball not strictly positive");
  mpfr_t y;
  mpfr_init2(y, digits_to_bits(digits));
  int t = mpfr_log(y, x.mid(), MPFR_RNDN);
  // ln(m) - ln(m - r) <= r / (m - r)
  Scratch p;
  mpfr_div(p.v, x.rad(), lo.v, MPFR_RNDU);
  BallReal r = assemble(y, t, p.v, digits);
  mpfr_clear(y);
  return r;
}

BallReal sqrt(const BallReal &x, long digits)
{
  Scratch lo;
  mpfr_sub(lo.v, x.mid(), x.rad(), MPFR_RNDD);
  if (mpfr_sgn(lo.v) < 0)
    throw DomainError("sqrt: ball not nonnegative");
  mpfr_t y;
  mpfr_init2(y, digits_to_bits(digits));
  int t = mpfr_sqrt(y, x.mid(), MPFR_RNDN);
  Scratch p;
  if (mpfr_zero_p(x.rad())) {
    mpfr_set_zero(p.v, 1);
  } else if (mpfr_sgn(lo.v) == 0) {
    // value in [0, 2m]: radius sqrt(2m)
    mpfr_mul_2ui(p.v, x.mid(), 1, MPFR_RNDU);
    mpfr_sqrt(p.v, p.v, MPFR_RNDU);
  } else {
    // |sqrt(m +- r) - sqrt(m)| <= r / sqrt(m - r)
    Scratch s;
    mpfr_sqrt(s.v, lo.v, MPFR_RNDD);
    mpfr_div(p.v, x.rad(), s.v, MPFR_RNDU);
  }
  BallReal r = assemble(y, t, p.v, digits);
  mpfr_clear(y);
  return r;
}

BallReal pow_int(const BallReal &x, long k, long digits)
{
  BallReal base = x.with_digits(std::max(digits, x.digits()));
  BallReal r(1L, digits);
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  while (e) {
    if (e & 1ul)
      r = r * base;
    e >>= 1u;
    if (e)
      base = base * base;
  }
  if (k < 0)
    r = BallReal(1L, digits) / r;
  return r.with_digits(digits);
}

BallReal elementary(ElementaryFn fn, const BallReal &x, long k, long digits)
{
  switch (fn) {
  case ElementaryFn::exp:
    return exp(x, digits);
  case ElementaryFn::ln:
    return log(x, digits);
  case ElementaryFn::sqrt:
    return sqrt(x, digits);
  case ElementaryFn::pow_int:
    return pow_int(x, k, digits);
  }
  throw DomainError("unknown elementary function");
}

namespace {

// Guard digits used by the constant series so that the final radius is
// comfortably below 10^-digits.
constexpr long kConstGuard = 8;

Rational pow10_inv(long d)
{
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(d));
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

// arctan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1)); returns value and tail bound
std::pair<Rational, Rational> atan_inv(unsigned long x, const Rational &eps)
{
  Rational s(0), xp(Integer(1), Integer(x));
  const Rational x2(Integer(x) * x);
  for (unsigned long k = 0;; ++k) {
    Rational term = xp / Rational(2 * k + 1);
    if (term < eps)
      return {s, term};
    s += (k % 2 == 0) ? term : Rational(-term);
    xp /= x2;
  }
}

template <class F>
BallReal cached(std::map<long, BallReal> &cache, std::mutex &m, long digits, F compute)
{
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(digits);
    if (it != cache.end())
      return it->second;
  }
  BallReal v = compute();
  std::lock_guard<std::mutex> lock(m);
  cache.emplace(digits, v);
  return v;
}

std::mutex pi_mutex, log2_mutex, catalan_mutex, gamma_mutex, zeta_mutex;
std::map<long, BallReal> pi_cache, log2_cache, catalan_cache, gamma_cache;
std::map<std::pair<std::pair<unsigned, Rational>, long>, BallReal> zeta_cache;

void check_digits(long digits)
{
  if (digits < 1)
    throw DomainError("digits must be positive");
}

} // namespace

BallReal const_pi(long digits)
{
  check_digits(digits);
  return cached(pi_cache, pi_mutex, digits, [digits] {
    const Rational eps = pow10_inv(digits + kConstGuard) / Rational(32);
    auto a = atan_inv(5, eps);
    auto b = atan_inv(239, eps);
    Rational mid = Rational(16) * a.first - Rational(4) * b.first;
    Rational rad = Rational(16) * a.second + Rational(4) * b.second;
    return BallReal(mid, rad, digits);
  });
}

BallReal const_log2(long digits)
{
  check_digits(digits);
  return cached(log2_cache, log2_mutex, digits, [digits] {
    // 2 atanh(1/3) = 2 sum 1/((2k+1) 3^(2k+1)); tail <= (9/8) first omitted term
    const Rational eps = pow10_inv(digits + kConstGuard);
    Rational s(0), p(Integer(1), Integer(3));
    for (unsigned long k = 0;; ++k) {
      Rational term = p / Rational(2 * k + 1);
      if (term < eps)
        return BallReal(Rational(2) * s, Rational(9, 4) * term, digits);
      s += term;
      p /= 9;
    }
  });
}

BallReal const_catalan(long digits)
{
  check_digits(digits);
  return cached(catalan_cache, catalan_mutex, digits, [digits] {
    // G = sum_n 2^(n-1) (n!)^2 / (2n+1)! * sum_{k<=n} 1/(2k+1); term ratio < 1/2
    const Rational eps = pow10_inv(digits + kConstGuard);
    Rational s(0), w(1, 2), h(1);
    for (unsigned long n = 0;; ++n) {
      Rational term = w * h;
      if (term < eps)
        return BallReal(s, Rational(2) * term, digits);
      s += term;
      w *= Rational(2 * (n + 1) * (n + 1), (2 * n + 2) * (2 * n + 3));
      h += Rational(1, 2 * n + 3);
    }
  });
}

BallReal const_euler_gamma(long digits)
{
  check_digits(digits);
  return cached(gamma_cache, gamma_mutex, digits, [digits] {
    // gamma = H_N - ln N - 1/(2N) + sum_{k<q} B_2k/(2k N^2k) + eps,
    // |eps| <= |B_2q| / (2q N^2q)
    const long work = digits + kConstGuard;
    const unsigned long N = static_cast<unsigned long>(std::max(20L, work));
    Rational h(0);
    for (unsigned long k = 1; k <= N; ++k)
      h += Rational(1, k);
    h -= Rational(1, 2 * N);
    const Rational eps = pow10_inv(work);
    const Rational n2(Integer(N) * N);
    Rational np = n2;
    Rational bound;
    for (unsigned q = 1;; ++q) {
      Rational t = bernoulli(2 * q) / (Rational(2 * q) * np);
      if (abs_of(t) < eps) {
        bound = abs_of(t);
        break;
      }
      h += t;
      np *= n2;
    }
    BallReal lnN = log(BallReal(Rational(N), work + 5), work + 5);
    return (BallReal(h, bound, work + 5) - lnN).with_digits(digits);
  });
}

namespace {

// Hurwitz zeta(s, a) for integer s >= 2 and rational a > 0 by Euler-Maclaurin with
// |R| <= 4 (s)_{2M} / (2 pi)^{2M} (N + a)^{1 - s - 2M} / (s + 2M - 1).
BallReal hurwitz_zeta(unsigned s, const Rational &a, long digits)
{
  if (s < 2 || sgn(a) <= 0)
    throw DomainError("hurwitz_zeta: need s >= 2, a > 0");
  const long work = digits + kConstGuard;
  const unsigned long N = static_cast<unsigned long>(2 * work + s);
  const long prec_digits = work + 10;
  BallReal head(0L, prec_digits);
  for (unsigned long k = 0; k < N; ++k) {
    Rational b = a + k;
    head += BallReal(Rational(1) / pow_q(b, s), prec_digits);
  }
  const Rational x = a + N;
  Rational tail = Rational(1) / (pow_q(x, s - 1) * (s - 1)) + Rational(1) / (pow_q(x, s) * 2);
  const Rational eps = pow10_inv(work);
  // 1/(2 pi) < 100000/628318
  const Rational inv2pi(100000, 628318);
  Rational poch(s); // (s)_{2j-1}
  Rational xp = pow_q(x, s + 1);
  const Rational x2 = x * x;
  Rational bound;
  for (unsigned j = 1;; ++j) {
    tail += bernoulli(2 * j) / Rational(factorial(2 * j)) * poch / xp;
    // remainder bound with M = j
    Rational poch2m = poch * (s + 2 * j - 1);
    Rational r = Rational(4) * poch2m * pow_q(inv2pi, 2 * j) / (pow_q(x, s + 2 * j - 1)) /
                 Rational(s + 2 * j - 1);
    if (r < eps || j > 4 * static_cast<unsigned>(work) + 20) {
      bound = r;
      break;
    }
    poch = poch2m * (s + 2 * j);
    xp *= x2;
  }
  return (head + BallReal(tail, bound, prec_digits)).with_digits(digits);
}

} // namespace

BallReal const_zeta(unsigned s, long digits)
{
  check_digits(digits);
  if (s < 2)
    throw DomainError("zeta(s) requires s >= 2");
  auto key = std::make_pair(std::make_pair(s, Rational(1)), digits);
  {
    std::lock_guard<std::mutex> lock(zeta_mutex);
    auto it = zeta_cache.find(key);
    if (it != zeta_cache.end())
      return it->second;
  }
  BallReal v = hurwitz_zeta(s, Rational(1), digits);
  std::lock_guard<std::mutex> lock(zeta_mutex);
  zeta_cache.emplace(key, v);
  return v;
}

BallReal const_beta_even(unsigned s, long digits)
{
  check_digits(digits);
  if (s < 2 || s % 2 != 0)
    throw DomainError("beta: even s >= 2 expected");
  if (s == 2)
    return const_catalan(digits);
  const long work = digits + 5;
  BallReal d = hurwitz_zeta(s, Rational(1, 4), work) - hurwitz_zeta(s, Rational(3, 4), work);
  Rational scale = Rational(1) / pow_q(Rational(4), s);
  return (d * BallReal(scale, work)).with_digits(digits);
}

BallReal const_eval(const std::string &name, long digits)
{
  if (digits < 10)
    throw DomainError("const_eval: digits must be >= 10");
  if (name == "pi")
    return const_pi(digits);
  if (name == "log2")
    return const_log2(digits);
  if (name == "catalan" || name == "G")
    return const_catalan(digits);
  if (name == "euler_gamma")
    return const_euler_gamma(digits);
  if (name.rfind("zeta(", 0) == 0 && name.back() == ')') {
    std::string arg = name.substr(5, name.size() - 6);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("unsupported constant: " + name);
    unsigned long s = std::stoul(arg);
    if (s < 2 || s > 100000)
      throw DomainError("unsupported constant: " + name);
    return const_zeta(static_cast<unsigned>(s), digits);
  }
  throw DomainError("unsupported constant: " + name);
}

BallReal evaluate(const PiMonomial &m, long digits)
{
  const long work = digits + 5;
  BallReal c(m.coeff(), work);
  long e = m.half_pi_exponent();
  if (e == 0)
    return c.with_digits(digits);
  BallReal pi = const_pi(work);
  BallReal p = pow_int(pi, e / 2, work);
  if (e % 2 != 0) {
    BallReal sp = sqrt(pi, work);
    p = e > 0 ? p * sp : p / sp;
  }
  return (c * p).with_digits(digits);
}

} // namespace hyperforms

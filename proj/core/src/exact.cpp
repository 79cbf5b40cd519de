#include "hyperforms/exact.hpp"

#include <mutex>

namespace hyperforms {

Rational make_rational(long num, long den)
{
  if (den == 0)
    throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string &text)
{
  std::string s;
  for (char ch : text)
    if (ch != ' ')
      s.push_back(ch);
  if (s.empty())
    throw DomainError("empty rational");
  auto slash = s.find('/');
  auto parse_int = [](const std::string &part) {
    Integer z;
    if (part.empty() || z.set_str(part[0] == '+' ? part.substr(1) : part, 10) != 0)
      throw DomainError("malformed rational: " + part);
    return z;
  };
  Rational q;
  if (slash == std::string::npos) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
      q = Rational(parse_int(s));
    } else {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
      q = Rational(parse_int(digits), den);
    }
  } else {
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0)
      throw DomainError("zero denominator");
    q = Rational(parse_int(s.substr(0, slash)), den);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational &q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer &z) { return z.get_str(); }

bool is_integer(const Rational &q) { return q.get_den() == 1; }

bool is_half_integer(const Rational &q)
{
  return q.get_den() == 1 || q.get_den() == 2;
}

bool is_nonpositive_integer(const Rational &q)
{
  return is_integer(q) && sgn(q) <= 0;
}

Integer floor_of(const Rational &q)
{
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational &q)
{
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs_of(const Rational &q) { return sgn(q) < 0 ? Rational(-q) : q; }

Integer factorial(unsigned long n)
{
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k)
{
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational pochhammer(const Rational &a, unsigned long k)
{
  Rational r(1);
  for (unsigned long j = 0; j < k; ++j)
    r *= a + j;
  return r;
}

Integer lcm_upto(long n)
{
  if (n < 0)
    throw DomainError("lcm_upto: negative argument");
  Integer r(1);
  for (long k = 2; k <= n; ++k)
    mpz_lcm_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

std::mutex euler_mutex;
std::vector<Integer> euler_table{Integer(1)};

} // namespace

Rational bernoulli(unsigned k)
{
  if (k == 1)
    return make_rational(-1, 2);
  if (k % 2 == 1)
    throw DomainError("bernoulli: odd index > 1");
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, with the table holding every B_j.
  while (bernoulli_table.size() <= k) {
    unsigned m = static_cast<unsigned>(bernoulli_table.size());
    Rational s(0);
    for (unsigned j = 0; j < m; ++j)
      s += Rational(binomial(m + 1, j)) * bernoulli_table[j];
    Rational b = -s / Rational(m + 1);
    b.canonicalize();
    bernoulli_table.push_back(b);
  }
  return bernoulli_table[k];
}

Integer euler_number(unsigned k)
{
  if (k % 2 == 1)
    return Integer(0);
  std::lock_guard<std::mutex> lock(euler_mutex);
  // sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0 for n >= 1
  while (2 * (euler_table.size() - 1) < k) {
    unsigned n = static_cast<unsigned>(euler_table.size());
    Integer s(0);
    for (unsigned j = 0; j < n; ++j)
      s += binomial(2 * n, 2 * j) * euler_table[j];
    euler_table.push_back(-s);
  }
  return euler_table[k / 2];
}

PiMonomial::PiMonomial(Rational coeff, long half_pi_exponent)
  : coeff_(std::move(coeff)), exp_(half_pi_exponent)
{
  coeff_.canonicalize();
  if (sgn(coeff_) == 0)
    exp_ = 0;
}

PiMonomial PiMonomial::operator*(const PiMonomial &o) const
{
  return PiMonomial(coeff_ * o.coeff_, exp_ + o.exp_);
}

PiMonomial PiMonomial::operator/(const PiMonomial &o) const
{
  if (o.is_zero())
    throw DomainError("PiMonomial division by zero");
  return PiMonomial(coeff_ / o.coeff_, exp_ - o.exp_);
}

PiMonomial PiMonomial::operator+(const PiMonomial &o) const
{
  if (is_zero())
    return o;
  if (o.is_zero())
    return *this;
  if (exp_ != o.exp_)
    throw DomainError("PiMonomial addition with mismatched pi exponents");
  return PiMonomial(coeff_ + o.coeff_, exp_);
}

PiMonomial PiMonomial::operator-() const { return PiMonomial(-coeff_, exp_); }

bool PiMonomial::operator==(const PiMonomial &o) const
{
  return coeff_ == o.coeff_ && exp_ == o.exp_;
}

std::string PiMonomial::to_string() const
{
  std::string s = hyperforms::to_string(coeff_);
  if (exp_ != 0)
    s += "*pi^(" + std::to_string(exp_) + "/2)";
  return s;
}

PiMonomial gamma_half(const Rational &a)
{
  if (!is_half_integer(a))
    throw DomainError("gamma_half: argument not in (1/2)Z: " + to_string(a));
  if (is_nonpositive_integer(a))
    throw PoleError("gamma_half: pole at " + to_string(a));
  if (is_integer(a)) {
    unsigned long m = a.get_num().get_ui();
    return PiMonomial(Rational(factorial(m - 1)), 0);
  }
  // a = m + 1/2
  Integer m = floor_of(a);
  if (m >= 0) {
    unsigned long mm = m.get_ui();
    Integer four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, mm);
    return PiMonomial(Rational(factorial(2 * mm), four_m * factorial(mm)), 1);
  }
  // Gamma(x) = Gamma(x+1)/x walking up to 1/2
  Rational c(1);
  for (Rational x = a; x < 0; x += 1)
    c /= x;
  return PiMonomial(c, 1);
}

PiMonomial gamma_ratio(const std::vector<Rational> &numerator_args,
                       const std::vector<Rational> &denominator_args)
{
  PiMonomial r(Rational(1), 0);
  for (const auto &a : numerator_args)
    r = r * gamma_half(a);
  for (const auto &a : denominator_args)
    r = r / gamma_half(a);
  return r;
}

} // namespace hyperforms

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperforms {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

class DivergenceError : public DomainError {
public:
  using DomainError::DomainError;
};

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string &text);
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

bool is_integer(const Rational &q);
bool is_half_integer(const Rational &q); // q in (1/2)Z
bool is_nonpositive_integer(const Rational &q);
Integer floor_of(const Rational &q);
Integer ceil_of(const Rational &q);
Rational abs_of(const Rational &q);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Rational pochhammer(const Rational &a, unsigned long k);
Integer lcm_upto(long n);

// B_k for even k >= 0 (B_1 = -1/2 is also accepted).
Rational bernoulli(unsigned k);
// Euler numbers E_k (zero for odd k).
Integer euler_number(unsigned k);

// coeff * pi^(half_pi_exponent/2); the exponent may be negative.
class PiMonomial {
public:
  PiMonomial() = default;
  PiMonomial(Rational coeff, long half_pi_exponent = 0);

  const Rational &coeff() const { return coeff_; }
  long half_pi_exponent() const { return exp_; }
  bool is_zero() const { return sgn(coeff_) == 0; }

  PiMonomial operator*(const PiMonomial &o) const;
  PiMonomial operator/(const PiMonomial &o) const;
  PiMonomial operator+(const PiMonomial &o) const;
  PiMonomial operator-() const;
  bool operator==(const PiMonomial &o) const;
  bool operator!=(const PiMonomial &o) const { return !(*this == o); }

  std::string to_string() const;

private:
  Rational coeff_{0};
  long exp_ = 0;
};

PiMonomial gamma_half(const Rational &a);
PiMonomial gamma_ratio(const std::vector<Rational> &numerator_args,
                       const std::vector<Rational> &denominator_args);

} // namespace hyperforms

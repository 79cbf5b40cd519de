#pragma once

#include "hyperforms/exact.hpp"

#include <mpfr.h>

#include <string>

namespace hyperforms {

long digits_to_bits(long digits);

// Midpoint-radius real ball; the true value lies in [mid - rad, mid + rad].
class BallReal {
public:
  BallReal();
  BallReal(long value, long digits);
  BallReal(const Rational &value, long digits);
  BallReal(const Rational &mid, const Rational &rad, long digits);
  BallReal(const BallReal &o);
  BallReal(BallReal &&o) noexcept;
  BallReal &operator=(const BallReal &o);
  BallReal &operator=(BallReal &&o) noexcept;
  ~BallReal();

  long digits() const { return digits_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }

  BallReal operator+(const BallReal &o) const;
  BallReal operator-(const BallReal &o) const;
  BallReal operator*(const BallReal &o) const;
  BallReal operator/(const BallReal &o) const;
  BallReal operator-() const;
  BallReal &operator+=(const BallReal &o) { return *this = *this + o; }
  BallReal &operator-=(const BallReal &o) { return *this = *this - o; }
  BallReal &operator*=(const BallReal &o) { return *this = *this * o; }

  // Widens the radius by a nonnegative amount.
  BallReal widened(const Rational &extra) const;
  BallReal with_digits(long digits) const;

  bool contains(const Rational &q) const;
  bool contains_zero() const;
  bool overlaps(const BallReal &o) const;
  bool strictly_positive() const;
  bool strictly_negative() const;
  bool strictly_less(const BallReal &o) const;
  // 2*rad <= 10^e
  bool width_at_most_pow10(long e) const;
  // max(|lower|, |upper|)
  double magnitude() const;
  // floor(log10(rad)), or a large negative value for an exact ball
  long rad_log10() const;
  // |a.mid - b.mid| as a decimal string with a few digits
  static std::string separation(const BallReal &a, const BallReal &b);

  double to_double() const;
  std::string mid_string(int significant = 0) const;
  std::string rad_string() const;
  std::string to_string() const;

private:
  struct Raw {};
  BallReal(Raw, mpfr_prec_t prec, long digits);
  void add_rounding_error(int ternary);
  mpfr_t mid_;
  mpfr_t rad_;
  long digits_ = 0;
};

BallReal exp(const BallReal &x, long digits);
BallReal log(const BallReal &x, long digits);
BallReal sqrt(const BallReal &x, long digits);
BallReal pow_int(const BallReal &x, long k, long digits);
BallReal abs(const BallReal &x);

enum class ElementaryFn { exp, ln, sqrt, pow_int };
BallReal elementary(ElementaryFn fn, const BallReal &x, long k, long digits);

BallReal const_pi(long digits);
BallReal const_log2(long digits);
BallReal const_catalan(long digits);
BallReal const_euler_gamma(long digits);
BallReal const_zeta(unsigned s, long digits);
// Dirichlet beta at even s >= 2 (beta(2) = G).
BallReal const_beta_even(unsigned s, long digits);
// name in {pi, log2, catalan, euler_gamma, zeta(i)}
BallReal const_eval(const std::string &name, long digits);

// value of a PiMonomial
BallReal evaluate(const PiMonomial &m, long digits);

} // namespace hyperforms

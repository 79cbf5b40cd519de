#pragma once

#include "hyperforms/ball.hpp"
#include "hyperforms/exact.hpp"
#include "hyperforms/poly.hpp"

#include <vector>

namespace hyperforms {

// Series sum_{k>=0} u_k with u_{k+1} = u_k * z * P(k) / Q(k); deg P = deg Q, equal leading
// coefficients, z = +1 or -1.
struct RatioSeries {
  Rational first;
  Poly P;
  Poly Q;
  int z = 1;
};

struct SeriesSum {
  Rational value;     // exact partial sum plus the telescoped tail estimate
  Rational error;     // rigorous bound on |true sum - value|
  long terms = 0;     // number of terms summed exactly
  bool terminated = false;
};

// Decay exponent m with |u_{k+1}/u_k| = 1 - m/k + O(1/k^2).
Rational decay_exponent(const Poly &P, const Poly &Q);

// Sums to an absolute error of about 10^-digits * max(1, |sum|).
SeriesSum sum_ratio_series(const RatioSeries &series, long digits);

struct PfqSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  int argument = 1; // +1 or -1
};

// sum(lower) - sum(upper)
Rational pfq_margin(const PfqSpec &spec);
bool pfq_terminates(const PfqSpec &spec);
// Throws DomainError describing the first violated precondition.
void check_pfq(const PfqSpec &spec);
RatioSeries pfq_series(const PfqSpec &spec);

BallReal eval_pfq(const PfqSpec &spec, long digits);
BallReal eval_prefactored(const PiMonomial &prefactor, const PfqSpec &spec, long digits);

} // namespace hyperforms

#pragma once

#include "hyperforms/ball.hpp"
#include "hyperforms/linear_form.hpp"
#include "hyperforms/poly.hpp"
#include "hyperforms/ratfunc.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace hyperforms {

// r: R_n with the (t + n/2) factor (odd zeta values); wt: the weighted R-hat_n (even zeta values)
enum class ZetaVariant { r, wt };
std::string variant_name(ZetaVariant v);
ZetaVariant parse_variant(const std::string &name);

struct ZetaFormSpec {
  int s = 8;
  int n = 0;
  ZetaVariant variant = ZetaVariant::r;
  bool derivative = false;
  // forms at s >= 40 grow quickly; n > 3 there requires this flag
  bool allow_large = false;
};

// Throws DomainError for odd s, s < 8, n < 0 or the size guard.
void validate(const ZetaFormSpec &spec);

// n!^(s-6) 2^(12n+1) (t+n/2) prod_{j=1}^{3n} (t-n-1/2+j)^2 / prod_{j=0}^n (t+j)^s, and the weighted
// variant without (t+n/2) and with 2^(12n).
FactoredRationalFunction build_R(const ZetaFormSpec &spec);
// t = nu - 1/2, nu = 1, 2, ...
SummationGrid zeta_grid();

// sum R(nu-1/2) or -sum R'(nu-1/2), exact, in the basis {one, zeta(i)}.
// Throws Error when the parity pattern of the variant is violated.
ConstantLinearForm zeta_form(const ZetaFormSpec &spec);
// Direct certified summation of the defining series.
BallReal zeta_direct(const ZetaFormSpec &spec, long digits);

// a_i = sum over poles of the coefficient of 1/(t-c)^i; a0 = constant of r (variant r) or of r' (wt).
struct ZetaCoefficients {
  int s = 0, n = 0;
  ZetaVariant variant = ZetaVariant::r;
  std::map<int, Rational> a;
  Rational a0;
};
ZetaCoefficients zeta_coefficients(int s, int n, ZetaVariant variant);

struct IntegralityEntry {
  std::string name; // "a_5", "ahat_0", ...
  int i = 0;
  int power = 0;    // exponent of d_n applied
  Rational value;
  Rational scaled;
  bool integral = false;
};

struct ZetaIntegralityReport {
  int s = 0, n = 0;
  Integer d_n;
  std::vector<IntegralityEntry> entries;
  int minimal_power_a0 = 0;    // least k with d_n^k a_0 integral
  int minimal_power_ahat0 = 0; // least k with d_n^k ahat_0 integral
  bool ahat0_at_power_s = false;
  bool pass = false;
};
ZetaIntegralityReport integrality_check(int s, int n);

// x^2 (x+2)^s - (x+3)^2 (x+1)^s
Poly asymptotic_polynomial(int s);
// ln g(x) = 12 ln 2 + 6 ln(x+3) + s ln(x+1) - 2s ln(x+2)
BallReal log_g(int s, const BallReal &x, long digits);

struct AsymptoticsResult {
  int s = 0;
  long digits = 0;
  BallReal x0, x0p;         // roots on x > 0 and -1 < x < 0
  BallReal p_x0, p_x0p;     // the polynomial on the enclosures
  BallReal ln_g_x0, ln_g_x0p;
  bool separated = false;   // ln g(x0') < ln g(x0) with disjoint balls
};
AsymptoticsResult asymptotics(int s, long digits);

struct TheoremCoefficient {
  int m = 0;
  int collection = 1;
  Rational kappa;
  bool in_stated_range = true; // m <= 19 for collection 1, m <= 21 for collection 2
};
TheoremCoefficient theorem_coefficient(int m, int collection);
std::vector<TheoremCoefficient> theorem_table(int collection);
// The same coefficient read off from the forms: collection 1 compares r' with r, collection 2
// compares r-hat with r-hat'. Needs 2m+1 <= s; throws DomainError when the form coefficient is 0.
Rational kappa_from_forms(int s, int n, int m, int collection);

nlohmann::json to_json(const ZetaFormSpec &spec, const ConstantLinearForm &form);
nlohmann::json to_json(const ZetaIntegralityReport &rep);
nlohmann::json to_json(const AsymptoticsResult &res);
nlohmann::json to_json(const TheoremCoefficient &c);

} // namespace hyperforms

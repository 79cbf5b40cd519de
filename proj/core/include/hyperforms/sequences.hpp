#pragma once

#include "hyperforms/ball.hpp"
#include "hyperforms/hyper.hpp"
#include "hyperforms/linear_form.hpp"
#include "hyperforms/poly.hpp"
#include "hyperforms/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperforms {

enum class Family { catalan_r, catalan_wt, log2_r, log2_wt, pi2_r };

// "CATALAN_R", "CATALAN_WT", "LOG2_R", "LOG2_WT", "PI2_R"
std::string family_name(Family f);
Family parse_family(const std::string &name);
const std::vector<Family> &all_families();

// Labels a form of the family may carry.
std::vector<BasisLabel> family_basis(Family f);

struct FamilyInstance {
  Family family;
  int n = 0;
  FactoredRationalFunction summand; // includes the overall sign
  SummationGrid grid;
  PiMonomial prefactor;             // value = prefactor * pFq
  PfqSpec series;
};

inline constexpr int default_max_index = 30;

FamilyInstance build_family(Family f, int n, int max_index = default_max_index);

// exact form in the pi basis, with no restriction on labels
ConstantLinearForm extract_form(Family f, int n, int max_index = default_max_index);
// as extract_form, but throws if a label outside family_basis has a nonzero coefficient
ConstantLinearForm build_form(Family f, int n, int max_index = default_max_index);

BallReal evaluate_series(Family f, int n, long digits);
BallReal evaluate_direct(Family f, int n, long digits);

struct VerificationReport {
  bool pass = false;
  BallReal first;
  BallReal second;
  bool forms_equal = false; // exact comparison of the extracted forms
  std::string detail;
};

// Numeric agreement of the two series representations within 10^-digits.
VerificationReport cross_check(Family a, Family b, int n, long digits);

// sum_{j=0}^{order} coeffs[j](n) * r_{n - order + 1 + j} = 0
struct Recurrence {
  int order = 0;
  std::vector<Poly> coeffs;
  int fitted_from = 0;
  int fitted_to = 0;
  int verified_to = 0; // last index at which it was checked
  std::string status = "fitted";
};

// forms[k] is r_{first + k}. Returns nullopt when no nontrivial recurrence exists.
std::optional<Recurrence> fit_recurrence(const std::vector<ConstantLinearForm> &forms, int first, int order,
                                         int degree);
bool recurrence_holds(const Recurrence &rec, const std::vector<ConstantLinearForm> &forms, int first, int n_from,
                      int n_to);
// Fits on n_lo..n_hi and verifies on 3 further indices.
std::optional<Recurrence> fit_recurrence(Family f, int order, int degree, int n_lo, int n_hi);
// sum_j lc_j lambda^j from the top-degree coefficients, made monic
Poly characteristic_polynomial(const Recurrence &rec);
std::string recurrence_to_string(const Recurrence &rec);

struct IntegralityCertificate {
  Family family;
  int n = 0;
  std::string scaling;
  Integer scale;
  std::vector<std::pair<BasisLabel, Rational>> scaled;
  bool pass = false;
  bool conjectural = false;
  // smallest e such that 2^e times the d-part of the scale makes the form 2-integral
  long minimal_power_of_two = 0;
};

IntegralityCertificate certify_integrality(Family f, int n);

} // namespace hyperforms

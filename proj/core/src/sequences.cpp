#include "hyperforms/sequences.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace hyperforms {

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Rational pow2(long e)
{
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

Rational fact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

} // namespace

std::string family_name(Family f)
{
  switch (f) {
  case Family::catalan_r:
    return "CATALAN_R";
  case Family::catalan_wt:
    return "CATALAN_WT";
  case Family::log2_r:
    return "LOG2_R";
  case Family::log2_wt:
    return "LOG2_WT";
  case Family::pi2_r:
    return "PI2_R";
  }
  return "?";
}

const std::vector<Family> &all_families()
{
  static const std::vector<Family> v{Family::catalan_r, Family::catalan_wt, Family::log2_r, Family::log2_wt,
                                     Family::pi2_r};
  return v;
}

Family parse_family(const std::string &name)
{
  for (Family f : all_families())
    if (family_name(f) == name)
      return f;
  throw DomainError("unknown family: " + name);
}

std::vector<BasisLabel> family_basis(Family f)
{
  switch (f) {
  case Family::catalan_r:
  case Family::catalan_wt:
    return {BasisLabel::one(), BasisLabel::catalan()};
  case Family::log2_r:
  case Family::log2_wt:
    return {BasisLabel::one(), BasisLabel::log2()};
  case Family::pi2_r:
    return {BasisLabel::one(), BasisLabel::pi(2), BasisLabel::pi(4)};
  }
  return {};
}

FamilyInstance build_family(Family f, int n, int max_index)
{
  if (n < 0 || n > max_index)
    throw DomainError("index n=" + std::to_string(n) + " outside 0.." + std::to_string(max_index));
  FamilyInstance in;
  in.family = f;
  in.n = n;
  FactoredRationalFunction &R = in.summand;
  const Rational half(1, 2);
  switch (f) {
  case Family::catalan_r: {
    // (2t+n+1) n! prod (t+1-j) prod (t+n+j) / prod (t+j+1/2)^3 (-1)^(n+t), t >= 0
    R = FactoredRationalFunction(2 * fact(n) * (n % 2 ? -1 : 1));
    R.factor(q(-(n + 1), 2), 1);
    for (int j = 1; j <= n; ++j)
      R.factor(q(j - 1), 1).factor(q(-n - j), 1);
    for (int j = 0; j <= n; ++j)
      R.factor(q(-2 * j - 1, 2), -3);
    in.grid = SummationGrid{q(0), 0, true};
    in.prefactor = gamma_ratio({q(3 * n + 2), q(2 * n + 1, 2), q(2 * n + 1, 2), q(n + 1)},
                               {q(4 * n + 3, 2), q(4 * n + 3, 2), q(4 * n + 3, 2)}) *
                   PiMonomial(pow2(-2 * n), 1);
    in.series = PfqSpec{{q(3 * n + 1), q(3 * n + 3, 2), q(2 * n + 1, 2), q(2 * n + 1, 2), q(2 * n + 1, 2), q(n + 1)},
                        {q(3 * n + 1, 2), q(4 * n + 3, 2), q(4 * n + 3, 2), q(4 * n + 3, 2), q(2 * n + 1)},
                        -1};
    break;
  }
  case Family::catalan_wt: {
    // 2^(2n+2) (2t-1) (2n+1)! prod_{j<2n} (t-n+j) / prod_{j<=2n+1} (2t-n-3/2+j)^2, t >= 1
    R = FactoredRationalFunction(pow2(2 * n + 2) * 2 * fact(2 * n + 1) / pow2(4 * n + 4));
    R.factor(half, 1);
    for (int j = 0; j < 2 * n; ++j)
      R.factor(q(n - j), 1);
    for (int j = 0; j <= 2 * n + 1; ++j)
      R.factor(q(2 * n + 3 - 2 * j, 4), -2);
    in.grid = SummationGrid{q(0), 1, false};
    in.prefactor = gamma_ratio({q(2 * n + 2), q(2 * n + 2), q(2 * n + 1, 2), q(2 * n + 1, 2)},
                               {q(6 * n + 5, 2), q(6 * n + 5, 2)}) *
                   PiMonomial(pow2(2 * n + 2), 0);
    in.series = PfqSpec{{q(2 * n + 1), q(2 * n + 3, 2), q(2 * n + 1, 4), q(2 * n + 1, 4), q(2 * n + 3, 4),
                         q(2 * n + 3, 4)},
                        {q(2 * n + 1, 2), q(6 * n + 7, 4), q(6 * n + 7, 4), q(6 * n + 5, 4), q(6 * n + 5, 4)},
                        1};
    break;
  }
  case Family::log2_r: {
    // (-1)^(n+1) prod_{j=1}^n (t-j) / prod_{j=0}^n (t+j) (-1)^t, from t = 1
    R = FactoredRationalFunction(q(n % 2 ? 1 : -1));
    for (int j = 1; j <= n; ++j)
      R.factor(q(j), 1);
    for (int j = 0; j <= n; ++j)
      R.factor(q(-j), -1);
    in.grid = SummationGrid{q(0), 1, true};
    in.prefactor = gamma_ratio({q(n + 1), q(n + 1)}, {q(2 * n + 2)});
    in.series = PfqSpec{{q(n + 1), q(n + 1)}, {q(2 * n + 2)}, -1};
    break;
  }
  case Family::log2_wt: {
    // (2n+1)! prod_{j=1}^n (t-j) / (n! prod_{j=0}^{2n+1} (2t-n-1+j)), from t = n+1
    R = FactoredRationalFunction(fact(2 * n + 1) / (fact(n) * pow2(2 * n + 2)));
    for (int j = 1; j <= n; ++j)
      R.factor(q(j), 1);
    for (int j = 0; j <= 2 * n + 1; ++j)
      R.factor(q(n + 1 - j, 2), -1);
    in.grid = SummationGrid{q(0), n + 1, false};
    in.prefactor = gamma_ratio({q(n + 1), q(2 * n + 2)}, {q(3 * n + 3)});
    in.series = PfqSpec{{q(n + 1), q(n + 1, 2), q(n + 2, 2)}, {q(3 * n + 4, 2), q(3 * n + 3, 2)}, 1};
    break;
  }
  case Family::pi2_r: {
    // 2^(8n) n!^4 (2n)!^2 prod_{j<4n} (t-n+j) / ((4n)! prod_{j<=2n} (t-1/2+j)^4), from t = 1
    Rational s = pow2(8 * n) * fact(n) * fact(n) * fact(n) * fact(n) * fact(2 * n) * fact(2 * n) / fact(4 * n);
    R = FactoredRationalFunction(s);
    for (int j = 0; j < 4 * n; ++j)
      R.factor(q(n - j), 1);
    for (int j = 0; j <= 2 * n; ++j)
      R.factor(half - j, -4);
    in.grid = SummationGrid{q(0), 1, false};
    in.prefactor = PiMonomial(q(1), 4) * gamma_ratio({q(2 * n + 1), q(2 * n + 1), q(2 * n + 1), q(2 * n + 1),
                                                      q(2 * n + 1), q(2 * n + 1)},
                                                     {q(6 * n + 3, 2), q(6 * n + 3, 2), q(6 * n + 3, 2),
                                                      q(6 * n + 3, 2)});
    in.series = PfqSpec{{q(4 * n + 1), q(2 * n + 1, 2), q(2 * n + 1, 2), q(2 * n + 1, 2), q(2 * n + 1, 2)},
                        {q(6 * n + 3, 2), q(6 * n + 3, 2), q(6 * n + 3, 2), q(6 * n + 3, 2)},
                        1};
    break;
  }
  }
  return in;
}

ConstantLinearForm extract_form(Family f, int n, int max_index)
{
  FamilyInstance in = build_family(f, n, max_index);
  return sum_linear_form(partial_fractions(in.summand), in.grid).in_pi_basis();
}

ConstantLinearForm build_form(Family f, int n, int max_index)
{
  ConstantLinearForm form = extract_form(f, n, max_index);
  const std::vector<BasisLabel> allowed = family_basis(f);
  for (const auto &[label, c] : form.terms())
    if (std::find(allowed.begin(), allowed.end(), label) == allowed.end())
      throw Error(family_name(f) + " n=" + std::to_string(n) + ": nonzero coefficient " + to_string(c) +
                  " on " + label.name());
  return form;
}

BallReal evaluate_series(Family f, int n, long digits)
{
  FamilyInstance in = build_family(f, n, std::max(n, default_max_index));
  return eval_prefactored(in.prefactor, in.series, digits);
}

BallReal evaluate_direct(Family f, int n, long digits)
{
  FamilyInstance in = build_family(f, n, std::max(n, default_max_index));
  return direct_sum(in.summand, in.grid, digits);
}

VerificationReport cross_check(Family a, Family b, int n, long digits)
{
  VerificationReport rep;
  rep.first = evaluate_series(a, n, digits + 5);
  rep.second = evaluate_series(b, n, digits + 5);
  const bool overlap = rep.first.overlaps(rep.second);
  const bool tight = rep.first.width_at_most_pow10(-digits) && rep.second.width_at_most_pow10(-digits);
  rep.pass = overlap && tight;
  rep.forms_equal = extract_form(a, n, std::max(n, default_max_index)) ==
                    extract_form(b, n, std::max(n, default_max_index));
  rep.detail = overlap ? (tight ? "agree" : "balls too wide") : "balls disjoint, separation " +
                                                                     BallReal::separation(rep.first, rep.second);
  return rep;
}

namespace {

// basis of the right nullspace of a dense rational matrix
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> M, size_t cols)
{
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < M.size(); ++c) {
    size_t p = row;
    while (p < M.size() && sgn(M[p][c]) == 0)
      ++p;
    if (p == M.size())
      continue;
    std::swap(M[p], M[row]);
    Rational inv = Rational(1) / M[row][c];
    for (auto &x : M[row])
      x *= inv;
    for (size_t r = 0; r < M.size(); ++r) {
      if (r == row || sgn(M[r][c]) == 0)
        continue;
      Rational f = M[r][c];
      for (size_t k = c; k < cols; ++k)
        M[r][k] -= f * M[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  std::set<int> pivots(pivot_col.begin(), pivot_col.end());
  for (size_t fcol = 0; fcol < cols; ++fcol) {
    if (pivots.count(static_cast<int>(fcol)))
      continue;
    std::vector<Rational> v(cols, Rational(0));
    v[fcol] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -M[r][fcol];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BasisLabel> labels_of(const std::vector<ConstantLinearForm> &forms)
{
  std::set<BasisLabel> s;
  for (const auto &f : forms)
    for (const auto &[k, c] : f.terms())
      s.insert(k);
  return {s.begin(), s.end()};
}

Rational ipow(long n, int d)
{
  Rational r(1);
  for (int i = 0; i < d; ++i)
    r *= n;
  return r;
}

} // namespace

bool recurrence_holds(const Recurrence &rec, const std::vector<ConstantLinearForm> &forms, int first, int n_from,
                      int n_to)
{
  for (int n = n_from; n <= n_to; ++n) {
    ConstantLinearForm s;
    for (int j = 0; j <= rec.order; ++j) {
      int idx = n - rec.order + 1 + j - first;
      if (idx < 0 || idx >= static_cast<int>(forms.size()))
        return false;
      s += forms[idx] * rec.coeffs[j](Rational(n));
    }
    if (!s.in_pi_basis().is_zero())
      return false;
  }
  return true;
}

std::optional<Recurrence> fit_recurrence(const std::vector<ConstantLinearForm> &forms, int first, int order,
                                         int degree)
{
  if (order < 1 || degree < 0)
    throw DomainError("fit_recurrence: order must be >= 1 and degree >= 0");
  std::vector<ConstantLinearForm> pforms;
  for (const auto &f : forms)
    pforms.push_back(f.in_pi_basis());
  const std::vector<BasisLabel> labels = labels_of(pforms);
  const size_t cols = static_cast<size_t>((order + 1) * (degree + 1));
  std::vector<std::vector<Rational>> M;
  const int last = first + static_cast<int>(forms.size()) - 1;
  for (int n = first + order - 1; n + 1 <= last; ++n) {
    for (const auto &label : labels) {
      std::vector<Rational> row(cols, Rational(0));
      for (int j = 0; j <= order; ++j) {
        Rational v = pforms[n - order + 1 + j - first].coeff(label);
        for (int d = 0; d <= degree; ++d)
          row[j * (degree + 1) + d] = v * ipow(n, d);
      }
      M.push_back(std::move(row));
    }
  }
  auto basis = nullspace(M, cols);
  if (basis.empty())
    return std::nullopt;
  // prefer the vector with the most trailing zeros in the top coefficient (simplest element)
  std::vector<Rational> v = basis.front();
  Integer den_lcm(1), num_gcd(0);
  for (const auto &x : v) {
    if (sgn(x) == 0)
      continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
  }
  Rational scale = Rational(den_lcm) / Rational(num_gcd);
  Recurrence rec;
  rec.order = order;
  for (int j = 0; j <= order; ++j) {
    std::vector<Rational> c(degree + 1);
    for (int d = 0; d <= degree; ++d)
      c[d] = v[j * (degree + 1) + d] * scale;
    rec.coeffs.emplace_back(c);
  }
  // sign: positive leading coefficient on the highest shift present
  for (int j = order; j >= 0; --j)
    if (!rec.coeffs[j].is_zero()) {
      if (sgn(rec.coeffs[j].leading()) < 0)
        for (auto &p : rec.coeffs)
          p = -p;
      break;
    }
  if (rec.coeffs[order].is_zero() || rec.coeffs[0].is_zero())
    return std::nullopt;
  rec.fitted_from = first;
  rec.fitted_to = last;
  rec.verified_to = last;
  if (!recurrence_holds(rec, forms, first, first + order - 1, last - 1))
    return std::nullopt;
  return rec;
}

std::optional<Recurrence> fit_recurrence(Family f, int order, int degree, int n_lo, int n_hi)
{
  const int needed = (order + 1) * (degree + 1) + 4;
  if (n_hi - n_lo + 1 < needed)
    throw DomainError("fit_recurrence: need at least " + std::to_string(needed) + " indices");
  const int cap = std::max(default_max_index, n_hi + 3);
  std::vector<ConstantLinearForm> forms;
  for (int n = n_lo; n <= n_hi + 3; ++n)
    forms.push_back(build_form(f, n, cap));
  std::vector<ConstantLinearForm> fit_part(forms.begin(), forms.begin() + (n_hi - n_lo + 1));
  auto rec = fit_recurrence(fit_part, n_lo, order, degree);
  if (!rec)
    return std::nullopt;
  if (!recurrence_holds(*rec, forms, n_lo, n_lo + order - 1, n_hi + 2))
    return std::nullopt;
  rec->verified_to = n_hi + 3;
  return rec;
}

Poly characteristic_polynomial(const Recurrence &rec)
{
  int D = -1;
  for (const auto &p : rec.coeffs)
    D = std::max(D, p.degree());
  std::vector<Rational> c;
  for (const auto &p : rec.coeffs)
    c.push_back(p.coeff(D));
  Poly chi(c);
  if (chi.is_zero())
    return chi;
  return chi * (Rational(1) / chi.leading());
}

std::string recurrence_to_string(const Recurrence &rec)
{
  auto poly_str = [](const Poly &p) {
    std::string s;
    for (int d = p.degree(); d >= 0; --d) {
      Rational c = p.coeff(d);
      if (sgn(c) == 0)
        continue;
      if (!s.empty())
        s += sgn(c) > 0 ? " + " : " - ";
      else if (sgn(c) < 0)
        s += "-";
      Rational a = abs_of(c);
      if (d == 0 || a != 1)
        s += a.get_den() == 1 ? to_string(a.get_num()) : to_string(a);
      if (d >= 1)
        s += (d == 0 || a != 1 ? "*n" : "n") + (d > 1 ? "^" + std::to_string(d) : "");
    }
    return s.empty() ? std::string("0") : s;
  };
  std::string out;
  for (int j = rec.order; j >= 0; --j) {
    int shift = j - rec.order + 1;
    std::string idx = shift == 0 ? "n" : (shift > 0 ? "n+" + std::to_string(shift) : "n" + std::to_string(shift));
    if (!out.empty())
      out += " + ";
    out += "(" + poly_str(rec.coeffs[j]) + ")*r[" + idx + "]";
  }
  return out + " = 0";
}

namespace {

long v2(const Integer &z)
{
  if (sgn(z) == 0)
    return 0;
  return static_cast<long>(mpz_scan1(z.get_mpz_t(), 0));
}

} // namespace

IntegralityCertificate certify_integrality(Family f, int n)
{
  IntegralityCertificate cert;
  cert.family = f;
  cert.n = n;
  Integer odd_part(1);
  switch (f) {
  case Family::catalan_r:
  case Family::catalan_wt: {
    Integer d = lcm_upto(std::max(0, 2 * n - 1));
    cert.scale = d * d;
    mpz_mul_2exp(cert.scale.get_mpz_t(), cert.scale.get_mpz_t(), static_cast<unsigned long>(4 * n));
    cert.scaling = "2^(4n) * d_(2n-1)^2";
    odd_part = d * d;
    break;
  }
  case Family::log2_r:
  case Family::log2_wt:
    cert.scale = lcm_upto(n);
    cert.scaling = "d_n";
    cert.conjectural = true;
    odd_part = cert.scale;
    break;
  case Family::pi2_r:
    throw DomainError("no integrality scaling is registered for PI2_R");
  }
  ConstantLinearForm form = build_form(f, n);
  cert.pass = true;
  long need = std::numeric_limits<long>::min();
  for (const auto &[label, c] : form.terms()) {
    Rational s = c * Rational(cert.scale);
    cert.scaled.emplace_back(label, s);
    if (s.get_den() != 1)
      cert.pass = false;
    Rational t = c * Rational(odd_part);
    need = std::max(need, v2(t.get_den()) - v2(t.get_num()));
  }
  cert.minimal_power_of_two = form.is_zero() ? 0 : need;
  return cert;
}

} // namespace hyperforms

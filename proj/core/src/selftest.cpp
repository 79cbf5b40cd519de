#include "hyperforms/selftest.hpp"

#include "hyperforms/group.hpp"
#include "hyperforms/identities.hpp"
#include "hyperforms/sequences.hpp"
#include "hyperforms/zetaforms.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace hyperforms {

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what)
  {
    if (!ok) {
      if (!pass)
        detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

std::string fixed(double x, int prec = 4)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, x);
  return buf;
}

ConstantLinearForm pi_form(std::initializer_list<std::pair<int, Rational>> terms)
{
  ConstantLinearForm f;
  for (const auto &[power, c] : terms)
    f.add(BasisLabel::pi(power), c);
  return f;
}

// r holds exactly when sum_j coeffs[j] * expected[k] == coeffs[k] * expected[j] as polynomials
bool proportional(const std::vector<Poly> &a, const std::vector<Poly> &b)
{
  if (a.size() != b.size())
    return false;
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t k = 0; k < a.size(); ++k)
      if (!(a[j] * b[k] - a[k] * b[j]).is_zero())
        return false;
  return true;
}

void criterion1(Outcome &o)
{
  const auto t0 = std::chrono::steady_clock::now();
  ConstantLinearForm r0 = build_form(Family::pi2_r, 0), r1 = build_form(Family::pi2_r, 1);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(r0 == pi_form({{4, q(1, 6)}}), "r_0 = " + r0.to_string());
  o.require(r1 == pi_form({{4, q(19, 6)}, {2, q(-125, 4)}}), "r_1 = " + r1.to_string());
  o.require(secs < 1.0, "took " + fixed(secs, 3) + " s");
  if (o.pass)
    o.detail << "r_0 = " << r0.to_string() << ", r_1 = " << r1.to_string() << " (under 1 s)";
}

void criterion2(Outcome &o)
{
  struct Row {
    int s;
    long g, gp; // value * 10^8
  };
  const Rational tol = q(1, 10000000);
  for (Row row : {Row{40, -4054232882, -4054234026}, Row{42, -4331492040, -4331492612}}) {
    const auto t0 = std::chrono::steady_clock::now();
    AsymptoticsResult a = asymptotics(row.s, 60);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto within = [&](const BallReal &x, long scaled) {
      BallReal diff = x - BallReal(q(scaled, 100000000), 60);
      return diff.magnitude() <= tol.get_d();
    };
    o.require(within(a.ln_g_x0, row.g), "s=" + std::to_string(row.s) + " ln g(x0) = " + a.ln_g_x0.mid_string(15));
    o.require(within(a.ln_g_x0p, row.gp), "s=" + std::to_string(row.s) + " ln g(x0') = " + a.ln_g_x0p.mid_string(15));
    o.require(secs < 10.0, "s=" + std::to_string(row.s) + " took " + fixed(secs, 2) + " s");
    if (o.pass)
      o.detail << "s=" << row.s << ": " << a.ln_g_x0.mid_string(12) << ", " << a.ln_g_x0p.mid_string(12)
               << " (under 10 s) ";
  }
}

void criterion3(Outcome &o)
{
  std::vector<ConstantLinearForm> forms;
  for (int n = 0; n <= 21; ++n)
    forms.push_back(build_form(Family::log2_r, n));
  for (int n = 1; n <= 20; ++n) {
    ConstantLinearForm lhs = forms[n + 1] * Rational(n + 1) - forms[n] * Rational(3 * (2 * n + 1)) + forms[n - 1] * Rational(n);
    o.require(lhs.is_zero(), "recurrence fails at n=" + std::to_string(n));
  }
  const Poly nn = Poly::linear(0);
  const std::vector<Poly> expected = {nn, (nn * Rational(2) + Poly::constant(1)) * Rational(-3), nn + Poly::constant(1)};
  auto rec = fit_recurrence(Family::log2_r, 2, 1, 1, 14);
  o.require(rec.has_value(), "no recurrence of order 2, degree 1 found");
  if (rec)
    o.require(proportional(rec->coeffs, expected), "fitted " + recurrence_to_string(*rec));
  if (o.pass)
    o.detail << "holds for n=1..20; fitted " << recurrence_to_string(*rec);
}

void criterion4(Outcome &o)
{
  std::optional<Recurrence> rec;
  int degree = 1;
  for (; degree <= 8; ++degree)
    if ((rec = fit_recurrence(Family::pi2_r, 2, degree, 0, 24)))
      break;
  bool poly_ok = false;
  if (rec) {
    poly_ok = characteristic_polynomial(*rec) == Poly({q(1), q(-123), q(1)});
    o.require(poly_ok, "characteristic polynomial differs from lambda^2 - 123 lambda + 1");
  } else {
    o.require(false, "no order-2 recurrence up to degree 8");
  }
  const long digits = 60;
  BallReal r10 = evaluate(build_form(Family::pi2_r, 10), digits + 40);
  BallReal r11 = evaluate(build_form(Family::pi2_r, 11), digits + 40);
  BallReal ratio = abs(r11 / r10);
  BallReal phi_inv = (sqrt(BallReal(5, digits), digits) - BallReal(1, digits)) / BallReal(2, digits);
  BallReal rel = ratio / pow_int(phi_inv, 10, digits);
  o.require((rel - BallReal(1, digits)).magnitude() <= 0.05, "|r_11/r_10| is not within 5% of phi^-10");
  o.detail << (o.pass ? "" : "; ") << "characteristic polynomial (degree-" << degree << " fit) "
           << (poly_ok ? "lambda^2 - 123 lambda + 1" : "mismatch") << "; |r_11/r_10| / phi^-10 = "
           << fixed(rel.to_double());
}

void criterion5(Outcome &o)
{
  for (int n = 0; n <= 5; ++n) {
    VerificationReport r = cross_check(Family::catalan_r, Family::catalan_wt, n, 50);
    o.require(r.pass, "Catalan n=" + std::to_string(n) + ": " + r.detail);
  }
  for (int n = 0; n <= 8; ++n) {
    VerificationReport r = cross_check(Family::log2_r, Family::log2_wt, n, 50);
    o.require(r.pass, "log2 n=" + std::to_string(n) + ": " + r.detail);
  }
  if (o.pass)
    o.detail << "Catalan n=0..5 and log2 n=0..8 agree to 50 digits";
}

void criterion6(Outcome &o)
{
  for (IdentityId id : all_identities()) {
    SweepResult r = sweep(id, default_ranges(id), 20, 40);
    const bool ok = r.reports.size() >= 20 && r.failures == 0;
    o.require(ok, identity_name(id) + ": " + std::to_string(r.reports.size()) + " points, " +
                      std::to_string(r.failures) + " failures");
    if (ok)
      o.detail << identity_name(id) << " " << r.reports.size() << "/" << r.reports.size() << " ";
  }
}

void criterion7(Outcome &o)
{
  for (int n = 1; n <= 8; ++n) {
    IntegralityCertificate c = certify_integrality(Family::catalan_wt, n);
    Integer d = lcm_upto(2 * n - 1), want = d * d;
    mpz_mul_2exp(want.get_mpz_t(), want.get_mpz_t(), static_cast<unsigned long>(4 * n));
    o.require(c.scale == want, "n=" + std::to_string(n) + " unexpected scale");
    o.require(c.pass, "n=" + std::to_string(n) + " scaled coefficients not integral");
    ConstantLinearForm f = extract_form(Family::catalan_wt, n);
    for (BasisLabel l : {BasisLabel::pi(1), BasisLabel::pi(2), BasisLabel::log2()})
      o.require(f.coeff(l) == 0, "n=" + std::to_string(n) + " nonzero " + l.name());
    for (const auto &l : f.support())
      o.require(l == BasisLabel::one() || l == BasisLabel::catalan(), "n=" + std::to_string(n) + " extra " + l.name());
  }
  if (o.pass)
    o.detail << "2^(4n) d_(2n-1)^2 clears both coefficients for n=1..8";
}

void criterion8(Outcome &o)
{
  const int s = 8;
  for (int n = 0; n <= 4; ++n) {
    ZetaIntegralityReport rep = integrality_check(s, n);
    for (const auto &e : rep.entries)
      o.require(e.integral || e.i == 1, "n=" + std::to_string(n) + " " + e.name + " not integral");
    for (ZetaVariant v : {ZetaVariant::r, ZetaVariant::wt})
      for (bool d : {false, true}) {
        ZetaFormSpec spec{s, n, v, d};
        const std::string tag = "n=" + std::to_string(n) + " " + variant_name(v) + (d ? "'" : "");
        try {
          ConstantLinearForm f = zeta_form(spec);
          BallReal exact = evaluate(f, 40), direct = zeta_direct(spec, 40);
          o.require(exact.overlaps(direct) && exact.width_at_most_pow10(-35) && direct.width_at_most_pow10(-35),
                    tag + " differs from direct summation");
        } catch (const Error &e) {
          o.require(false, tag + ": " + e.what());
        }
      }
  }
  if (o.pass)
    o.detail << "s=8, n=0..4: inclusions, parity and direct-summation agreement hold";
}

void criterion9(Outcome &o)
{
  o.require(generate_group().size() == 120, "group order " + std::to_string(generate_group().size()));
  const std::vector<std::array<Rational, 5>> sets = {
      {q(2), q(3), q(5, 2), q(7), q(13, 2)},    {q(1), q(2), q(3, 2), q(11, 2), q(5)},
      {q(1), q(1), q(1, 2), q(5, 2), q(2)},     {q(3), q(2), q(5, 2), q(15, 2), q(7)},
      {q(2), q(2), q(3, 2), q(6), q(11, 2)},
  };
  long evaluated = 0, skipped = 0;
  for (const auto &p : sets) {
    ParamMatrix m = build_matrix(p[0], p[1], p[2], p[3], p[4]);
    OrbitReport rep = orbit_invariant_check(m, 30);
    o.require(rep.pass, "orbit of " + to_string(m) + " disagrees");
    evaluated += rep.evaluated;
    skipped += rep.skipped;
  }
  const std::vector<std::array<Rational, 5>> cond = {
      {q(1), q(2), q(3, 2), q(5), q(9, 2)}, {q(3), q(1), q(5, 2), q(6), q(13, 2)}, {q(2), q(4), q(7, 2), q(8), q(11, 2)}};
  for (const auto &p : cond) {
    ParamMatrix m = build_matrix(p[0], p[1], p[2], p[3], p[4]);
    auto reps = classify_half_integer_reps(m);
    auto brute = brute_force_half_integer_reps(m);
    std::set<ParamMatrix> a(reps.begin(), reps.end()), b(brute.begin(), brute.end());
    o.require(reps.size() == 12 && a == b, "representatives of " + to_string(m) + " differ from brute force");
  }
  int typo_entries = 0;
  for (int which : {1, 2}) {
    ParamMatrix got = shifted(record_matrix(1, which), 1), reference = reference_record_matrix(1, which);
    for (int i = 0; i < kSlots; ++i) {
      if (got.c[i] == reference.c[i])
        continue;
      // the reference (3,2) entries are one less than the parametrisation gives (known misprint)
      const bool known = i == slot_index(3, 2) && got.c[i] - reference.c[i] == 1;
      typo_entries += known;
      o.require(known, "record matrix " + std::to_string(which) + " entry " + slot_names()[i]);
    }
  }
  for (const auto &g : generate_group())
    if (act(g, record_matrix(1, 1)) == record_matrix(1, 2))
      o.require(false, "record matrices share an orbit");
  if (o.pass)
    o.detail << "order 120; 5 orbits agree (" << evaluated << " evaluated, " << skipped
             << " skipped as divergent); 12 representatives match brute force; record matrices reproduced ("
             << typo_entries << " reference (3,2) entries are off by one)";
}

void criterion10(Outcome &o)
{
  LemmaSuiteResult r = lemma_property_suite(50, 20240601, 30);
  o.require(r.passed == r.trials && r.trials == 50, r.first_failure);
  if (o.pass)
    o.detail << r.passed << "/" << r.trials << " random symmetric functions";
}

void criterion11(Outcome &o)
{
  o.require(theorem_coefficient(1, 1).kappa == q(1, 14), "kappa(1,1) = " + to_string(theorem_coefficient(1, 1).kappa));
  o.require(theorem_coefficient(1, 2).kappa == q(1, 7), "kappa(1,2) = " + to_string(theorem_coefficient(1, 2).kappa));
  for (int m = 1; m <= 6; ++m) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(2 * m - 1));
    const Rational lhs = Rational(p) * abs_of(bernoulli(2 * m)) / Rational(factorial(2 * m));
    BallReal rhs = const_zeta(static_cast<unsigned>(2 * m), 40) / pow_int(const_pi(40), 2 * m, 40);
    o.require(rhs.contains(lhs) && rhs.width_at_most_pow10(-35), "m=" + std::to_string(m));
  }
  if (o.pass)
    o.detail << "kappa(1,1) = 1/14, kappa(1,2) = 1/7; zeta(2m)/pi^(2m) identity for m=1..6";
}

const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> &criteria()
{
  static const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> c = {
      {"PI2_R exact forms r_0, r_1", criterion1},
      {"asymptotic constants for s = 40, 42", criterion2},
      {"LOG2_R recurrence", criterion3},
      {"PI2_R characteristic polynomial and ratio", criterion4},
      {"Catalan and log2 representations agree", criterion5},
      {"identity sweeps", criterion6},
      {"Catalan integrality", criterion7},
      {"zeta forms: integrality, parity, direct summation", criterion8},
      {"permutation group", criterion9},
      {"symmetry lemma property suite", criterion10},
      {"theorem coefficients", criterion11},
  };
  return c;
}

// symmetric under t -> -n - t with even pole orders
FactoredRationalFunction random_symmetric(std::mt19937_64 &rng, int n)
{
  std::uniform_int_distribution<int> half_order(1, 3), coef(1, 9), rootnum(-40, 40);
  FactoredRationalFunction R(q(coef(rng), coef(rng)));
  int den = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    const int M = 2 * half_order(rng);
    R.factor(q(-k), -M);
    if (n - k != k)
      R.factor(q(k - n), -M);
    den += (n - k != k) ? 2 * M : M;
  }
  std::uniform_int_distribution<int> npairs(0, std::max(0, (den - 2) / 2));
  const int pairs = std::min(npairs(rng), 4);
  for (int p = 0; p < pairs; ++p) {
    Rational r = q(rootnum(rng), 6);
    if (r == q(-n, 2))
      r += q(1, 6);
    R.factor(r, 1).factor(-q(n) - r, 1);
  }
  return R;
}

} // namespace

LemmaSuiteResult lemma_property_suite(int count, unsigned long seed, long digits)
{
  LemmaSuiteResult res;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nd(0, 5);
  for (int trial = 0; trial < count; ++trial) {
    const int n = nd(rng);
    FactoredRationalFunction R = random_symmetric(rng, n);
    PartialFractionExpansion pf = partial_fractions(R);
    SymmetryReport rep = analyze_symmetry(pf, n);
    const int m = n >= 1 ? (n - 1) / 2 : -1;
    SummationGrid grid{q(-1, 2), -m, false};
    bool ok = rep.verified && rep.sign == 1 && rep.a0 == rep.lemma_a0;
    ConstantLinearForm lemma = lemma_form(rep);
    ok = ok && sum_linear_form(pf, grid) == lemma;
    ok = ok && direct_sum(R, grid, digits).overlaps(evaluate(lemma, digits));
    ++res.trials;
    if (ok)
      ++res.passed;
    else if (res.first_failure.empty())
      res.first_failure = "trial " + std::to_string(trial) + " (n=" + std::to_string(n) + ")";
  }
  return res;
}

int criterion_count() { return static_cast<int>(criteria().size()); }

std::string criterion_title(int id)
{
  if (id < 1 || id > criterion_count())
    throw DomainError("no criterion " + std::to_string(id));
  return criteria()[id - 1].first;
}

CriterionResult run_criterion(int id)
{
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    criteria()[id - 1].second(o);
  } catch (const std::exception &e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = o.pass;
  r.detail = o.detail.str();
  while (!r.detail.empty() && r.detail.back() == ' ')
    r.detail.pop_back();
  return r;
}

nlohmann::json to_json(const CriterionResult &r)
{
  return {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
}

} // namespace hyperforms

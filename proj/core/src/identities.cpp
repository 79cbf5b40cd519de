#include "hyperforms/identities.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hyperforms {

namespace {

const Rational h(1, 2);

struct Entry {
  IdentityId id;
  const char *name;
  std::vector<std::string> params;
};

const std::vector<Entry> &registry()
{
  static const std::vector<Entry> r{
      {IdentityId::th_cat, "TH_CAT", {"n", "c", "d"}},
      {IdentityId::th_ln2, "TH_LN2", {"x", "a", "b"}},
      {IdentityId::th_pi2, "TH_PI2", {"a", "b", "c"}},
      {IdentityId::eq_2n1_4n2, "EQ_2N1_4N2", {"n"}},
      {IdentityId::t3240, "T3240", {"a", "b", "c", "d"}},
      {IdentityId::t7635, "T7635", {"a", "b", "c", "d", "e", "f"}},
      {IdentityId::t7634, "T7634", {"a", "b", "c", "d", "e", "f"}},
      {IdentityId::eq_3f2_7f6, "EQ_3F2_7F6", {"a", "b", "c", "d"}},
  };
  return r;
}

const Entry &entry(IdentityId id)
{
  for (const auto &e : registry())
    if (e.id == id)
      return e;
  throw DomainError("unknown identity");
}

Rational get(const ParamMap &p, const std::string &name)
{
  auto it = p.find(name);
  if (it == p.end())
    throw DomainError("missing parameter " + name);
  return it->second;
}

HyperSide plain(std::vector<Rational> up, std::vector<Rational> low, int z = 1)
{
  HyperSide s;
  s.series = PfqSpec{std::move(up), std::move(low), z};
  return s;
}

HyperSide with_gammas(HyperSide s, std::vector<Rational> num, std::vector<Rational> den)
{
  s.gamma_num = std::move(num);
  s.gamma_den = std::move(den);
  return s;
}

// very-well-poised 7F6(1) with parameters a; b, c, d, e, f
HyperSide well_poised(const Rational &a, const Rational &b, const Rational &c, const Rational &d, const Rational &e,
                      const Rational &f)
{
  return plain({a, a / 2 + 1, b, c, d, e, f}, {a / 2, a - b + 1, a - c + 1, a - d + 1, a - e + 1, a - f + 1});
}

IdentitySides t7635_sides(const Rational &a, const Rational &b, const Rational &c, const Rational &d,
                          const Rational &e, const Rational &f)
{
  IdentitySides s;
  s.lhs = well_poised(a, b, c, d, e, f);
  const Rational m = Rational(3, 2) * a - b - c / 2 - d / 2 - e / 2 - f / 2;
  s.rhs = with_gammas(plain({3 * a - 2 * b - c - d - e - f + 2, m + 2, a - b - c + 1, a - b - d + 1, a - b - e + 1,
                             a - b - f + 1, 2 * a - b - c - d - e - f + 2},
                            {m + 1, 2 * a - b - d - e - f + 2, 2 * a - b - c - e - f + 2, 2 * a - b - c - d - f + 2,
                             2 * a - b - c - d - e + 2, a - b + 1}),
                      {a - c + 1, a - d + 1, a - e + 1, a - f + 1, 3 * a - 2 * b - c - d - e - f + 3,
                       2 * a - b - c - d - e - f + 2},
                      {a + 1, b, 2 * a - b - c - d - e + 2, 2 * a - b - c - d - f + 2, 2 * a - b - c - e - f + 2,
                       2 * a - b - d - e - f + 2});
  return s;
}

IdentitySides t7634_sides(const Rational &a, const Rational &b, const Rational &c, const Rational &d,
                          const Rational &e, const Rational &f)
{
  IdentitySides s;
  s.lhs = well_poised(a, b, c, d, e, f);
  const Rational m = a - b / 2 - c / 2 - d / 2;
  s.rhs = with_gammas(plain({2 * a - b - c - d + 1, m + Rational(3, 2), a - c - d + 1, a - b - d + 1, a - b - c + 1, e, f},
                            {m + h, a - b + 1, a - c + 1, a - d + 1, 2 * a - b - c - d - e + 2,
                             2 * a - b - c - d - f + 2}),
                      {a - e + 1, a - f + 1, 2 * a - b - c - d + 2, 2 * a - b - c - d - e - f + 2},
                      {a + 1, a - e - f + 1, 2 * a - b - c - d - e + 2, 2 * a - b - c - d - f + 2});
  return s;
}

IdentitySides t3240_sides(const Rational &a, const Rational &b, const Rational &c, const Rational &d)
{
  IdentitySides s;
  s.lhs = plain({a, b, c}, {d, d - b + c});
  s.rhs = with_gammas(plain({d - h, d / 2 + Rational(3, 4), d / 2 - c / 2, b, a / 2, a / 2 + h, -c / 2 + d / 2 + h},
                            {d / 2 - Rational(1, 4), c / 2 + d / 2 + h, -b + d + h, -a / 2 + d + h, d - a / 2,
                             c / 2 + d / 2}),
                      {2 * d, 2 * d - 2 * b - a, d - b + c, d - a + c}, {2 * d - 2 * b, 2 * d - a, d + c, d - b - a + c});
  return s;
}

IdentitySides eq_3f2_7f6_sides(const Rational &a, const Rational &b, const Rational &c, const Rational &d)
{
  IdentitySides s;
  s.lhs = plain({a, b, c}, {d, d - b + c});
  const Rational w = -a / 2 - b + c / 2 + Rational(3, 2) * d; // well-poised top parameter plus one
  s.rhs = with_gammas(
      plain({w - 1, w / 2 + h, -b + c / 2 + d / 2, -a / 2 - b + d, a / 2, d / 2 - c / 2, -a / 2 + c / 2 + d / 2 - h},
            {w / 2 - h, d - a / 2, c / 2 + d / 2, -a - b + c / 2 + Rational(3, 2) * d, -a / 2 - b + c + d, -b + d + h}),
      {2 * d, -a / 2 + d + h, c / 2 + d / 2 + h, -a - 2 * b + 2 * d, -a + c + d, -b + c + d, w},
      {d + h, 2 * d - a, 2 * d - 2 * b, c + d, -a / 2 + c / 2 + d / 2 + h, -a / 2 - b + c + d,
       -a - b + c / 2 + Rational(3, 2) * d});
  return s;
}

} // namespace

std::string identity_name(IdentityId id) { return entry(id).name; }

IdentityId parse_identity(const std::string &name)
{
  for (const auto &e : registry())
    if (name == e.name)
      return e.id;
  throw DomainError("unknown identity: " + name);
}

const std::vector<IdentityId> &all_identities()
{
  static const std::vector<IdentityId> v = [] {
    std::vector<IdentityId> r;
    for (const auto &e : registry())
      r.push_back(e.id);
    return r;
  }();
  return v;
}

const std::vector<std::string> &identity_parameters(IdentityId id) { return entry(id).params; }

PiMonomial HyperSide::prefactor() const
{
  return PiMonomial(scalar, half_pi) * gamma_ratio(gamma_num, gamma_den);
}

IdentitySides identity_sides(IdentityId id, const ParamMap &p)
{
  for (const auto &[k, v] : p) {
    const auto &names = identity_parameters(id);
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw DomainError("unknown parameter " + k + " for " + identity_name(id));
  }
  IdentitySides s;
  switch (id) {
  case IdentityId::th_cat: {
    const Rational n = get(p, "n"), c = get(p, "c"), d = get(p, "d");
    s.lhs = plain({3 * n + 1, Rational(3, 2) * n + Rational(3, 2), n + h, n + 1, c, d},
                  {Rational(3, 2) * n + h, 2 * n + Rational(3, 2), 2 * n + 1, 3 * n + 2 - c, 3 * n + 2 - d}, -1);
    s.rhs = with_gammas(plain({2 * n + 1, n + Rational(3, 2), c / 2, c / 2 + h, d / 2, d / 2 + h},
                              {n + h, 2 * n + 2 - c / 2, 2 * n + Rational(3, 2) - c / 2, 2 * n + 2 - d / 2,
                               2 * n + Rational(3, 2) - d / 2}),
                        {4 * n + 3, 3 * n + 2 - c, 3 * n + 2 - d, 4 * n + 3 - c - d},
                        {3 * n + 2, 4 * n + 3 - c, 4 * n + 3 - d, 3 * n + 2 - c - d});
    break;
  }
  case IdentityId::th_ln2: {
    const Rational x = get(p, "x"), a = get(p, "a"), b = get(p, "b");
    s.lhs = plain({x, 2 * a}, {2 * b - x}, -1);
    s.rhs = with_gammas(plain({x, a, a + h}, {b, b + h}), {2 * b - x, 2 * b - 2 * a}, {2 * b, 2 * b - 2 * a - x});
    break;
  }
  case IdentityId::th_pi2: {
    const Rational a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const Rational a2 = a / 2, a32 = Rational(3, 2) * a, a52 = Rational(5, 2) * a;
    s.lhs = plain({a, b, c}, {-a + 2 * b + c, -a + b + 2 * c});
    s.rhs = with_gammas(plain({-2 * a + 2 * b + 2 * c - 1, c - a2, -a32 + b + c, a2, b - a2},
                              {-a32 + 2 * b + c, -a2 + b + c, -a52 + 2 * b + 2 * c, -a32 + b + 2 * c}),
                        {-a2 + b + c + h, -a32 + 2 * b + c + h, -a + b + 2 * c, -3 * a + 2 * b + 2 * c,
                         -2 * a + 2 * b + 2 * c, -2 * a + 4 * b + 2 * c},
                        {-a + b + c + h, -a + 2 * b + c + h, -a32 + b + 2 * c, -a52 + 2 * b + 2 * c,
                         -a + 2 * b + 2 * c, -3 * a + 4 * b + 2 * c});
    break;
  }
  case IdentityId::eq_2n1_4n2: {
    const Rational n = get(p, "n");
    s.lhs = with_gammas(plain({4 * n + 1, n + h, n + h, n + h, n + h},
                              {3 * n + Rational(3, 2), 3 * n + Rational(3, 2), 3 * n + Rational(3, 2),
                               3 * n + Rational(3, 2)}),
                        {4 * n + 2, 4 * n + 2, 2 * n + 1, 2 * n + 1},
                        {3 * n + Rational(3, 2), 3 * n + Rational(3, 2), 3 * n + Rational(3, 2),
                         3 * n + Rational(3, 2)});
    s.rhs = plain({2 * n + 1, 2 * n + 1, 2 * n + 1}, {4 * n + 2, 4 * n + 2});
    break;
  }
  case IdentityId::t3240:
    s = t3240_sides(get(p, "a"), get(p, "b"), get(p, "c"), get(p, "d"));
    break;
  case IdentityId::t7635:
    s = t7635_sides(get(p, "a"), get(p, "b"), get(p, "c"), get(p, "d"), get(p, "e"), get(p, "f"));
    break;
  case IdentityId::t7634:
    s = t7634_sides(get(p, "a"), get(p, "b"), get(p, "c"), get(p, "d"), get(p, "e"), get(p, "f"));
    break;
  case IdentityId::eq_3f2_7f6:
    s = eq_3f2_7f6_sides(get(p, "a"), get(p, "b"), get(p, "c"), get(p, "d"));
    break;
  }
  return s;
}

namespace {

std::optional<std::string> side_failure(const HyperSide &s, const char *which)
{
  const std::string tag = std::string(which) + ": ";
  for (const auto *list : {&s.gamma_num, &s.gamma_den})
    for (const auto &g : *list) {
      if (!is_half_integer(g))
        return tag + "Gamma argument " + to_string(g) + " not in (1/2)Z";
      if (is_nonpositive_integer(g))
        return tag + "Gamma argument " + to_string(g) + " at a pole";
    }
  for (const auto *list : {&s.series.upper, &s.series.lower})
    for (const auto &a : *list) {
      const Integer den = a.get_den();
      if (den != 1 && den != 2 && den != 4)
        return tag + "series parameter " + to_string(a) + " has denominator not dividing 4";
    }
  for (const auto &b : s.series.lower)
    if (is_nonpositive_integer(b))
      return tag + "lower parameter " + to_string(b) + " is a non-positive integer";
  for (const auto &a : s.series.upper)
    if (is_nonpositive_integer(a))
      return tag + "upper parameter " + to_string(a) + " is a non-positive integer (terminating)";
  const Rational margin = pfq_margin(s.series);
  if (s.series.argument == 1 && margin <= h)
    return tag + "convergence margin " + to_string(margin) + " <= 1/2";
  if (s.series.argument == -1 && margin <= -h)
    return tag + "convergence margin " + to_string(margin) + " <= -1/2";
  return std::nullopt;
}

} // namespace

std::optional<std::string> admissibility_failure(IdentityId id, const ParamMap &params)
{
  for (const auto &name : identity_parameters(id)) {
    auto it = params.find(name);
    if (it == params.end())
      return "missing parameter " + name;
    if (!is_half_integer(it->second))
      return "parameter " + name + " = " + to_string(it->second) + " not in (1/2)Z";
  }
  if (id == IdentityId::th_cat || id == IdentityId::eq_2n1_4n2) {
    const Rational n = params.at("n");
    if (!is_integer(n) || sgn(n) < 0)
      return "n must be a non-negative integer";
  }
  IdentitySides s = identity_sides(id, params);
  if (auto f = side_failure(s.lhs, "lhs"))
    return f;
  if (auto f = side_failure(s.rhs, "rhs"))
    return f;
  return std::nullopt;
}

BallReal evaluate_side(const HyperSide &side, long digits)
{
  return eval_prefactored(side.prefactor(), side.series, digits);
}

std::string params_to_string(const ParamMap &params)
{
  std::string s;
  for (const auto &[k, v] : params) {
    if (!s.empty())
      s += ", ";
    s += k + "=" + to_string(v);
  }
  return s;
}

IdentityReport verify_identity(IdentityId id, const ParamMap &params, long digits)
{
  if (auto f = admissibility_failure(id, params))
    throw InadmissibleError(identity_name(id) + " at " + params_to_string(params) + ": " + *f);
  IdentitySides s = identity_sides(id, params);
  IdentityReport rep{id, params, digits, evaluate_side(s.lhs, digits), evaluate_side(s.rhs, digits), false, ""};
  const bool overlap = rep.lhs.overlaps(rep.rhs);
  rep.pass = overlap && rep.lhs.width_at_most_pow10(5 - digits) && rep.rhs.width_at_most_pow10(5 - digits);
  rep.separation = BallReal::separation(rep.lhs, rep.rhs);
  return rep;
}

std::map<std::string, ParamRange> default_ranges(IdentityId id)
{
  const Rational one(1);
  switch (id) {
  case IdentityId::th_cat:
    return {{"n", {0, 3, one}}, {"c", {h, 6, h}}, {"d", {h, 6, h}}};
  case IdentityId::th_ln2:
    return {{"x", {h, 8, h}}, {"a", {h, 8, h}}, {"b", {h, 8, h}}};
  case IdentityId::th_pi2:
    return {{"a", {1, 6, one}}, {"b", {h, 6, h}}, {"c", {h, 6, h}}};
  case IdentityId::eq_2n1_4n2:
    return {{"n", {0, 24, one}}};
  case IdentityId::t3240:
    return {{"a", {h, 6, h}}, {"b", {h, 6, h}}, {"c", {h, 6, h}}, {"d", {h, 8, h}}};
  case IdentityId::t7635:
  case IdentityId::t7634:
    return {{"a", {3, 10, h}}, {"b", {h, 3, h}}, {"c", {h, 3, h}}, {"d", {h, 3, h}}, {"e", {h, 3, h}}, {"f", {h, 3, h}}};
  case IdentityId::eq_3f2_7f6:
    return {{"a", {1, 5, one}}, {"b", {h, 4, h}}, {"c", {1, 5, one}}, {"d", {1, 9, one}}};
  }
  return {};
}

SweepResult sweep(IdentityId id, const std::map<std::string, ParamRange> &ranges, int count, long digits,
                  std::uint64_t seed)
{
  SweepResult out;
  std::mt19937_64 rng(seed);
  std::set<ParamMap> seen;
  const long max_draws = 2000L * std::max(1, count);
  for (long draw = 0; draw < max_draws && static_cast<int>(out.reports.size()) < count; ++draw) {
    ParamMap p;
    for (const auto &[name, r] : ranges) {
      if (sgn(r.step) <= 0 || r.hi < r.lo)
        throw DomainError("bad range for " + name);
      const long steps = floor_of((r.hi - r.lo) / r.step).get_si();
      std::uniform_int_distribution<long> pick(0, steps);
      p[name] = r.lo + r.step * pick(rng);
    }
    if (!seen.insert(p).second || admissibility_failure(id, p)) {
      ++out.skipped;
      continue;
    }
    IdentityReport rep = verify_identity(id, p, digits);
    if (!rep.pass)
      ++out.failures;
    out.reports.push_back(std::move(rep));
  }
  return out;
}

ChainReport verify_pi2_chain(const ParamMap &abcd, long digits)
{
  const Rational a = get(abcd, "a"), b = get(abcd, "b"), c = get(abcd, "c"), d = get(abcd, "d");
  auto six = [](Rational A, Rational B, Rational C, Rational D, Rational E, Rational F) {
    return ParamMap{{"a", A}, {"b", B}, {"c", C}, {"d", D}, {"e", E}, {"f", F}};
  };
  // parameters of the successive very-well-poised series
  const ParamMap w1 = six(d - h, d / 2 - c / 2, b, a / 2, a / 2 + h, d / 2 - c / 2 + h);
  const ParamMap w2 = six(-a - b + Rational(3, 2) * c + Rational(3, 2) * d - h, c, -a / 2 + c / 2 + d / 2,
                          -a - b + c + d, -b + c / 2 + d / 2 + h, -a / 2 + c / 2 + d / 2 + h);
  const ParamMap w3 = six(-a / 2 - b + c / 2 + Rational(3, 2) * d, -a / 2 + c / 2 + d / 2 + h, -c / 2 + d / 2 + h,
                          a / 2 + h, -a / 2 - b + d + h, -b + c / 2 + d / 2 + h);
  ChainReport rep;
  rep.steps.push_back(verify_identity(IdentityId::t3240, abcd, digits));
  rep.steps.push_back(verify_identity(IdentityId::t7635, w1, digits));
  rep.steps.push_back(verify_identity(IdentityId::t7634, w2, digits));
  rep.steps.push_back(verify_identity(IdentityId::t7635, w3, digits));
  rep.direct = verify_identity(IdentityId::eq_3f2_7f6, abcd, digits);
  PiMonomial pre = identity_sides(IdentityId::t3240, abcd).rhs.prefactor() *
                   identity_sides(IdentityId::t7635, w1).rhs.prefactor() *
                   identity_sides(IdentityId::t7634, w2).rhs.prefactor();
  IdentitySides last = identity_sides(IdentityId::t7635, w3);
  pre = pre * last.rhs.prefactor();
  rep.composed = eval_prefactored(pre, last.rhs.series, digits);
  rep.prefactors_equal = pre == identity_sides(IdentityId::eq_3f2_7f6, abcd).rhs.prefactor();
  rep.pass = rep.direct.pass && rep.composed.overlaps(rep.direct.lhs) && rep.composed.overlaps(rep.direct.rhs);
  for (const auto &s : rep.steps)
    rep.pass = rep.pass && s.pass;
  return rep;
}

} // namespace hyperforms

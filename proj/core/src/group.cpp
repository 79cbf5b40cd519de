#include "hyperforms/group.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace hyperforms {

const std::array<std::string, kSlots> &slot_names()
{
  static const std::array<std::string, kSlots> names = {"c00", "c11", "c12", "c13", "c21",
                                                       "c22", "c23", "c31", "c32", "c33"};
  return names;
}

int slot_index(int j, int k)
{
  if (j == 0 && k == 0)
    return 0;
  if (j < 1 || j > 3 || k < 1 || k > 3)
    throw DomainError("no matrix entry (" + std::to_string(j) + "," + std::to_string(k) + ")");
  return 1 + 3 * (j - 1) + (k - 1);
}

int slot_index(const std::string &name)
{
  const auto &n = slot_names();
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end())
    throw DomainError("unknown matrix slot " + name);
  return static_cast<int>(it - n.begin());
}

ParamMatrix build_matrix(const Rational &a1, const Rational &a2, const Rational &a3, const Rational &b2,
                         const Rational &b3)
{
  const Rational a[3] = {a1, a2, a3};
  const Rational b[2] = {b2, b3};
  ParamMatrix m;
  m.c[0] = b2 + b3 - a1 - a2 - a3 - 1;
  for (int j = 1; j <= 3; ++j) {
    m.at(j, 1) = a[j - 1] - 1;
    for (int k = 2; k <= 3; ++k)
      m.at(j, k) = b[k - 2] - a[j - 1] - 1;
  }
  return m;
}

PfqSpec matrix_series(const ParamMatrix &m)
{
  PfqSpec s;
  for (int j = 1; j <= 3; ++j)
    s.upper.push_back(m.at(j, 1) + 1);
  for (int k = 2; k <= 3; ++k)
    s.lower.push_back(m.at(1, k) + s.upper[0] + 1);
  s.argument = 1;
  return s;
}

bool is_consistent(const ParamMatrix &m)
{
  const PfqSpec s = matrix_series(m);
  return build_matrix(s.upper[0], s.upper[1], s.upper[2], s.lower[0], s.lower[1]) == m;
}

ParamMatrix shifted(const ParamMatrix &m, const Rational &delta)
{
  ParamMatrix r = m;
  for (auto &x : r.c)
    x += delta;
  return r;
}

nlohmann::json to_json(const ParamMatrix &m)
{
  nlohmann::json j = nlohmann::json::object();
  for (int i = 0; i < kSlots; ++i)
    j[slot_names()[i]] = to_string(m.c[i]);
  return j;
}

ParamMatrix matrix_from_json(const nlohmann::json &j)
{
  if (!j.is_object() || j.size() != kSlots)
    throw DomainError("matrix JSON must be an object with the ten keys c00..c33");
  ParamMatrix m;
  for (int i = 0; i < kSlots; ++i) {
    const auto &name = slot_names()[i];
    if (!j.contains(name))
      throw DomainError("matrix JSON lacks " + name);
    const auto &v = j.at(name);
    m.c[i] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
  }
  return m;
}

std::string to_string(const ParamMatrix &m)
{
  std::ostringstream os;
  os << "[" << to_string(m.c[0]) << ";";
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k)
      os << " " << to_string(m.at(j, k));
    os << (j < 3 ? ";" : "]");
  }
  return os.str();
}

GroupElement identity_element()
{
  GroupElement g;
  for (int i = 0; i < kSlots; ++i)
    g[i] = i;
  return g;
}

GroupElement compose(const GroupElement &g, const GroupElement &h)
{
  // act(g, act(h, m))[i] = m[h[g[i]]]
  GroupElement r;
  for (int i = 0; i < kSlots; ++i)
    r[i] = h[g[i]];
  return r;
}

ParamMatrix act(const GroupElement &g, const ParamMatrix &m)
{
  ParamMatrix r;
  for (int i = 0; i < kSlots; ++i)
    r.c[i] = m.c[g[i]];
  return r;
}

namespace {

GroupElement transpositions(std::initializer_list<std::pair<const char *, const char *>> pairs)
{
  GroupElement g = identity_element();
  for (const auto &[x, y] : pairs)
    std::swap(g[slot_index(x)], g[slot_index(y)]);
  return g;
}

GroupElement from_layout(std::initializer_list<const char *> layout)
{
  GroupElement g;
  int i = 0;
  for (const char *name : layout)
    g[i++] = slot_index(name);
  return g;
}

} // namespace

GroupElement generator(const std::string &name)
{
  if (name == "a1")
    return transpositions({{"c11", "c21"}, {"c12", "c22"}, {"c13", "c23"}});
  if (name == "a2")
    return transpositions({{"c21", "c31"}, {"c22", "c32"}, {"c23", "c33"}});
  if (name == "b")
    return transpositions({{"c12", "c13"}, {"c22", "c23"}, {"c32", "c33"}});
  if (name == "h")
    return transpositions({{"c00", "c22"}, {"c11", "c33"}, {"c13", "c31"}});
  throw DomainError("unknown generator " + name);
}

const std::vector<GroupElement> &group_generators()
{
  static const std::vector<GroupElement> gens = {generator("a1"), generator("a2"), generator("b"), generator("h")};
  return gens;
}

std::vector<GroupElement> generate_subgroup(const std::vector<GroupElement> &gens)
{
  std::set<GroupElement> seen = {identity_element()};
  std::vector<GroupElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto &g : frontier)
      for (const auto &s : gens) {
        GroupElement x = compose(g, s);
        if (seen.insert(x).second)
          next.push_back(x);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

const std::vector<GroupElement> &generate_group()
{
  static const std::vector<GroupElement> group = generate_subgroup(group_generators());
  return group;
}

std::optional<std::string> invariant_admissibility(const ParamMatrix &m)
{
  for (const auto &x : m.c)
    if (!is_half_integer(x))
      return "entries must lie in (1/2)Z";
  const PfqSpec s = matrix_series(m);
  const Rational gam[3] = {s.lower[0], s.lower[1], m.c[0] + 1};
  for (const auto &g : gam)
    if (is_nonpositive_integer(g))
      return "Gamma argument at a pole";
  for (const auto &u : s.upper)
    if (is_nonpositive_integer(u))
      return "terminating series";
  try {
    check_pfq(s);
  } catch (const DomainError &e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

BallReal invariant_value(const ParamMatrix &m, long digits)
{
  if (auto why = invariant_admissibility(m))
    throw DomainError("inadmissible matrix " + to_string(m) + ": " + *why);
  const PfqSpec s = matrix_series(m);
  return eval_prefactored(gamma_ratio({}, {s.lower[0], s.lower[1], m.c[0] + 1}), s, digits);
}

OrbitReport orbit_invariant_check(const ParamMatrix &m, long digits, unsigned threads)
{
  OrbitReport rep;
  for (const auto &g : generate_group())
    rep.members.push_back({g, act(g, m), std::nullopt, {}});
  for (auto &mem : rep.members)
    if (auto why = invariant_admissibility(mem.matrix))
      mem.skip_reason = *why;

  // identical matrices share one evaluation
  std::map<ParamMatrix, size_t> first;
  std::vector<size_t> todo;
  for (size_t i = 0; i < rep.members.size(); ++i)
    if (rep.members[i].skip_reason.empty() && first.emplace(rep.members[i].matrix, i).second)
      todo.push_back(i);

  if (threads == 0)
    threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t t; (t = next.fetch_add(1)) < todo.size();) {
      auto &mem = rep.members[todo[t]];
      mem.value = invariant_value(mem.matrix, digits);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads && i < todo.size(); ++i)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();

  for (auto &mem : rep.members) {
    if (!mem.skip_reason.empty()) {
      ++rep.skipped;
      continue;
    }
    if (!mem.value)
      mem.value = rep.members[first.at(mem.matrix)].value;
    ++rep.evaluated;
  }

  bool ok = rep.evaluated > 0;
  std::vector<const BallReal *> vals;
  for (const auto &mem : rep.members)
    if (mem.value) {
      ok = ok && mem.value->width_at_most_pow10(5 - digits);
      vals.push_back(&*mem.value);
    }
  for (size_t i = 0; ok && i < vals.size(); ++i)
    for (size_t j = i + 1; ok && j < vals.size(); ++j)
      ok = vals[i]->overlaps(*vals[j]);
  rep.pass = ok;
  return rep;
}

namespace {

bool is_strict_half(const Rational &q) { return is_half_integer(q) && !is_integer(q); }

} // namespace

bool has_half_integer_pattern(const ParamMatrix &m)
{
  static const std::set<int> half = {slot_index(1, 3), slot_index(2, 3), slot_index(3, 1), slot_index(3, 2)};
  for (int i = 0; i < kSlots; ++i)
    if (half.count(i) ? !is_strict_half(m.c[i]) : !is_integer(m.c[i]))
      return false;
  return true;
}

bool satisfies_cond(const Rational &a1, const Rational &a2, const Rational &a3, const Rational &b2,
                    const Rational &b3)
{
  return is_integer(a1) && is_integer(a2) && is_integer(b2) && is_strict_half(a3) && is_strict_half(b3);
}

const std::vector<GroupElement> &pattern_representatives()
{
  static const std::vector<GroupElement> reps = {
      from_layout({"c22", "c33", "c12", "c31", "c21", "c00", "c23", "c13", "c32", "c11"}),
      from_layout({"c12", "c11", "c00", "c13", "c33", "c22", "c31", "c23", "c32", "c21"}),
      from_layout({"c33", "c22", "c21", "c13", "c12", "c11", "c23", "c31", "c32", "c00"}),
      from_layout({"c11", "c00", "c21", "c31", "c12", "c33", "c23", "c13", "c32", "c22"}),
      from_layout({"c21", "c22", "c33", "c13", "c00", "c11", "c31", "c23", "c32", "c12"}),
  };
  return reps;
}

std::vector<GroupElement> half_integer_elements()
{
  std::vector<GroupElement> base = {identity_element()};
  base.insert(base.end(), pattern_representatives().begin(), pattern_representatives().end());
  std::vector<GroupElement> out = base;
  const GroupElement a1 = generator("a1");
  for (const auto &g : base)
    out.push_back(compose(a1, g));
  return out;
}

std::vector<ParamMatrix> classify_half_integer_reps(const ParamMatrix &m)
{
  if (!has_half_integer_pattern(m))
    throw DomainError("matrix " + to_string(m) + " does not come from half-integer parameters of the required shape");
  std::vector<ParamMatrix> out;
  for (const auto &g : half_integer_elements()) {
    ParamMatrix r = act(g, m);
    if (!has_half_integer_pattern(r))
      throw Error("representative lost the half-integer pattern");
    out.push_back(r);
  }
  return out;
}

std::vector<ParamMatrix> brute_force_half_integer_reps(const ParamMatrix &m)
{
  std::set<ParamMatrix> found;
  for (const auto &g : generate_group()) {
    ParamMatrix r = act(g, m);
    if (has_half_integer_pattern(r))
      found.insert(r);
  }
  return {found.begin(), found.end()};
}

ParamMatrix record_matrix(long n, int which)
{
  if (which != 1 && which != 2)
    throw DomainError("record matrix index must be 1 or 2");
  const Rational x(which == 1 ? 12 * n + 1 : 14 * n + 1);
  const Rational a2f1(which == 1 ? 14 * n + 1 : 12 * n + 1);
  const Rational b2f1(28 * n + 2);
  // 2F1(x, a; b; -1) corresponds to 3F2(x, a/2, a/2+1/2; (b+x)/2, (b+x)/2+1/2; 1)
  const Rational a = a2f1 / 2, b = (b2f1 + x) / 2, h(1, 2);
  return build_matrix(x, a + h, a, b + h, b);
}

ParamMatrix reference_record_matrix(long n, int which)
{
  if (which != 1 && which != 2)
    throw DomainError("record matrix index must be 1 or 2");
  const Rational h(1, 2);
  auto e = [n](long k, const Rational &c) -> Rational { return Rational(k * n) + c; };
  ParamMatrix m;
  if (which == 1)
    m.c = {e(14, 1), e(12, 1), e(8, 1), e(8, h), e(7, 1), e(13, 1), e(13, h), e(7, h), e(13, h), e(13, 1)};
  else
    m.c = {e(16, 1), e(14, 1), e(7, 1), e(7, h), e(6, 1), e(15, 1), e(15, h), e(6, h), e(15, h), e(15, 1)};
  return m;
}

} // namespace hyperforms

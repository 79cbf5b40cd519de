#include "hyperforms/group.hpp"
#include "hyperforms/identities.hpp"
#include "hyperforms/selftest.hpp"
#include "hyperforms/sequences.hpp"
#include "hyperforms/zetaforms.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace hyperforms;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string normalize_name(std::string s)
{
  for (auto &c : s)
    c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::pair<int, int> parse_range(const std::string &text)
{
  auto to_int = [&](const std::string &t) {
    try {
      size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size())
        throw std::invalid_argument(t);
      return v;
    } catch (const std::exception &) {
      throw UsageError("bad range '" + text + "' (expected N, A..B or A:B)");
    }
  };
  for (const std::string sep : {"..", ":"}) {
    auto pos = text.find(sep);
    if (pos != std::string::npos) {
      int lo = to_int(text.substr(0, pos)), hi = to_int(text.substr(pos + sep.size()));
      if (lo > hi)
        throw UsageError("empty range '" + text + "'");
      return {lo, hi};
    }
  }
  int v = to_int(text);
  return {v, v};
}

Rational parse_value(const std::string &name, const std::string &text)
{
  try {
    return parse_rational(text);
  } catch (const std::exception &) {
    throw UsageError("bad value for " + name + ": '" + text + "'");
  }
}

std::array<Rational, 5> parse_params5(const std::string &text)
{
  std::array<Rational, 5> out;
  std::stringstream ss(text);
  std::string item;
  size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 5)
      throw UsageError("--params takes exactly five values a1,a2,a3,b2,b3");
    out[k] = parse_value("--params", item);
    ++k;
  }
  if (k != 5)
    throw UsageError("--params takes exactly five values a1,a2,a3,b2,b3");
  return out;
}

std::string csv_cell(const json &v)
{
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s)
      q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

void write_pretty(std::ostream &out, const json &j, int indent)
{
  const std::string pad(static_cast<size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto &[k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        write_pretty(out, v, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto &v : j) {
      if (v.is_structured()) {
        out << pad << "-\n";
        write_pretty(out, v, indent + 2);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json &result, const std::string &format)
{
  if (format == "json") {
    std::cout << result.dump(2) << "\n";
  } else if (format == "pretty") {
    write_pretty(std::cout, result, 0);
  } else {
    if (!result.contains("rows") || !result.at("rows").is_array())
      throw UsageError("csv output is only available for tabular commands");
    std::vector<std::string> cols;
    for (const auto &row : result.at("rows"))
      for (const auto &[k, v] : row.items())
        if (std::find(cols.begin(), cols.end(), k) == cols.end())
          cols.push_back(k);
    for (size_t i = 0; i < cols.size(); ++i)
      std::cout << (i ? "," : "") << cols[i];
    std::cout << "\n";
    for (const auto &row : result.at("rows")) {
      for (size_t i = 0; i < cols.size(); ++i)
        std::cout << (i ? "," : "") << (row.contains(cols[i]) ? csv_cell(row.at(cols[i])) : "");
      std::cout << "\n";
    }
  }
}

json params_json(const ParamMap &p)
{
  json j = json::object();
  for (const auto &[k, v] : p)
    j[k] = to_string(v);
  return j;
}

json poly_json(const Poly &p)
{
  json j = json::array();
  for (int i = 0; i <= p.degree(); ++i)
    j.push_back(to_string(p.coeff(i)));
  return j;
}

json element_json(const GroupElement &g)
{
  json j = json::array();
  for (int i : g)
    j.push_back(slot_names()[i]);
  return j;
}

struct Config {
  long digits = 40;
  std::string format = "json";
};

// ---- approx ----

struct ApproxArgs {
  std::string family;
  std::string range = "0..5";
  bool verify = false;
  bool integrality = false;
  bool recurrence = false;
  int order = 2;
  int degree = 1;
};

json run_approx(const ApproxArgs &a, const Config &cfg)
{
  const Family f = parse_family(normalize_name(a.family));
  const auto [lo, hi] = parse_range(a.range);
  if (lo < 0)
    throw UsageError("n must be nonnegative");
  bool pass = true;
  json rows = json::array();
  std::vector<ConstantLinearForm> forms;
  for (int n = lo; n <= hi; ++n) {
    ConstantLinearForm form = build_form(f, n, std::max(n, default_max_index));
    forms.push_back(form);
    json row = {{"n", n}, {"form", to_json(form)}, {"value", to_json(evaluate(form, cfg.digits))}};
    if (a.verify) {
      BallReal series = evaluate_series(f, n, cfg.digits), direct = evaluate_direct(f, n, cfg.digits);
      const bool ok = series.overlaps(direct) && series.overlaps(evaluate(form, cfg.digits));
      row["series"] = to_json(series);
      row["direct"] = to_json(direct);
      row["agree"] = ok;
      pass = pass && ok;
    }
    if (a.integrality) {
      IntegralityCertificate c = certify_integrality(f, n);
      row["integrality"] = {{"scaling", c.scaling},
                            {"scale", to_string(c.scale)},
                            {"pass", c.pass},
                            {"conjectural", c.conjectural},
                            {"minimal_power_of_two", c.minimal_power_of_two}};
      pass = pass && c.pass;
    }
    rows.push_back(row);
  }
  json out = {{"command", "approx"}, {"family", family_name(f)}, {"digits", cfg.digits}, {"rows", rows}};
  if (a.recurrence) {
    auto rec = fit_recurrence(forms, lo, a.order, a.degree);
    if (rec) {
      json coeffs = json::array();
      for (const auto &p : rec->coeffs)
        coeffs.push_back(poly_json(p));
      out["recurrence"] = {{"order", rec->order},
                           {"coeffs", coeffs},
                           {"text", recurrence_to_string(*rec)},
                           {"characteristic_polynomial", poly_json(characteristic_polynomial(*rec))},
                           {"fitted_from", rec->fitted_from},
                           {"fitted_to", rec->fitted_to},
                           {"status", rec->status}};
    } else {
      out["recurrence"] = nullptr;
      pass = false;
    }
  }
  out["pass"] = pass;
  return out;
}

// ---- identity / sweep ----

const std::vector<std::string> &all_param_names()
{
  static const std::vector<std::string> names = {"n", "a", "b", "c", "d", "e", "f", "x"};
  return names;
}

json report_json(const IdentityReport &r)
{
  return {{"params", params_json(r.params)},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"separation", r.separation},
          {"pass", r.pass}};
}

json run_identity(const std::string &name, const std::map<std::string, std::string> &given, const Config &cfg)
{
  const IdentityId id = parse_identity(normalize_name(name));
  const auto &wanted = identity_parameters(id);
  ParamMap p;
  for (const auto &w : wanted) {
    auto it = given.find(w);
    if (it == given.end())
      throw UsageError(identity_name(id) + " needs --" + w);
    p[w] = parse_value("--" + w, it->second);
  }
  for (const auto &[k, v] : given)
    if (std::find(wanted.begin(), wanted.end(), k) == wanted.end())
      throw UsageError(identity_name(id) + " takes no parameter --" + k);
  if (auto why = admissibility_failure(id, p))
    throw UsageError("inadmissible parameters: " + *why);
  IdentityReport r = verify_identity(id, p, cfg.digits);
  json out = report_json(r);
  out["command"] = "identity";
  out["identity"] = identity_name(id);
  out["digits"] = cfg.digits;
  return out;
}

json run_sweep(const std::string &name, int count, std::uint64_t seed, const std::vector<std::string> &ranges,
               const Config &cfg)
{
  const IdentityId id = parse_identity(normalize_name(name));
  auto box = default_ranges(id);
  for (const auto &spec : ranges) {
    // name=lo:hi[:step]
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw UsageError("bad --range '" + spec + "' (expected name=lo:hi[:step])");
    const std::string key = spec.substr(0, eq);
    if (!box.count(key))
      throw UsageError(identity_name(id) + " has no parameter " + key);
    std::vector<std::string> parts;
    std::stringstream ss(spec.substr(eq + 1));
    for (std::string item; std::getline(ss, item, ':');)
      parts.push_back(item);
    if (parts.size() < 2 || parts.size() > 3)
      throw UsageError("bad --range '" + spec + "'");
    ParamRange r{parse_value(key, parts[0]), parse_value(key, parts[1]), Rational(1, 2)};
    if (parts.size() == 3)
      r.step = parse_value(key, parts[2]);
    if (sgn(r.step) <= 0 || r.lo > r.hi)
      throw UsageError("bad --range '" + spec + "'");
    box[key] = r;
  }
  SweepResult res = sweep(id, box, count, cfg.digits, seed);
  json rows = json::array();
  for (const auto &r : res.reports)
    rows.push_back(report_json(r));
  const bool pass = res.failures == 0 && static_cast<int>(res.reports.size()) >= count;
  return {{"command", "sweep"},    {"identity", identity_name(id)}, {"digits", cfg.digits}, {"seed", seed},
          {"requested", count},    {"verified", res.reports.size()}, {"skipped", res.skipped},
          {"failures", res.failures}, {"rows", rows},               {"pass", pass}};
}

// ---- group ----

ParamMatrix matrix_input(const std::string &params, const std::string &matrix)
{
  if (params.empty() == matrix.empty())
    throw UsageError("give exactly one of --params a1,a2,a3,b2,b3 or --matrix JSON");
  if (!params.empty()) {
    auto p = parse_params5(params);
    return build_matrix(p[0], p[1], p[2], p[3], p[4]);
  }
  json j;
  try {
    j = json::parse(matrix);
  } catch (const json::exception &e) {
    throw UsageError(std::string("bad --matrix JSON: ") + e.what());
  }
  ParamMatrix m = matrix_from_json(j);
  if (!is_consistent(m))
    throw UsageError("--matrix entries do not come from a 3F2 parameter set");
  return m;
}

json run_group_orbit(const ParamMatrix &m, const Config &cfg)
{
  OrbitReport rep = orbit_invariant_check(m, cfg.digits);
  json rows = json::array();
  for (const auto &mem : rep.members) {
    json row = {{"element", element_json(mem.element)}, {"matrix", to_json(mem.matrix)}};
    if (mem.value)
      row["value"] = to_json(*mem.value);
    else
      row["skipped"] = mem.skip_reason;
    rows.push_back(row);
  }
  return {{"command", "group orbit"}, {"order", generate_group().size()}, {"matrix", to_json(m)},
          {"digits", cfg.digits},     {"evaluated", rep.evaluated},       {"skipped", rep.skipped},
          {"rows", rows},             {"pass", rep.pass}};
}

json run_group_reps(const ParamMatrix &m)
{
  auto reps = classify_half_integer_reps(m);
  auto brute = brute_force_half_integer_reps(m);
  std::set<ParamMatrix> a(reps.begin(), reps.end()), b(brute.begin(), brute.end());
  json rows = json::array();
  auto elems = half_integer_elements();
  for (size_t i = 0; i < reps.size(); ++i)
    rows.push_back({{"element", element_json(elems[i])}, {"matrix", to_json(reps[i])}});
  return {{"command", "group reps"},
          {"matrix", to_json(m)},
          {"representatives", reps.size()},
          {"brute_force", brute.size()},
          {"rows", rows},
          {"pass", reps.size() == 12 && a == b}};
}

json run_group_records(long n)
{
  json rows = json::array();
  for (int which : {1, 2}) {
    ParamMatrix got = shifted(record_matrix(n, which), 1), reference = reference_record_matrix(n, which);
    json diff = json::array();
    for (int i = 0; i < kSlots; ++i)
      if (got.c[i] != reference.c[i])
        diff.push_back(slot_names()[i]);
    rows.push_back({{"which", which}, {"matrix_plus_one", to_json(got)}, {"reference", to_json(reference)}, {"differs", diff}});
  }
  return {{"command", "group records"}, {"n", n}, {"rows", rows}, {"pass", true}};
}

// ---- zeta ----

json run_zeta_form(int s, int n, const std::string &variant, bool deriv, bool verify, const Config &cfg)
{
  ZetaFormSpec spec{s, n, parse_variant(variant), deriv};
  ConstantLinearForm f = zeta_form(spec);
  json out = to_json(spec, f);
  out["command"] = "zeta form";
  out["digits"] = cfg.digits;
  out["value"] = to_json(evaluate(f, cfg.digits));
  bool pass = true;
  if (verify) {
    BallReal direct = zeta_direct(spec, cfg.digits);
    out["direct"] = to_json(direct);
    pass = direct.overlaps(evaluate(f, cfg.digits));
  }
  out["pass"] = pass;
  return out;
}

json run_zeta_integrality(int s, int n)
{
  ZetaIntegralityReport rep = integrality_check(s, n);
  json out = to_json(rep);
  out["rows"] = out.at("entries");
  out.erase("entries");
  out["command"] = "zeta integrality";
  return out;
}

json run_zeta_asymptotics(int s, const Config &cfg)
{
  AsymptoticsResult a = asymptotics(s, cfg.digits);
  json out = to_json(a);
  out["command"] = "zeta asymptotics";
  out["pass"] = a.p_x0.contains_zero() && a.p_x0p.contains_zero();
  return out;
}

json run_theorem_table(int collection, int check_s, int check_n)
{
  json rows = json::array();
  bool pass = true;
  for (int c : {1, 2}) {
    if (collection != 0 && collection != c)
      continue;
    for (const auto &row : theorem_table(c)) {
      json r = to_json(row);
      if (check_s > 0 && 2 * row.m + 1 <= check_s) {
        Rational k = kappa_from_forms(check_s, check_n, row.m, c);
        r["from_forms"] = to_string(k);
        pass = pass && k == row.kappa;
      }
      rows.push_back(r);
    }
  }
  return {{"command", "zeta theorem-table"}, {"rows", rows}, {"pass", pass}};
}

// ---- selftest ----

json run_selftest(bool all, const std::vector<int> &which)
{
  std::vector<int> ids = which;
  if (all)
    for (int i = 1; i <= criterion_count(); ++i)
      ids.push_back(i);
  if (ids.empty())
    throw UsageError("selftest needs --all or --criterion K");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  json rows = json::array();
  bool pass = true;
  for (int id : ids) {
    if (id < 1 || id > criterion_count())
      throw UsageError("no criterion " + std::to_string(id));
    CriterionResult r = run_criterion(id);
    std::cerr << (r.pass ? "PASS " : "FAIL ") << id << " " << r.title << "\n";
    rows.push_back(to_json(r));
    pass = pass && r.pass;
  }
  return {{"command", "selftest"}, {"rows", rows}, {"pass", pass}};
}

long default_digits()
{
  const char *env = std::getenv("HYPERFORMS_DIGITS");
  if (!env || !*env)
    return 40;
  try {
    size_t used = 0;
    long v = std::stol(env, &used);
    if (used != std::string(env).size())
      throw std::invalid_argument(env);
    return v;
  } catch (const std::exception &) {
    throw UsageError(std::string("HYPERFORMS_DIGITS is not an integer: ") + env);
  }
}

} // namespace

int main(int argc, char **argv)
{
  Config cfg;
  try {
    cfg.digits = default_digits();
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Exact and certified computations with hypergeometric linear forms"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--digits", cfg.digits, "working precision in decimal digits (default 40 or HYPERFORMS_DIGITS)");
  app.add_option("--output", cfg.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));

  std::function<json()> action;

  ApproxArgs approx;
  auto *c_approx = app.add_subcommand("approx", "exact linear forms of a rational approximation family");
  c_approx->add_option("family", approx.family, "CATALAN_R, CATALAN_WT, LOG2_R, LOG2_WT or PI2_R")->required();
  c_approx->add_option("--n-range", approx.range, "index range A..B");
  c_approx->add_flag("--verify", approx.verify, "compare with the series and direct summation");
  c_approx->add_flag("--integrality", approx.integrality, "certify the integrality scaling");
  c_approx->add_flag("--recurrence", approx.recurrence, "fit a recurrence on the range");
  c_approx->add_option("--order", approx.order, "recurrence order");
  c_approx->add_option("--degree", approx.degree, "recurrence coefficient degree");
  c_approx->callback([&] { action = [&] { return run_approx(approx, cfg); }; });

  std::string id_name;
  std::map<std::string, std::string> id_values;
  auto *c_identity = app.add_subcommand("identity", "verify one hypergeometric identity at one point");
  c_identity->add_option("id", id_name, "identity name, e.g. TH_CAT or th-cat")->required();
  for (const auto &p : all_param_names())
    c_identity->add_option_function<std::string>("--" + p, [&id_values, p](const std::string &v) { id_values[p] = v; },
                                                 "parameter " + p);
  c_identity->callback([&] { action = [&] { return run_identity(id_name, id_values, cfg); }; });

  std::string sweep_name;
  int sweep_count = 20;
  std::uint64_t sweep_seed = 20240601;
  std::vector<std::string> sweep_ranges;
  auto *c_sweep = app.add_subcommand("sweep", "verify an identity at random admissible half-integer points");
  c_sweep->add_option("id", sweep_name, "identity name")->required();
  c_sweep->add_option("--count", sweep_count, "number of points")->check(CLI::PositiveNumber);
  c_sweep->add_option("--seed", sweep_seed, "sampler seed");
  c_sweep->add_option("--range", sweep_ranges, "override a parameter box: name=lo:hi[:step]");
  c_sweep->callback([&] { action = [&] { return run_sweep(sweep_name, sweep_count, sweep_seed, sweep_ranges, cfg); }; });

  std::string g_params, g_matrix;
  long g_n = 1;
  auto *c_group = app.add_subcommand("group", "the order-120 group acting on 3F2(1) parameter matrices");
  c_group->require_subcommand(1);
  auto *c_orbit = c_group->add_subcommand("orbit", "check the invariant over the orbit");
  auto *c_reps = c_group->add_subcommand("reps", "half-integer representatives");
  auto *c_records = c_group->add_subcommand("records", "the two record matrices");
  for (auto *c : {c_orbit, c_reps}) {
    c->add_option("--params", g_params, "a1,a2,a3,b2,b3");
    c->add_option("--matrix", g_matrix, "JSON object with keys c00..c33");
  }
  c_records->add_option("--n", g_n, "index n")->check(CLI::NonNegativeNumber);
  c_orbit->callback([&] { action = [&] { return run_group_orbit(matrix_input(g_params, g_matrix), cfg); }; });
  c_reps->callback([&] { action = [&] { return run_group_reps(matrix_input(g_params, g_matrix)); }; });
  c_records->callback([&] { action = [&] { return run_group_records(g_n); }; });

  int z_s = 8, z_n = 1, z_collection = 0, z_check_s = 0, z_check_n = 1;
  std::string z_variant = "R";
  bool z_deriv = false, z_verify = false;
  auto *c_zeta = app.add_subcommand("zeta", "linear forms in zeta values");
  c_zeta->require_subcommand(1);
  auto *c_zform = c_zeta->add_subcommand("form", "exact linear form");
  c_zform->add_option("--s", z_s, "even s >= 8");
  c_zform->add_option("--n", z_n, "index n")->check(CLI::NonNegativeNumber);
  c_zform->add_option("--variant", z_variant, "R or WT");
  c_zform->add_flag("--derivative", z_deriv, "use the derivative series");
  c_zform->add_flag("--verify", z_verify, "compare with direct summation");
  c_zform->callback([&] { action = [&] { return run_zeta_form(z_s, z_n, z_variant, z_deriv, z_verify, cfg); }; });
  auto *c_zint = c_zeta->add_subcommand("integrality", "denominator inclusions");
  c_zint->add_option("--s", z_s, "even s >= 8");
  c_zint->add_option("--n", z_n, "index n")->check(CLI::NonNegativeNumber);
  c_zint->callback([&] { action = [&] { return run_zeta_integrality(z_s, z_n); }; });
  auto asym_opts = [&](CLI::App *c) {
    c->add_option("--s", z_s, "even s >= 8");
    c->callback([&] { action = [&] { return run_zeta_asymptotics(z_s, cfg); }; });
  };
  asym_opts(c_zeta->add_subcommand("asymptotics", "certified roots and growth constants"));
  asym_opts(app.add_subcommand("asymptotics", "same as zeta asymptotics"));
  auto *c_table = c_zeta->add_subcommand("theorem-table", "coefficients of both collections");
  c_table->add_option("--collection", z_collection, "1 or 2 (default both)")->check(CLI::Range(0, 2));
  c_table->add_option("--check-s", z_check_s, "also read the coefficients off the forms at this s");
  c_table->add_option("--check-n", z_check_n, "index used with --check-s");
  c_table->callback([&] { action = [&] { return run_theorem_table(z_collection, z_check_s, z_check_n); }; });

  bool st_all = false;
  std::vector<int> st_ids;
  auto *c_self = app.add_subcommand("selftest", "run the numbered end-to-end checks");
  c_self->add_flag("--all", st_all, "run every check");
  c_self->add_option("--criterion", st_ids, "run selected checks");
  c_self->callback([&] { action = [&] { return run_selftest(st_all, st_ids); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e);
    app.exit(e, std::cout, std::cerr);
    return kExitUsage;
  }

  try {
    if (cfg.digits < 10)
      throw UsageError("--digits must be at least 10");
    json result = action();
    emit(result, cfg.format);
    return result.value("pass", false) ? kExitPass : kExitCheckFailed;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

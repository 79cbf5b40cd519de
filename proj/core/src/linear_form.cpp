#include "hyperforms/linear_form.hpp"

#include <regex>

namespace hyperforms {

std::string BasisLabel::name() const
{
  switch (kind) {
  case Kind::one:
    return "one";
  case Kind::catalan:
    return "G";
  case Kind::log2:
    return "log2";
  case Kind::pi:
    return index == 1 ? "pi" : "pi" + std::to_string(index);
  case Kind::zeta:
    return "zeta(" + std::to_string(index) + ")";
  case Kind::beta:
    return "beta(" + std::to_string(index) + ")";
  case Kind::euler_gamma:
    return "euler_gamma";
  }
  return "?";
}

BasisLabel BasisLabel::parse(const std::string &name)
{
  if (name == "one" || name == "1")
    return one();
  if (name == "G" || name == "catalan")
    return catalan();
  if (name == "log2")
    return log2();
  if (name == "euler_gamma")
    return euler_gamma();
  static const std::regex pi_re("pi([0-9]*)");
  static const std::regex fn_re("(zeta|beta)\\(([0-9]+)\\)");
  std::smatch m;
  if (std::regex_match(name, m, pi_re))
    return pi(m[1].length() ? std::stoi(m[1]) : 1);
  if (std::regex_match(name, m, fn_re)) {
    int s = std::stoi(m[2]);
    if (m[1] == "zeta" && s >= 2)
      return zeta(s);
    if (m[1] == "beta" && s >= 2 && s % 2 == 0)
      return beta(s);
  }
  throw DomainError("unknown basis label: " + name);
}

ConstantLinearForm::ConstantLinearForm(const BasisLabel &label, const Rational &coeff)
{
  add(label, coeff);
}

Rational ConstantLinearForm::coeff(const BasisLabel &label) const
{
  auto it = terms_.find(label);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ConstantLinearForm::add(const BasisLabel &label, const Rational &c)
{
  if (sgn(c) == 0)
    return;
  if (label.kind == BasisLabel::Kind::pi && label.index == 0) {
    add(BasisLabel::one(), c);
    return;
  }
  Rational &slot = terms_[label];
  slot += c;
  if (sgn(slot) == 0)
    terms_.erase(label);
}

std::vector<BasisLabel> ConstantLinearForm::support() const
{
  std::vector<BasisLabel> v;
  for (const auto &[k, c] : terms_)
    v.push_back(k);
  return v;
}

ConstantLinearForm ConstantLinearForm::operator+(const ConstantLinearForm &o) const
{
  ConstantLinearForm r = *this;
  for (const auto &[k, c] : o.terms_)
    r.add(k, c);
  return r;
}

ConstantLinearForm ConstantLinearForm::operator-(const ConstantLinearForm &o) const { return *this + (-o); }

ConstantLinearForm ConstantLinearForm::operator*(const Rational &s) const
{
  ConstantLinearForm r;
  for (const auto &[k, c] : terms_)
    r.add(k, c * s);
  return r;
}

ConstantLinearForm ConstantLinearForm::operator-() const { return *this * Rational(-1); }

bool ConstantLinearForm::operator==(const ConstantLinearForm &o) const
{
  return (*this - o).in_pi_basis().is_zero();
}

Rational zeta_even_over_pi(int two_m)
{
  if (two_m < 2 || two_m % 2)
    throw DomainError("zeta_even_over_pi: argument must be even and >= 2");
  const unsigned k = static_cast<unsigned>(two_m);
  Rational r = abs_of(bernoulli(k));
  Integer p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, k - 1);
  r *= Rational(p2);
  r /= Rational(factorial(k));
  return r;
}

ConstantLinearForm ConstantLinearForm::in_pi_basis() const
{
  ConstantLinearForm r;
  for (const auto &[k, c] : terms_) {
    if (k.kind == BasisLabel::Kind::zeta && k.index % 2 == 0)
      r.add(BasisLabel::pi(k.index), c * zeta_even_over_pi(k.index));
    else
      r.add(k, c);
  }
  return r;
}

ConstantLinearForm ConstantLinearForm::in_zeta_basis() const
{
  ConstantLinearForm r;
  for (const auto &[k, c] : terms_) {
    if (k.kind == BasisLabel::Kind::pi && k.index >= 2 && k.index % 2 == 0)
      r.add(BasisLabel::zeta(k.index), c / zeta_even_over_pi(k.index));
    else
      r.add(k, c);
  }
  return r;
}

std::string ConstantLinearForm::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string s;
  for (const auto &[k, c] : terms_) {
    if (!s.empty())
      s += " + ";
    s += "(" + hyperforms::to_string(c) + ")";
    if (k.kind != BasisLabel::Kind::one)
      s += "*" + k.name();
  }
  return s;
}

BallReal evaluate(const BasisLabel &label, long digits)
{
  switch (label.kind) {
  case BasisLabel::Kind::one:
    return BallReal(1, digits);
  case BasisLabel::Kind::catalan:
    return const_catalan(digits);
  case BasisLabel::Kind::log2:
    return const_log2(digits);
  case BasisLabel::Kind::pi:
    return pow_int(const_pi(digits + 5), label.index, digits);
  case BasisLabel::Kind::zeta:
    return const_zeta(static_cast<unsigned>(label.index), digits);
  case BasisLabel::Kind::beta:
    return const_beta_even(static_cast<unsigned>(label.index), digits);
  case BasisLabel::Kind::euler_gamma:
    return const_euler_gamma(digits);
  }
  throw DomainError("evaluate: bad label");
}

BallReal evaluate(const ConstantLinearForm &form, long digits)
{
  // guard digits against cancellation between large coefficients
  long guard = 10;
  for (const auto &[k, c] : form.terms()) {
    long bits = static_cast<long>(mpz_sizeinbase(c.get_num_mpz_t(), 2));
    guard = std::max(guard, bits * 3 / 10 + 10);
  }
  const long work = digits + guard;
  BallReal sum(0, work);
  for (const auto &[k, c] : form.terms())
    sum += BallReal(c, work) * evaluate(k, work);
  return sum.with_digits(digits);
}

nlohmann::json to_json(const ConstantLinearForm &form)
{
  nlohmann::json basis = nlohmann::json::array(), coeffs = nlohmann::json::array();
  for (const auto &[k, c] : form.terms()) {
    basis.push_back(k.name());
    coeffs.push_back(to_string(c));
  }
  return {{"basis", basis}, {"coeffs", coeffs}};
}

ConstantLinearForm form_from_json(const nlohmann::json &j)
{
  const auto &basis = j.at("basis");
  const auto &coeffs = j.at("coeffs");
  if (basis.size() != coeffs.size())
    throw DomainError("linear form JSON: basis and coeffs differ in length");
  ConstantLinearForm f;
  for (size_t i = 0; i < basis.size(); ++i)
    f.add(BasisLabel::parse(basis[i].get<std::string>()), parse_rational(coeffs[i].get<std::string>()));
  return f;
}

nlohmann::json to_json(const BallReal &x)
{
  return {{"mid", x.mid_string()}, {"rad", x.rad_string()}, {"digits", x.digits()}};
}

} // namespace hyperforms

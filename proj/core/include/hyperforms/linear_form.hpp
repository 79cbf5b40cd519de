#pragma once

#include "hyperforms/ball.hpp"
#include "hyperforms/exact.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hyperforms {

// Basis element of a linear form. pi carries a power, zeta and beta an argument.
struct BasisLabel {
  enum class Kind { one, catalan, log2, pi, zeta, beta, euler_gamma };
  Kind kind = Kind::one;
  int index = 0;

  static BasisLabel one() { return {Kind::one, 0}; }
  static BasisLabel catalan() { return {Kind::catalan, 0}; }
  static BasisLabel log2() { return {Kind::log2, 0}; }
  static BasisLabel pi(int power) { return {Kind::pi, power}; }
  static BasisLabel zeta(int s) { return {Kind::zeta, s}; }
  static BasisLabel beta(int s) { return {Kind::beta, s}; }
  static BasisLabel euler_gamma() { return {Kind::euler_gamma, 0}; }

  auto operator<=>(const BasisLabel &) const = default;

  // "one", "G", "log2", "pi", "pi2", "zeta(3)", "beta(4)", "euler_gamma"
  std::string name() const;
  static BasisLabel parse(const std::string &name);
};

class ConstantLinearForm {
public:
  ConstantLinearForm() = default;
  ConstantLinearForm(const BasisLabel &label, const Rational &coeff);
  static ConstantLinearForm constant(const Rational &c) { return {BasisLabel::one(), c}; }

  Rational coeff(const BasisLabel &label) const;
  void add(const BasisLabel &label, const Rational &c);
  const std::map<BasisLabel, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // labels with a nonzero coefficient
  std::vector<BasisLabel> support() const;

  ConstantLinearForm operator+(const ConstantLinearForm &o) const;
  ConstantLinearForm operator-(const ConstantLinearForm &o) const;
  ConstantLinearForm operator*(const Rational &s) const;
  ConstantLinearForm operator-() const;
  ConstantLinearForm &operator+=(const ConstantLinearForm &o) { return *this = *this + o; }
  // equal after rewriting even zeta values as powers of pi
  bool operator==(const ConstantLinearForm &o) const;

  // zeta(2m) -> q * pi^(2m)
  ConstantLinearForm in_pi_basis() const;
  // pi^(2m) -> q * zeta(2m) for m >= 1
  ConstantLinearForm in_zeta_basis() const;

  std::string to_string() const;

private:
  std::map<BasisLabel, Rational> terms_;
};

// zeta(2m) / pi^(2m)
Rational zeta_even_over_pi(int two_m);

BallReal evaluate(const BasisLabel &label, long digits);
BallReal evaluate(const ConstantLinearForm &form, long digits);

// {"basis": [...], "coeffs": ["num/den", ...]}
nlohmann::json to_json(const ConstantLinearForm &form);
ConstantLinearForm form_from_json(const nlohmann::json &j);
nlohmann::json to_json(const BallReal &x);

} // namespace hyperforms

#pragma once

#include "hyperforms/ball.hpp"
#include "hyperforms/hyper.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hyperforms {

// Slot order: c00, c11, c12, c13, c21, c22, c23, c31, c32, c33.
constexpr int kSlots = 10;
const std::array<std::string, kSlots> &slot_names();
int slot_index(int j, int k); // (0,0) or 1 <= j,k <= 3
int slot_index(const std::string &name);

struct ParamMatrix {
  std::array<Rational, kSlots> c;

  const Rational &at(int j, int k) const { return c[slot_index(j, k)]; }
  Rational &at(int j, int k) { return c[slot_index(j, k)]; }
  bool operator==(const ParamMatrix &o) const { return c == o.c; }
  bool operator<(const ParamMatrix &o) const { return c < o.c; }
};

// c00 = (b2+b3)-(a1+a2+a3)-1, c_j1 = a_j-1, c_jk = b_k-a_j-1 (k = 2,3)
ParamMatrix build_matrix(const Rational &a1, const Rational &a2, const Rational &a3, const Rational &b2,
                         const Rational &b3);
// True when the ten entries come from some (a, b) via build_matrix.
bool is_consistent(const ParamMatrix &m);
// a_j = c_j1+1, b_k = c_1k+a_1+1
PfqSpec matrix_series(const ParamMatrix &m);
ParamMatrix shifted(const ParamMatrix &m, const Rational &delta);

nlohmann::json to_json(const ParamMatrix &m);
ParamMatrix matrix_from_json(const nlohmann::json &j);
std::string to_string(const ParamMatrix &m);

// Slot permutation: the image matrix takes entry perm[i] of the source at slot i.
using GroupElement = std::array<int, kSlots>;

GroupElement identity_element();
GroupElement compose(const GroupElement &g, const GroupElement &h); // apply h, then g
ParamMatrix act(const GroupElement &g, const ParamMatrix &m);
// "a1", "a2", "b", "h"
GroupElement generator(const std::string &name);
const std::vector<GroupElement> &group_generators();
// closure of the generators, computed once; sorted
const std::vector<GroupElement> &generate_group();
std::vector<GroupElement> generate_subgroup(const std::vector<GroupElement> &gens);

// H(c) / (Gamma(c00+1) Gamma(c21+1) Gamma(c31+1) Gamma(c22+1) Gamma(c33+1))
//   = 3F2(a; b; 1) / (Gamma(b2) Gamma(b3) Gamma(c00+1)).
// Throws DomainError when the series is inadmissible for the engine.
BallReal invariant_value(const ParamMatrix &m, long digits);
std::optional<std::string> invariant_admissibility(const ParamMatrix &m);

struct OrbitMember {
  GroupElement element;
  ParamMatrix matrix;
  std::optional<BallReal> value; // empty when skipped
  std::string skip_reason;
};

struct OrbitReport {
  std::vector<OrbitMember> members;
  long evaluated = 0;
  long skipped = 0;
  bool pass = false; // all values mutually overlap with width <= 10^(5-digits)
};

OrbitReport orbit_invariant_check(const ParamMatrix &m, long digits, unsigned threads = 0);

// Entries (1,3), (2,3), (3,1), (3,2) in Z+1/2 and the other six in Z.
bool has_half_integer_pattern(const ParamMatrix &m);
// a1, a2, b2 in Z and a3, b3 in Z+1/2
bool satisfies_cond(const Rational &a1, const Rational &a2, const Rational &a3, const Rational &b2,
                    const Rational &b3);
// The five non-identity elements whose images keep the half-integer pattern, up to a1.
const std::vector<GroupElement> &pattern_representatives();
// identity, the five elements above and their a1-images
std::vector<GroupElement> half_integer_elements();
// Representatives of a matrix with the half-integer pattern; throws DomainError otherwise.
std::vector<ParamMatrix> classify_half_integer_reps(const ParamMatrix &m);
// Applies all 120 elements and keeps the distinct images with the pattern.
std::vector<ParamMatrix> brute_force_half_integer_reps(const ParamMatrix &m);

// The two record parameter choices (x, a, b) = (12n+1, 14n+1, 28n+2) and (14n+1, 12n+1, 28n+2),
// read as 2F1(x, a; b; -1) and moved to the 3F2(1) side; which = 1 or 2.
ParamMatrix record_matrix(long n, int which);
// Reference entries c+1 of the record matrices; the (3,2) entry carries a known misprint (one too small).
ParamMatrix reference_record_matrix(long n, int which);

} // namespace hyperforms

#pragma once

#include "hyperforms/ball.hpp"
#include "hyperforms/hyper.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyperforms {

enum class IdentityId { th_cat, th_ln2, th_pi2, eq_2n1_4n2, t3240, t7635, t7634, eq_3f2_7f6 };

// "TH_CAT", "TH_LN2", "TH_PI2", "EQ_2N1_4N2", "T3240", "T7635", "T7634", "EQ_3F2_7F6"
std::string identity_name(IdentityId id);
IdentityId parse_identity(const std::string &name);
const std::vector<IdentityId> &all_identities();
const std::vector<std::string> &identity_parameters(IdentityId id);

using ParamMap = std::map<std::string, Rational>;

class InadmissibleError : public DomainError {
public:
  using DomainError::DomainError;
};

// scalar * pi^(half_pi/2) * prod Gamma(num) / prod Gamma(den) * pFq
struct HyperSide {
  Rational scalar{1};
  long half_pi = 0;
  std::vector<Rational> gamma_num;
  std::vector<Rational> gamma_den;
  PfqSpec series;

  PiMonomial prefactor() const;
};

struct IdentitySides {
  HyperSide lhs;
  HyperSide rhs;
};

IdentitySides identity_sides(IdentityId id, const ParamMap &params);
// name of the first failed predicate, or nullopt when admissible
std::optional<std::string> admissibility_failure(IdentityId id, const ParamMap &params);

BallReal evaluate_side(const HyperSide &side, long digits);

struct IdentityReport {
  IdentityId id;
  ParamMap params;
  long digits = 0;
  BallReal lhs;
  BallReal rhs;
  bool pass = false; // overlap and both widths <= 10^(5-digits)
  std::string separation;
};

IdentityReport verify_identity(IdentityId id, const ParamMap &params, long digits);

struct ParamRange {
  Rational lo;
  Rational hi;
  Rational step{1, 2};
};

struct SweepResult {
  std::vector<IdentityReport> reports;
  long skipped = 0; // inadmissible or repeated samples
  long failures = 0;
};

// default sampling box for each identity (half-integer grid)
std::map<std::string, ParamRange> default_ranges(IdentityId id);
// Draws distinct admissible points until `count` are verified; seeded and deterministic.
SweepResult sweep(IdentityId id, const std::map<std::string, ParamRange> &ranges, int count, long digits,
                  std::uint64_t seed = 20240601);

// The proof chain T3240 -> T7635 -> T7634 -> T7635 at one point (a, b, c, d).
struct ChainReport {
  std::vector<IdentityReport> steps;
  IdentityReport direct;     // EQ_3F2_7F6 at the same point
  BallReal composed;         // product of the step prefactors times the last series
  bool prefactors_equal = false; // composed Gamma prefactor equals the direct one exactly
  bool pass = false;
};

ChainReport verify_pi2_chain(const ParamMap &abcd, long digits);

std::string params_to_string(const ParamMap &params);

} // namespace hyperforms

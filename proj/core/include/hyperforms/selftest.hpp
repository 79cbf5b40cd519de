#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace hyperforms {

// The numbered end-to-end checks shared by the CLI selftest and the acceptance binary.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

int criterion_count();
std::string criterion_title(int id);
CriterionResult run_criterion(int id);

// One property check of the well-poised symmetry lemma on `count` random symmetric functions.
struct LemmaSuiteResult {
  int trials = 0;
  int passed = 0;
  std::string first_failure;
};
LemmaSuiteResult lemma_property_suite(int count, unsigned long seed, long digits);

nlohmann::json to_json(const CriterionResult &r);

} // namespace hyperforms

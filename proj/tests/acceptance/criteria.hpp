#pragma once

#include <string>
#include <vector>

namespace recip::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // what was checked, or the first failure
};

CriterionResult reciprocity_positive();
CriterionResult reciprocity_negative();
CriterionResult oracle_equivalence();
CriterionResult cm_field_dependence();
CriterionResult separation_chain();
CriterionResult colon_identity();
CriterionResult lift_correctness();
CriterionResult boundary_inequality();
CriterionResult homology_engine();

/// All criteria in order.
std::vector<CriterionResult> run_all();

/// "PASS [3] name: detail"
std::string format(const CriterionResult& r);

}  // namespace recip::acceptance

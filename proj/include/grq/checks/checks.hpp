#pragma once

#include <string>
#include <vector>

#include "grq/grmod/json.hpp"

namespace grq {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// the twelve acceptance criteria, numbered 1..12
std::vector<int> suite_ids(const std::string& suite);  // core, schur, borel, all
std::string check_name(int id);
CheckResult run_check(int id, unsigned p);
std::vector<CheckResult> run_suite(const std::string& suite, unsigned p);
ojson results_to_json(const std::vector<CheckResult>& r);

// non-semisimple block count predicted by the shift-counting argument
int expected_non_semisimple_blocks(unsigned p, int d);

}  // namespace grq

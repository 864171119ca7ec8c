#pragma once

// The acceptance suite: each claim recomputed from scratch and reported.

#include <functional>
#include <string>
#include <vector>

#include "antimagic/labeling.hpp"
#include "antimagic/oracle.hpp"

namespace antimagic {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::Fail;
  std::string detail;  // first failure, skip reason or summary
  double seconds = 0.0;
};

struct ReproduceOptions {
  // Labeling used for the plain cycle claim; swapped out in fault-injection tests.
  std::function<EdgeLabeling(int)> cycle_labeler;
  SearchBudget budget = SearchBudget::from_env();
  std::string golden_dir;  // empty: the source tree's tests/golden
  std::vector<int> only;   // empty: all criteria
  bool parallel = false;
};

std::vector<CriterionResult> reproduce_all(const ReproduceOptions& options = {});

// Skipped criteria do not count as failures.
bool all_passed(const std::vector<CriterionResult>& results);

std::string render_report(const std::vector<CriterionResult>& results);

}  // namespace antimagic

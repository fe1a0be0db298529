#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsym {

// Identity fixtures compiled into the library.
std::string_view rwel23_identity_text();
std::string_view row_column_identity_text();

struct SuiteOptions {
  bool extended = false;          // adds n = 6 to the Groebner check
  std::optional<int> extra_size;  // also run the per-size checks at this n
  unsigned jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool within_budget = true;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
};

constexpr int kCriterionCount = 11;

class AcceptanceSuite {
 public:
  explicit AcceptanceSuite(SuiteOptions options);
  ~AcceptanceSuite();
  AcceptanceSuite(const AcceptanceSuite&) = delete;
  AcceptanceSuite& operator=(const AcceptanceSuite&) = delete;

  // id in [1, kCriterionCount]; throws InvalidArgument otherwise.
  CriterionResult run(int id);
  std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {});

 private:
  struct State;
  std::unique_ptr<State> state_;
};

// "criterion 3: PASS  [1.2 s / 600 s] title: detail"
std::string format_result(const CriterionResult& r);

}  // namespace qsym

// Prints one line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "qsym/error.hpp"
#include "qsym/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qsym acceptance battery"};
  int criterion = 0;
  bool extended = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--criterion", criterion, "criterion 1..11, 0 for all")->check(CLI::Range(0, qsym::kCriterionCount));
  app.add_flag("--extended", extended, "include n = 6 in the Groebner check");
  app.add_option("--jobs", jobs, "worker threads")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  qsym::SuiteOptions options;
  options.extended = extended;
  options.jobs = jobs;
  qsym::AcceptanceSuite suite(options);
  bool ok = true;
  auto print = [&](const qsym::CriterionResult& r) {
    std::cout << qsym::format_result(r) << std::endl;
    ok = ok && r.passed;
  };
  try {
    if (criterion == 0)
      suite.run_all(print);
    else
      print(suite.run(criterion));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return ok ? 0 : 1;
}

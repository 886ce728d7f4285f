// Runs every verification suite and prints one line per acceptance criterion.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "agt/report.hpp"

using namespace agt;

int main(int argc, char** argv) {
  VerifyConfig config;
  std::string out_path = "acceptance_report.json";
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--seed") {
      config.seed = std::stoull(argv[i + 1]);
    } else if (flag == "--jobs") {
      config.jobs = std::stoi(argv[i + 1]);
    } else if (flag == "--out") {
      out_path = argv[i + 1];
    } else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }
  register_standard_variables();

  std::vector<SuiteResult> results = verify_all(config);
  std::map<int, std::vector<const SuiteResult*>> by_criterion;
  for (const auto& r : results) by_criterion[r.criterion].push_back(&r);

  bool all = true;
  for (int c = 1; c <= 13; ++c) {
    bool pass = by_criterion.count(c) > 0;
    std::string text;
    for (const auto* r : by_criterion[c]) {
      pass = pass && r->pass;
      if (!text.empty()) text += " | ";
      text += r->name + ": " + r->summary;
    }
    all = all && pass;
    std::cout << "criterion " << c << ": " << (pass ? "PASS" : "FAIL") << " - " << text << "\n";
  }

  std::ofstream(out_path) << verify_report(results, config).dump(2) << "\n";
  std::cout << (all ? "all criteria pass" : "some criteria fail") << "; report written to " << out_path << "\n";
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}

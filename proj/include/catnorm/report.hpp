#pragma once

#include <string>
#include <vector>

namespace catnorm {

struct CaseResult {
  std::string id;
  bool pass = true;
  std::string witness;
};

/// Per-case verdicts of a certification run, in a stable order.
struct Report {
  std::string name;
  std::string bound;  // what the run was certified against
  std::vector<CaseResult> cases;

  void add(std::string id, bool pass, std::string witness = {}) {
    cases.push_back({std::move(id), pass, std::move(witness)});
  }
  void append(Report const& other) {
    cases.insert(cases.end(), other.cases.begin(), other.cases.end());
  }
  int passed() const {
    int n = 0;
    for (auto const& c : cases) n += c.pass;
    return n;
  }
  int failed() const { return static_cast<int>(cases.size()) - passed(); }
  bool ok() const { return failed() == 0; }
};

}  // namespace catnorm

#pragma once

#include <string>
#include <vector>

namespace affschur {

// Tally of a family of exact checks.
struct CheckReport {
  std::string name;
  long checked = 0;
  long passed = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok)
      ++passed;
    else
      failures.push_back(what);
  }
  long failed() const { return checked - passed; }
  bool ok() const { return checked == passed; }

  void merge(const CheckReport& o) {
    checked += o.checked;
    passed += o.passed;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

}  // namespace affschur

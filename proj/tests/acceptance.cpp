// Prints one PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.
// AFFSCHUR_WORKERS sets the thread count of the oracle comparison.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "affschur/errors.hpp"
#include "affschur/oracle.hpp"
#include "affschur/schur.hpp"
#include "affschur/suites.hpp"

using namespace affschur;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string summary(const SuiteResult& r) {
  std::ostringstream s;
  s << r.name << " " << r.passed() << "/" << r.checked();
  for (const auto& [k, v] : r.stats) s << " " << k << "=" << v;
  for (const auto& p : r.parts)
    if (!p.failures.empty()) s << " | " << p.name << ": " << p.failures.front();
  return s.str();
}

Outcome from_suites(const std::vector<SuiteResult>& rs) {
  Outcome o{true, ""};
  for (const auto& r : rs) {
    o.ok = o.ok && r.ok() && r.checked() > 0;
    o.detail += (o.detail.empty() ? "" : "; ") + summary(r);
  }
  return o;
}

int workers() {
  const char* s = std::getenv("AFFSCHUR_WORKERS");
  const int w = s ? std::atoi(s) : 1;
  return w > 0 ? w : 1;
}

PeriodicMatrix m2(std::vector<std::tuple<long, long, long>> e) { return PeriodicMatrix(2, e); }

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 oracle equivalence",
       [] {
         std::vector<SuiteResult> rs;
         for (auto [n, r] : std::vector<std::pair<int, long>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}})
           rs.push_back(suite_oracle(n, r, 3, workers()));
         return from_suites(rs);
       }},
      {"2 fundamental formula spot value",
       [] {
         const PeriodicMatrix b = m2({{1, 2, 1}, {1, 1, 2}});
         const PeriodicMatrix a = m2({{1, 2, 1}, {1, 1, 1}, {2, 2, 1}});
         SchurElement want(2, 3);
         want.add_checked(m2({{1, 2, 2}, {1, 1, 1}}), 2);
         const SchurElement got = mul_ss_upper(b, std_basis(a, 3));
         const SchurElement orc = oracle_mul(b, a);
         return Outcome{got == want && orc == want, "mul_ss_upper = " + got.str() + ", oracle = " + orc.str()};
       }},
      {"3 stabilization",
       [] { return from_suites({suite_stabilization(2, 50, 2, 2, 5, 20260101)}); }},
      {"4 loop-algebra relations",
       [] { return from_suites({suite_relations(2, 4), suite_relations(3, 4)}); }},
      {"5 triangular basis", [] { return from_suites({suite_triangular(2, 3, 2)}); }},
      {"6 integral surjectivity",
       [] { return from_suites({suite_surjectivity(2, 2, 3), suite_surjectivity(2, 3, 3)}); }},
      {"7 homomorphism and structure properties", [] { return from_suites({suite_properties(100, 7)}); }},
      {"8 coproduct", [] { return from_suites({suite_coproduct(2, 3, 3), suite_coproduct(3, 3, 3)}); }},
  };

  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const AlgebraError& e) {
      o = {false, e.code() + ": " + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << secs << " s)  " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}

// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each criterion reruns the corresponding registered checks with pinned
// tolerances (the tolerances live next to the checks in harness.hpp) and a
// wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gab/harness.hpp"

namespace {

struct Criterion {
  std::string name;
  std::string description;
  double budget_s;
  std::function<std::vector<gab::ReportRow>()> run;
  // which rows of the produced report belong to this criterion
  std::function<bool(const gab::ReportRow&)> select = [](const gab::ReportRow&) { return true; };
};

bool has_prefix(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

int main() {
  using gab::CaseSpec;
  using gab::ReportRow;

  auto by_case = [](const char* id) {
    return [id] {
      CaseSpec spec;
      spec.id = id;
      return gab::run_case(spec);
    };
  };

  std::vector<Criterion> criteria = {
      {"AC1", "difference basis: exact two-sided equalities for K, L, Ltilde up to N=16", 5.0,
       by_case("diff-basis"),
       [](const ReportRow& r) {
         return has_prefix(r.check, "K-upper") || has_prefix(r.check, "L-upper") ||
                has_prefix(r.check, "Ltilde-upper") || has_prefix(r.check, "L-lower") ||
                has_prefix(r.check, "Ltilde-lower");
       }},
      {"AC2", "difference basis: brute-force window democracy and dual democracy", 30.0,
       by_case("diff-basis"),
       [](const ReportRow& r) {
         return has_prefix(r.check, "democracy") || has_prefix(r.check, "dual-democracy");
       }},
      {"AC3", "lindenstrauss basis: democracy, dual sums, and the log-rate band", 60.0,
       by_case("lindenstrauss")},
      {"AC4", "kt(2,2): witness norm, projection ratio band, direct conditionality cap", 30.0,
       by_case("kt"),
       [](const ReportRow& r) {
         return has_prefix(r.check, "witness-norm") || has_prefix(r.check, "projection-ratio") ||
                has_prefix(r.check, "K-direct");
       }},
      {"AC5", "kt(1,2): block witness with unit partial-sum norm and greedy blow-up n+1", 30.0,
       by_case("kt"),
       [](const ReportRow& r) {
         return has_prefix(r.check, "b1-norm") || has_prefix(r.check, "greedy-b1");
       }},
      {"AC6", "trigonometric system: quadrature norm bands and tensor-rate cap", 60.0,
       by_case("trig")},
      {"AC7", "blocks space: democracy cap, exact witness ratios, Lebesgue cap", 30.0,
       by_case("blocks")},
      {"AC8", "weight calculus: transform identities, equivalences, chain, dilation", 10.0,
       by_case("weight-calculus")},
      {"AC9", "embedding and duality property suites on truncation 64", 30.0,
       by_case("embedding-duality")},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t total = 0, passed = 0;
    std::string verdict = "pass";
    try {
      for (auto& row : c.run()) {
        if (!c.select(row)) continue;
        ++total;
        if (row.status == "pass" || row.status == "conditional") ++passed;
      }
      if (total == 0 || passed != total) verdict = "FAIL";
    } catch (const std::exception& e) {
      verdict = std::string("FAIL (") + e.what() + ")";
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) verdict = "FAIL (over time budget)";
    if (verdict != "pass") ++failures;
    std::printf("%s %-74s %3zu/%3zu checks  %6.2fs  %s\n", c.name.c_str(),
                c.description.c_str(), passed, total, secs, verdict.c_str());
  }
  return failures == 0 ? 0 : 1;
}

// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails or overruns its limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hexaframe/lemmas.hpp"
#include "hexaframe/parallel.hpp"

using namespace hexaframe;

namespace {

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // <= 0: no enforced limit
  std::function<std::vector<CheckReport>()> run;
};

std::string summarize(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    if (!out.empty()) out += "; ";
    out += r.id + " " + std::to_string(r.cases) + " cases";
    if (r.expected_negatives) out += ", " + std::to_string(r.expected_negatives) + " expected negatives";
    if (!r.passed()) out += ", " + std::to_string(r.failures.size()) + " failures";
  }
  return out;
}

}  // namespace

int main() {
  const int workers = default_workers();
  CheckOptions opt;
  opt.workers = workers;

  const std::vector<Criterion> criteria = {
      {1, "structural counts", 1.0, [] { return std::vector{check_structure()}; }},
      {2, "435 pair lemmas", 1.0, [] { return std::vector{check_pair_lemmas()}; }},
      {3, "tableau and S6 equivariance", 5.0, [] { return std::vector{check_tableau()}; }},
      {4, "outer automorphism", 1.0, [] { return std::vector{check_outer_automorphism()}; }},
      {5, "23-cube blocking family", 30.0, [] { return std::vector{check_counterexample_23()}; }},
      {6, "pentad-four and opposite-pair family", 60.0,
       [] { return std::vector{check_pentad_four(), check_opposite_pair_family()}; }},
      {7, "ten varieties (long)", 0.0, [&] { return std::vector{check_ten_varieties(opt)}; }},
      {8, "computed cases (long)", 3600.0, [&] { return std::vector{check_computed_cases(opt)}; }},
      {9, "fuzzed guarantees", 600.0,
       [&] {
         std::vector<CheckReport> out;
         for (int n = 2; n <= 10; ++n) out.push_back(fuzz_guarantees(n, n <= 3 ? 10000 : 2000, 1, workers));
         return out;
       }},
      {10, "variety counts", 10.0, [] { return std::vector{check_variety_counts()}; }},
      {11, "mutation detection", 30.0, [] { return std::vector{check_mutation_detection(1000, 1)}; }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckReport> reports;
    std::string error;
    try {
      reports = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty();
    for (const auto& r : reports) ok &= r.passed();
    const bool in_time = c.limit_seconds <= 0 || secs <= c.limit_seconds;
    ok &= in_time;
    if (!ok) ++failed;

    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.number << " " << (ok ? "PASS" : "FAIL") << "  " << c.name << "  [" << timing
              << "]  " << (error.empty() ? summarize(reports) : "exception: " + error) << '\n';
    if (!in_time) std::cout << "    over the time limit\n";
    for (const auto& r : reports) {
      for (const auto& note : r.notes) std::cout << "    " << r.id << ": " << note << '\n';
      int shown = 0;
      for (const auto& f : r.failures) {
        if (shown++ == 5) break;
        std::cout << "    " << r.id << " failure: " << f.reason << '\n';
      }
    }
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
  return failed ? 1 : 0;
}

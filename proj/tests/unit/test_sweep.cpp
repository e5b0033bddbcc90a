#include <algorithm>
#include <set>

#include "doctest.h"
#include "hexaframe/matching.hpp"
#include "hexaframe/sweep.hpp"
#include "hexaframe/tableau.hpp"

using namespace hexaframe;

namespace {

// Brute-force oracle: enumerate every multiset of the shape directly.
void enumerate(const std::vector<ShapeGroup>& groups, std::size_t g, std::vector<bool>& taken,
               CubeMultiset& cur, std::vector<CubeMultiset>& out, int start = 0, int left = -1) {
  if (g == groups.size()) {
    out.push_back(cur);
    return;
  }
  if (left < 0) left = groups[g].size;
  if (left == 0) {
    enumerate(groups, g + 1, taken, cur, out);
    return;
  }
  for (int v = start; v < kNumVarieties; ++v) {
    if (taken[v]) continue;
    taken[v] = true;
    cur.add(Variety(v), groups[g].repetition);
    enumerate(groups, g, taken, cur, out, v + 1, left - 1);
    cur.remove(Variety(v), groups[g].repetition);
    taken[v] = false;
  }
}

std::vector<CubeMultiset> failing(const std::vector<ShapeGroup>& groups) {
  std::vector<bool> taken(kNumVarieties, false);
  CubeMultiset cur;
  std::vector<CubeMultiset> all, bad;
  enumerate(groups, 0, taken, cur, all);
  for (const auto& s : all)
    if (!find_corner_solution(s)) bad.push_back(s);
  std::sort(bad.begin(), bad.end());
  return bad;
}

}  // namespace

TEST_CASE("shape totals and case counts") {
  CHECK(shape_total({{4, 2}, {2, 4}}) == 16);
  SweepSpec spec;
  spec.groups = {{4, 2}, {2, 4}};
  CHECK(shape_case_count(spec) == binomial(30, 2) * binomial(28, 4));
  spec.fixed = {Variety(0)};
  CHECK(shape_case_count(spec) == 29 * binomial(28, 4));
}

TEST_CASE("sweep matches brute force with and without pruning") {
  for (const auto& groups : std::vector<std::vector<ShapeGroup>>{{{4, 1}, {2, 2}}, {{2, 4}}, {{3, 2}, {2, 1}}, {{5, 1}, {1, 3}}}) {
    const auto oracle = failing(groups);
    for (bool prune : {false, true}) {
      SweepSpec spec;
      spec.groups = groups;
      spec.prune_solvable_prefixes = prune;
      spec.failure_limit = 1u << 20;
      const auto r = run_sweep(spec);
      CHECK(r.cases == shape_case_count(spec));
      CHECK(r.failure_count == oracle.size());
      CHECK(r.failures == oracle);
    }
  }
}

TEST_CASE("worker count does not change results") {
  SweepSpec spec;
  spec.groups = {{2, 2}, {1, 4}};
  spec.workers = 1;
  const auto one = run_sweep(spec);
  spec.workers = 3;
  const auto three = run_sweep(spec);
  CHECK(one.cases == three.cases);
  CHECK(one.failure_count == three.failure_count);
  CHECK(one.failures == three.failures);

  spec.stop_at_first_failure = true;
  spec.workers = 1;
  const auto first1 = run_sweep(spec);
  spec.workers = 3;
  const auto first3 = run_sweep(spec);
  REQUIRE(one.failure_count > 0);
  CHECK(first1.stopped_early);
  CHECK(first1.failures == first3.failures);
  CHECK(first1.failures.size() == 1);
}

TEST_CASE("stabilizer reduction covers every orbit") {
  // Orbits of all failing multisets of shape 7^1 3^2 must all meet the
  // reduced sweep's failures.
  const std::vector<ShapeGroup> groups{{7, 1}, {3, 2}};
  const auto oracle = failing(groups);
  SweepSpec spec;
  spec.groups = groups;
  spec.fixed = {tableau().cell(0, 1)};
  spec.stabilizer_reduction = true;
  spec.failure_limit = 1u << 20;
  const auto reduced = run_sweep(spec);
  CHECK(reduced.cases < shape_case_count(spec));

  std::set<CubeMultiset> closure;
  for (const auto& s : reduced.failures)
    for (const auto& p : symmetric_group()) closure.insert(act_on_multiset(p, s));
  CHECK(std::vector<CubeMultiset>(closure.begin(), closure.end()) == oracle);
}

TEST_CASE("sweep spec errors") {
  SweepSpec spec;
  spec.groups = {{2, 1}};
  spec.stabilizer_reduction = true;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "hexaframe/lemmas.hpp"
#include "hexaframe/matching.hpp"
#include "hexaframe/random.hpp"

using namespace hexaframe;

TEST_CASE("partitions of 24") {
  const auto all = partitions(24, 24);
  CHECK(all.size() == 1575);
  for (const auto& p : all) {
    CHECK(std::accumulate(p.begin(), p.end(), 0) == 24);
    CHECK(std::is_sorted(p.rbegin(), p.rend()));
  }
  CHECK(partitions(5, 2).size() == 3);
  CHECK(partitions(0, 3).size() == 1);
}

TEST_CASE("shape of a partition") {
  const auto g = shape_of({7, 5, 5, 5, 1, 1});
  REQUIRE(g.size() == 3);
  CHECK(g[0].repetition == 7);
  CHECK(g[0].size == 1);
  CHECK(g[1].repetition == 5);
  CHECK(g[1].size == 3);
  CHECK(g[2].repetition == 1);
  CHECK(g[2].size == 2);
  CHECK(shape_total(g) == 24);
  CHECK_THROWS_AS(shape_of({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(shape_of({2, 0}), std::invalid_argument);
}

TEST_CASE("fast checks pass") {
  for (auto* check : {check_structure, check_pair_lemmas, check_tableau, check_counterexample_23,
                      check_pentad_four, check_variety_counts}) {
    const auto r = check();
    CHECK_MESSAGE(r.passed(), r.id);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("the 23-cube family") {
  const auto family = counterexample_23_family();
  CHECK(family.size() == 120);
  for (const auto& s : family) {
    CHECK(s.total() == 23);
    CHECK(s.distinct() == 5);
    CHECK_FALSE(find_corner_solution(s).has_value());
    for (const auto& v : Variety::all()) {
      auto t = s;
      t.add(v);
      CHECK(find_corner_solution(t).has_value());
    }
  }
}

TEST_CASE("pentad variety sets") {
  const auto sets = pentad_variety_sets();
  CHECK(sets.size() == 12);
  std::array<int, kNumVarieties> seen{};
  for (const auto& row : sets)
    for (const auto& v : row) ++seen[v.index()];
  for (int n : seen) CHECK(n == 2);
  // Members of one row or column share no corner triple.
  for (const auto& row : sets)
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t j = i + 1; j < row.size(); ++j) CHECK(shared_stats(row[i], row[j]).corners == 0);
}

TEST_CASE("fuzz is deterministic and seed sensitive") {
  const auto a = fuzz_guarantees(3, 200, 7);
  const auto b = fuzz_guarantees(3, 200, 7, 3);
  CHECK(a.passed());
  CHECK(a.cases == b.cases);
  CHECK(a.notes == b.notes);
  CHECK(fuzz_guarantees(2, 100, 8).passed());
}

TEST_CASE("mutations are all rejected") {
  const auto r = check_mutation_detection(200, 5);
  CHECK(r.passed());
  CHECK(r.cases == 200);
}

TEST_CASE("random multisets") {
  Rng a(9, 4), b(9, 4), c(9, 5);
  CHECK(a.next() == b.next());
  CHECK(a.next() != c.next());
  Rng rng(10);
  std::array<int, kNumVarieties> hits{};
  for (int trial = 0; trial < 3000; ++trial) {
    const auto s = random_multiset(24, rng);
    CHECK(s.total() == 24);
    for (int v = 0; v < kNumVarieties; ++v) hits[v] += s.count(Variety(v));
    const auto t = random_clustered_multiset(24, 3, rng);
    CHECK(t.total() == 24);
    CHECK(t.distinct() <= 3);
  }
  // Each variety expects 3000 * 24 / 30 = 2400 copies.
  for (int h : hits) {
    CHECK(h > 2000);
    CHECK(h < 2800);
  }
  for (int i = 0; i < 1000; ++i) CHECK(rng.below(7) < 7);
}

TEST_CASE("check registry") {
  std::vector<std::string> ids;
  for (const auto& c : check_registry()) ids.push_back(c.id);
  for (const char* id : {"structure", "pair-lemmas", "tableau", "outer-automorphism", "ten-varieties",
                         "computed-cases", "fuzz", "mutations", "counts"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK_THROWS(run_check("no-such-check", {}));
}

#include <algorithm>
#include <set>

#include "doctest.h"
#include "hexaframe/matching.hpp"
#include "hexaframe/random.hpp"

using namespace hexaframe;

namespace {

// Depth-first search over the eight slots; no matching theory involved.
bool brute_force(const CubeMultiset& s, Variety model) {
  CubeMultiset::Counts left = s.counts();
  auto rec = [&](auto& self, int slot) -> bool {
    if (slot == kNumCorners) return true;
    const auto need = model.corner_at(slot);
    for (const auto& v : Variety::all()) {
      if (left[v.index()] == 0 || !v.has_corner(need)) continue;
      --left[v.index()];
      const bool ok = self(self, slot + 1);
      ++left[v.index()];
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

CubeMultiset random_small(Rng& rng) {
  const int distinct = 1 + static_cast<int>(rng.below(9));
  const int total = 8 + static_cast<int>(rng.below(8));
  return random_clustered_multiset(total, distinct, rng);
}

}  // namespace

TEST_CASE("cube-corner graph is 8-regular on varieties and 6-regular on triples") {
  const auto& g = cube_corner_graph();
  CHECK(g.edge_count() == 240);
  for (const auto& v : Variety::all()) {
    CHECK(g.degree(v) == 8);
    CHECK(g.triples_of[v.index()] == v.corner_mask());
  }
  for (int t = 0; t < kNumCornerTriples; ++t) {
    CHECK(g.degree_of_triple(t) == 6);
    for (const auto& v : Variety::all())
      CHECK(((g.owners_of[t] >> v.index()) & 1) == v.has_corner(CornerTriple::from_index(t)));
  }
}

TEST_CASE("corner requirements read the model's own corners") {
  for (const auto& m : Variety::all()) {
    const auto req = corner_requirements(m);
    for (int k = 0; k < kNumCorners; ++k) {
      CHECK(req[k].slot == k);
      CHECK(req[k].required == corner_triple_at(m.canonical(), k));
    }
  }
}

TEST_CASE("eight copies of a variety form a corner solution on it") {
  for (const auto& v : Variety::all()) {
    const CubeMultiset s{{v, 8}};
    const auto a = corner_matching(s, v);
    REQUIRE(a.has_value());
    CHECK(is_valid_corner_assignment(*a, s));
    CHECK_FALSE(corner_matching(CubeMultiset{{v, 7}}, v).has_value());
    CHECK_FALSE(corner_matching(s, mirror(v)).has_value());
  }
}

TEST_CASE("flow matching, bitmask kernel and brute force agree") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_small(rng);
    const auto packed = corner_kernel::pack(s);
    const auto u = corner_kernel::corner_union(packed);
    int first = -1;
    for (const auto& m : Variety::all()) {
      const auto a = corner_matching(s, m);
      const bool bf = brute_force(s, m);
      CHECK(a.has_value() == bf);
      CHECK(corner_kernel::feasible(packed, u, m.index()) == bf);
      if (a) {
        CHECK(a->model == m);
        CHECK(is_valid_corner_assignment(*a, s));
        CHECK(s.contains(a->used()));
      }
      if (bf && first < 0) first = m.index();
    }
    CHECK(corner_kernel::first_model(packed) == first);
    const auto sol = find_corner_solution(s);
    CHECK(sol.has_value() == (first >= 0));
    if (sol) CHECK(sol->model.index() == first);
  }
}

TEST_CASE("corner matching is deterministic") {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_multiset(24, rng);
    const auto a = find_corner_solution(s), b = find_corner_solution(s);
    REQUIRE(a.has_value());
    CHECK(a->model == b->model);
    CHECK(a->picks == b->picks);
  }
}

TEST_CASE("invalid assignments are rejected") {
  const Variety v(0);
  const CubeMultiset s{{v, 8}};
  auto a = *corner_matching(s, v);
  CHECK(is_valid_corner_assignment(a, s));
  CHECK_FALSE(is_valid_corner_assignment(a, CubeMultiset{{v, 7}}));
  a.picks[3] = mirror(v);
  CHECK_FALSE(is_valid_corner_assignment(a, s + CubeMultiset{{mirror(v), 1}}));
}

TEST_CASE("solvability is monotone and invariant under recoloring") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_small(rng);
    const bool before = find_corner_solution(s).has_value();
    const auto pi = random_color_permutation(rng);
    CHECK(find_corner_solution(act_on_multiset(pi, s)).has_value() == before);
    s.add(Variety(static_cast<int>(rng.below(30))));
    if (before) CHECK(find_corner_solution(s).has_value());
  }
}

TEST_CASE("counts above eight are clamped without changing the answer") {
  const Variety v(3);
  CubeMultiset s{{v, 20}};
  CHECK(corner_kernel::pack(s)[v.index()] == 8);
  CHECK(corner_kernel::first_model(corner_kernel::pack(s)) == v.index());
}

TEST_CASE("pinned subsets") {
  const PinnedSubsets ten(10, {{0, 1}, {0, 2}});
  CHECK(ten.size() == 3108105);
  CHECK(ten.pinned().size() == 2);
  CHECK(ten.free_pool().size() == 28);
  CHECK(ten.branch_count() == 21);

  const PinnedSubsets small(4, {{0, 1}});
  std::uint64_t n = 0;
  std::set<std::vector<Variety>> seen;
  small.for_each([&](std::span<const Variety> vs) {
    ++n;
    CHECK(vs.size() == 4);
    CHECK(std::find(vs.begin(), vs.end(), tableau().cell(0, 1)) != vs.end());
    seen.insert(std::vector<Variety>(vs.begin(), vs.end()));
  });
  CHECK(n == small.size());
  CHECK(n == binomial(29, 3));
  CHECK(seen.size() == n);

  const PinnedSubsets empty(0, {});
  CHECK(empty.size() == 0);
  int calls = 0;
  empty.for_each([&](std::span<const Variety>) { ++calls; });
  CHECK(calls == 0);

  const PinnedSubsets all_pinned(2, {{0, 1}, {1, 0}});
  CHECK(all_pinned.size() == 1);
  CHECK(all_pinned.branch_count() == 1);

  CHECK_THROWS_AS(PinnedSubsets(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PinnedSubsets(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PinnedSubsets(1, {{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PinnedSubsets(31, {}), std::invalid_argument);
}

TEST_CASE("binomial") {
  CHECK(binomial(28, 8) == 3108105);
  CHECK(binomial(30, 10) == 30045015);
  CHECK(binomial(20, 5) == 15504);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
}

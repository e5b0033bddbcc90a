#include <algorithm>
#include <set>

#include "doctest.h"
#include "hexaframe/random.hpp"
#include "hexaframe/tableau.hpp"

using namespace hexaframe;

TEST_CASE("cycle notation parses and prints") {
  CHECK(parse_cycles("()").is_identity());
  const auto t = parse_cycles("(1 2)");
  CHECK(t(0) == 1);
  CHECK(t(1) == 0);
  CHECK(parse_cycles("(1,2,3)") == parse_cycles("(1 2 3)"));
  CHECK(to_cycle_string(parse_cycles("(3 1)(5 6)")) == "(1 3)(5 6)");
  CHECK(cycle_type_string(parse_cycles("(1 2 3 4 5 6)").cycle_type()) == "6");
  CHECK(cycle_type_string(ColorPermutation{}.cycle_type()) == "1");
  CHECK(cycle_type_string(parse_cycles("(1 2)(3 4)").cycle_type()) == "2+2");
  for (const char* bad : {"", "(1 2", "(1 7)", "(1 1)", "(1 2)(2 3)", "12", "(a b)"})
    CHECK_THROWS_AS(parse_cycles(bad), std::invalid_argument);
  for (const auto& p : symmetric_group()) CHECK(parse_cycles(to_cycle_string(p)) == p);
}

TEST_CASE("symmetric group: 720, lexicographic, indexable") {
  const auto g = symmetric_group();
  REQUIRE(g.size() == 720);
  CHECK(g[0].is_identity());
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(s6_index(g[i]) == static_cast<int>(i));
    if (i) CHECK(g[i - 1] < g[i]);
  }
}

TEST_CASE("pentads: six, pairwise sharing one syntheme, each syntheme twice") {
  const auto ps = pentads();
  REQUIRE(ps.size() == 6);
  std::array<int, 15> incidence{};
  for (const auto& p : ps) {
    DuadMask cover = 0;
    for (int s : p.synthemes) {
      ++incidence[s];
      CHECK((cover & all_synthemes()[s].mask()) == 0);
      cover |= all_synthemes()[s].mask();
    }
    CHECK(cover == 0x7fff);
  }
  for (int n : incidence) CHECK(n == 2);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      CHECK(std::popcount(static_cast<unsigned>(ps[a].mask() & ps[b].mask())) == 1);
      CHECK(ps[a].contains(shared_syntheme(a, b)));
      CHECK(ps[b].contains(shared_syntheme(a, b)));
    }
}

TEST_CASE("variety action matches recoloring and composes") {
  const auto& table = variety_action_table();
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto pi = random_color_permutation(rng);
    const auto rho = random_color_permutation(rng);
    const Variety v(static_cast<int>(rng.below(30)));
    CHECK(act_on_variety(compose(pi, rho), v) == act_on_variety(pi, act_on_variety(rho, v)));
    CHECK(table[s6_index(pi)][v.index()] == act_on_variety(pi, v).index());
    CHECK(act_on_variety(pi, v) == canonicalize(recolor(pi, v.canonical())));
  }
}

TEST_CASE("sigma: homomorphism, bijective, transpositions swap three pairs") {
  const auto g = symmetric_group();
  Rng rng(12);
  std::set<PentadPermutation> images;
  for (const auto& pi : g) {
    images.insert(sigma(pi));
    for (int k = 0; k < 100; ++k) {
      const auto& rho = g[rng.below(720)];
      CHECK(sigma(compose(pi, rho)) == compose(sigma(pi), sigma(rho)));
    }
  }
  CHECK(images.size() == 720);
  int transpositions = 0;
  for (const auto& pi : g)
    if (pi.cycle_type() == std::vector<int>{2, 1, 1, 1, 1}) {
      ++transpositions;
      CHECK(sigma(pi).cycle_type() == std::vector<int>{2, 2, 2});
    }
  CHECK(transpositions == 15);
}

TEST_CASE("tableau layout") {
  const Tableau& t = tableau();
  CHECK(t.cell(0, 1) == Variety(0));
  CHECK(t.label_of(Variety(0)) == "Ab");
  CHECK_THROWS_AS(t.cell(2, 2), std::out_of_range);
  CHECK_FALSE(t.at(3, 3).has_value());
  std::set<Variety> seen;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      if (r == c) continue;
      const auto v = t.cell(r, c);
      seen.insert(v);
      CHECK(t.position_of(v).row == r);
      CHECK(t.position_of(v).col == c);
      CHECK(t.cell(c, r) == mirror(v));
      CHECK(v.syntheme().index() == shared_syntheme(r, c));
    }
  CHECK(seen.size() == 30);
  for (int p = 0; p < 6; ++p) {
    DuadMask row = 0, col = 0;
    for (const auto& v : t.row(p)) row |= v.opposite_mask();
    for (const auto& v : t.column(p)) col |= v.opposite_mask();
    CHECK(row == 0x7fff);
    CHECK(col == 0x7fff);
  }
}

TEST_CASE("every recoloring maps rows to rows by sigma") {
  const Tableau& t = tableau();
  for (const auto& pi : symmetric_group()) {
    const auto act = act_on_tableau(pi, t);
    CHECK(act.rows == sigma(pi));
    CHECK(act.cols == sigma(pi));
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c)
        if (r != c) CHECK(act_on_variety(pi, t.cell(r, c)) == t.cell(act.rows(r), act.cols(c)));
  }
}

TEST_CASE("stabilizer: 24 elements, faithful on the row") {
  const Tableau& t = tableau();
  for (const auto& v : Variety::all()) {
    const auto stab = variety_stabilizer(v);
    REQUIRE(stab.size() == 24);
    std::set<ColorPermutation> distinct(stab.begin(), stab.end());
    CHECK(distinct.size() == 24);
    int fixing_row = 0;
    for (const auto& pi : stab) {
      CHECK(act_on_variety(pi, v) == v);
      bool all = true;
      for (const auto& w : t.row(t.position_of(v).row)) all &= act_on_variety(pi, w) == w;
      fixing_row += all;
    }
    CHECK(fixing_row == 1);
  }
}

TEST_CASE("no-shared-corner set: mirror, row and column") {
  const Tableau& t = tableau();
  for (const auto& v : Variety::all()) {
    const auto none = no_shared_corner_set(v, t);
    REQUIRE(none.size() == 9);
    CHECK(std::is_sorted(none.begin(), none.end()));
    CHECK(std::binary_search(none.begin(), none.end(), mirror(v)));
    for (const auto& w : Variety::all()) {
      if (w == v) continue;
      const bool member = std::binary_search(none.begin(), none.end(), w);
      CHECK(shared_stats(v, w).corners == (member ? 0 : 2));
    }
  }
}

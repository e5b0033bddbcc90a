#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hexaframe/cube.hpp"
#include "hexaframe/permutation.hpp"

namespace hexaframe {

/// Five synthemes covering all 15 duads once. Stored as sorted syntheme
/// indices.
struct Pentad {
  std::array<std::uint8_t, 5> synthemes{};

  bool contains(int syntheme) const;
  std::uint16_t mask() const;

  friend auto operator<=>(const Pentad&, const Pentad&) = default;
};

/// Exhaustive search over the 3003 five-subsets of synthemes. Always 6
/// results, sorted.
std::vector<Pentad> find_pentads();

/// Cached find_pentads().
std::span<const Pentad> pentads();

/// The syntheme two distinct pentads have in common.
int shared_syntheme(int pentad_a, int pentad_b);

/// Action of a color permutation on the six pentads.
PentadPermutation sigma(const ColorPermutation& perm);

Variety act_on_variety(const ColorPermutation& perm, Variety v);

/// act_on_variety for every (s6_index, variety) pair.
using VarietyActionTable = std::array<std::array<std::uint8_t, kNumVarieties>, 720>;
const VarietyActionTable& variety_action_table();

/// "A".."F" for pentads as rows, "a".."f" as columns.
char row_label(int pentad);
char column_label(int pentad);

/// 6x6 arrangement of the varieties; rows and columns are both indexed by
/// pentad, cell (X, y) holds a variety whose syntheme is shared by X and y.
class Tableau {
 public:
  struct Position {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Position&, const Position&) = default;
  };

  /// Throws std::out_of_range on the diagonal.
  Variety cell(int row, int col) const;
  Variety cell(Position pos) const { return cell(pos.row, pos.col); }
  std::optional<Variety> at(int row, int col) const;
  Position position_of(Variety v) const;
  /// Conway-style coordinate, e.g. "Ab".
  std::string label_of(Variety v) const;

  /// The five varieties of row X (resp. column y) in column (resp. row) order.
  std::array<Variety, 5> row(int pentad) const;
  std::array<Variety, 5> column(int pentad) const;

 private:
  friend Tableau build_tableau();
  std::array<std::array<std::int8_t, 6>, 6> cells_{};
  std::array<Position, kNumVarieties> positions_{};
};

/// Propagates the smallest variety from cell (0, 1) along the S6 orbit and
/// checks every structural property; std::logic_error on any inconsistency.
Tableau build_tableau();

/// Built once.
const Tableau& tableau();

struct TableauAction {
  PentadPermutation rows;
  PentadPermutation cols;
};

/// Where recoloring by perm sends rows and columns. Throws std::logic_error
/// if some cell lands off its predicted position.
TableauAction act_on_tableau(const ColorPermutation& perm, const Tableau& t);

/// The 24 color permutations fixing v.
std::vector<ColorPermutation> variety_stabilizer(Variety v);

/// Varieties sharing no corner triple with v: its mirror plus the rest of
/// its row and column.
std::vector<Variety> no_shared_corner_set(Variety v, const Tableau& t);

}  // namespace hexaframe

#include "hexaframe/tableau.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hexaframe {

bool Pentad::contains(int syntheme) const {
  return std::find(synthemes.begin(), synthemes.end(), syntheme) != synthemes.end();
}

std::uint16_t Pentad::mask() const {
  std::uint16_t m = 0;
  for (auto s : synthemes) m |= std::uint16_t(1u << s);
  return m;
}

std::vector<Pentad> find_pentads() {
  constexpr DuadMask kAllDuads = (1u << kNumDuads) - 1;
  const auto synthemes = all_synthemes();
  std::vector<Pentad> found;
  std::array<std::uint8_t, 5> pick{};
  // Depth-first over increasing 5-subsets; a subset qualifies when its duad
  // masks are pairwise disjoint, hence cover all 15.
  auto search = [&](auto&& self, int depth, int start, DuadMask used) -> void {
    if (depth == 5) {
      if (used == kAllDuads) found.push_back(Pentad{pick});
      return;
    }
    for (int s = start; s < kNumSynthemes; ++s) {
      const DuadMask m = synthemes[s].mask();
      if (used & m) continue;
      pick[depth] = static_cast<std::uint8_t>(s);
      self(self, depth + 1, s + 1, DuadMask(used | m));
    }
  };
  search(search, 0, 0, 0);
  std::sort(found.begin(), found.end());
  return found;
}

std::span<const Pentad> pentads() {
  static const std::vector<Pentad> cached = [] {
    auto p = find_pentads();
    if (p.size() != 6) throw std::logic_error("expected exactly six pentads");
    return p;
  }();
  return cached;
}

int shared_syntheme(int pentad_a, int pentad_b) {
  if (pentad_a == pentad_b) throw std::invalid_argument("pentads must differ");
  const auto common = pentads()[pentad_a].mask() & pentads()[pentad_b].mask();
  if (std::popcount(static_cast<unsigned>(common)) != 1)
    throw std::logic_error("two pentads must share exactly one syntheme");
  return std::countr_zero(static_cast<unsigned>(common));
}

namespace {

int pentad_of_mask(std::uint16_t mask) {
  const auto all = pentads();
  for (int i = 0; i < 6; ++i)
    if (all[i].mask() == mask) return i;
  return -1;
}

}  // namespace

PentadPermutation sigma(const ColorPermutation& perm) {
  PentadPermutation::Images images{};
  const auto all = pentads();
  for (int i = 0; i < 6; ++i) {
    std::uint16_t mask = 0;
    for (auto s : all[i].synthemes) mask |= std::uint16_t(1u << apply_to_syntheme(perm, s));
    const int image = pentad_of_mask(mask);
    if (image < 0) throw std::logic_error("a color permutation must map pentads to pentads");
    images[i] = static_cast<std::uint8_t>(image);
  }
  return PentadPermutation(images);
}

Variety act_on_variety(const ColorPermutation& perm, Variety v) {
  return canonicalize(recolor(perm, v.canonical()));
}

const VarietyActionTable& variety_action_table() {
  static const VarietyActionTable table = [] {
    VarietyActionTable t{};
    const auto group = symmetric_group();
    for (std::size_t g = 0; g < group.size(); ++g)
      for (const auto& v : Variety::all())
        t[g][v.index()] = static_cast<std::uint8_t>(act_on_variety(group[g], v).index());
    return t;
  }();
  return table;
}

char row_label(int pentad) { return static_cast<char>('A' + pentad); }
char column_label(int pentad) { return static_cast<char>('a' + pentad); }

Variety Tableau::cell(int row, int col) const {
  if (row == col || row < 0 || col < 0 || row >= 6 || col >= 6)
    throw std::out_of_range("tableau cell must be off the diagonal");
  return Variety(cells_[row][col]);
}

std::optional<Variety> Tableau::at(int row, int col) const {
  if (row == col) return std::nullopt;
  return cell(row, col);
}

Tableau::Position Tableau::position_of(Variety v) const { return positions_[v.index()]; }

std::string Tableau::label_of(Variety v) const {
  const auto pos = position_of(v);
  return {row_label(pos.row), column_label(pos.col)};
}

std::array<Variety, 5> Tableau::row(int pentad) const {
  std::array<Variety, 5> out{};
  int k = 0;
  for (int c = 0; c < 6; ++c)
    if (c != pentad) out[k++] = cell(pentad, c);
  return out;
}

std::array<Variety, 5> Tableau::column(int pentad) const {
  std::array<Variety, 5> out{};
  int k = 0;
  for (int r = 0; r < 6; ++r)
    if (r != pentad) out[k++] = cell(r, pentad);
  return out;
}

Tableau build_tableau() {
  const Variety seed = Variety::all().front();
  if (seed.syntheme().index() != shared_syntheme(0, 1))
    throw std::logic_error("seed variety does not fit cell (0, 1)");

  Tableau t;
  for (auto& row : t.cells_) row.fill(-1);
  for (const auto& perm : symmetric_group()) {
    const auto s = sigma(perm);
    auto& slot = t.cells_[s(0)][s(1)];
    const auto image = static_cast<std::int8_t>(act_on_variety(perm, seed).index());
    if (slot >= 0 && slot != image)
      throw std::logic_error("tableau propagation depends on the chosen permutation");
    slot = image;
  }

  std::array<bool, kNumVarieties> used{};
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      if (r == c) continue;
      const auto id = t.cells_[r][c];
      if (id < 0) throw std::logic_error("tableau cell left empty");
      if (used[id]) throw std::logic_error("variety placed twice in the tableau");
      used[id] = true;
      t.positions_[id] = Tableau::Position{r, c};
      if (Variety(id).syntheme().index() != shared_syntheme(r, c))
        throw std::logic_error("cell syntheme differs from its pentads' shared syntheme");
    }
  }

  constexpr DuadMask kAllDuads = (1u << kNumDuads) - 1;
  for (int p = 0; p < 6; ++p) {
    DuadMask row_duads = 0;
    DuadMask col_duads = 0;
    for (int q = 0; q < 6; ++q) {
      if (p == q) continue;
      const auto a = t.cell(p, q);
      const auto b = t.cell(q, p);
      if (mirror(a) != b) throw std::logic_error("transposed cells must be mirror varieties");
      if (row_duads & a.opposite_mask()) throw std::logic_error("duad repeated within a row");
      if (col_duads & b.opposite_mask()) throw std::logic_error("duad repeated within a column");
      row_duads |= a.opposite_mask();
      col_duads |= b.opposite_mask();
    }
    if (row_duads != kAllDuads || col_duads != kAllDuads)
      throw std::logic_error("row or column misses a duad");
  }

  std::uint16_t upper = 0;
  std::uint16_t lower = 0;
  for (int r = 0; r < 6; ++r) {
    for (int c = r + 1; c < 6; ++c) {
      upper |= std::uint16_t(1u << t.cell(r, c).syntheme().index());
      lower |= std::uint16_t(1u << t.cell(c, r).syntheme().index());
    }
  }
  if (upper != kAllDuads || lower != kAllDuads)
    throw std::logic_error("synthemes above or below the diagonal miss one");
  return t;
}

const Tableau& tableau() {
  static const Tableau cached = build_tableau();
  return cached;
}

TableauAction act_on_tableau(const ColorPermutation& perm, const Tableau& t) {
  std::array<int, 6> rows;
  std::array<int, 6> cols;
  rows.fill(-1);
  cols.fill(-1);
  auto record = [](std::array<int, 6>& map, int from, int to) {
    if (map[from] >= 0 && map[from] != to)
      throw std::logic_error("color permutation splits a row or column");
    map[from] = to;
  };
  for (const auto& v : Variety::all()) {
    const auto from = t.position_of(v);
    const auto to = t.position_of(act_on_variety(perm, v));
    record(rows, from.row, to.row);
    record(cols, from.col, to.col);
  }
  PentadPermutation::Images row_images{};
  PentadPermutation::Images col_images{};
  for (int i = 0; i < 6; ++i) {
    row_images[i] = static_cast<std::uint8_t>(rows[i]);
    col_images[i] = static_cast<std::uint8_t>(cols[i]);
  }
  TableauAction action{PentadPermutation(row_images), PentadPermutation(col_images)};
  const auto s = sigma(perm);
  if (action.rows != s || action.cols != s)
    throw std::logic_error("tableau action disagrees with the pentad action");
  return action;
}

std::vector<ColorPermutation> variety_stabilizer(Variety v) {
  std::vector<ColorPermutation> out;
  for (const auto& perm : symmetric_group())
    if (act_on_variety(perm, v) == v) out.push_back(perm);
  return out;
}

std::vector<Variety> no_shared_corner_set(Variety v, const Tableau& t) {
  const auto pos = t.position_of(v);
  std::vector<Variety> out{t.cell(pos.col, pos.row)};
  for (const auto& w : t.row(pos.row))
    if (w != v) out.push_back(w);
  for (const auto& w : t.column(pos.col))
    if (w != v) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hexaframe

#include "hexaframe/cube.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace hexaframe {
namespace {

constexpr Rotation kTurnX{Rotation::Perm{0, 1, 4, 5, 3, 2}};  // +y -> +z -> -y
constexpr Rotation kTurnY{Rotation::Perm{5, 4, 2, 3, 0, 1}};  // +z -> +x -> -z
constexpr Rotation kTurnZ{Rotation::Perm{2, 3, 1, 0, 4, 5}};  // +x -> +y -> -x

int encode(const FaceArray& faces) {
  int code = 0;
  for (int p = kNumFaces - 1; p >= 0; --p) code = code * 7 + faces[p];
  return code;
}
constexpr int kCodeSpace = 117649;  // 7^6

struct DuadTables {
  std::array<std::array<std::int8_t, 7>, 7> index{};
  std::array<Duad, kNumDuads> duads{};
};

const DuadTables& duad_tables() {
  static const DuadTables tables = [] {
    DuadTables t{};
    int next = 0;
    for (Color a = 1; a <= 6; ++a) {
      for (Color b = a + 1; b <= 6; ++b) {
        t.index[a][b] = t.index[b][a] = static_cast<std::int8_t>(next);
        t.duads[next++] = Duad{a, b};
      }
    }
    return t;
  }();
  return tables;
}

struct SynthemeTables {
  std::array<Syntheme, kNumSynthemes> synthemes{};
  std::array<std::int8_t, 1 << kNumDuads> by_mask{};
};

const SynthemeTables& syntheme_tables() {
  static const SynthemeTables tables = [] {
    SynthemeTables t{};
    std::vector<Syntheme> found;
    for (Color b = 2; b <= 6; ++b) {
      std::vector<Color> rest;
      for (Color c = 2; c <= 6; ++c)
        if (c != b) rest.push_back(c);
      for (int j = 1; j < 4; ++j) {
        std::vector<Color> last;
        for (int i = 1; i < 4; ++i)
          if (i != j) last.push_back(rest[i]);
        found.push_back(Syntheme{{Duad::of(1, b), Duad::of(rest[0], rest[j]),
                                  Duad::of(last[0], last[1])}});
      }
    }
    for (auto& s : found) std::sort(s.duads.begin(), s.duads.end());
    std::sort(found.begin(), found.end());
    t.by_mask.fill(-1);
    for (int i = 0; i < kNumSynthemes; ++i) {
      t.synthemes[i] = found[i];
      t.by_mask[found[i].mask()] = static_cast<std::int8_t>(i);
    }
    return t;
  }();
  return tables;
}

struct TripleTables {
  std::array<CornerTriple, kNumCornerTriples> triples{};
  std::map<std::array<Color, 3>, int> index;
};

const TripleTables& triple_tables() {
  static const TripleTables tables = [] {
    TripleTables t;
    std::set<CornerTriple> seen;
    for (Color a = 1; a <= 6; ++a)
      for (Color b = 1; b <= 6; ++b)
        for (Color c = 1; c <= 6; ++c)
          if (a != b && b != c && a != c) seen.insert(CornerTriple::clockwise(a, b, c));
    int i = 0;
    for (const auto& tr : seen) {
      t.triples[i] = tr;
      t.index[tr.colors] = i;
      ++i;
    }
    return t;
  }();
  return tables;
}

struct VarietyInfo {
  OrientedCube canonical;
  int syntheme = 0;
  DuadMask adjacent = 0;
  std::uint64_t corners = 0;
  std::array<CornerTriple, kNumCorners> sorted_triples{};
  std::array<CornerTriple, kNumCorners> triple_at{};
};

struct Catalog {
  std::array<VarietyInfo, kNumVarieties> varieties{};
  std::array<Variety, kNumVarieties> handles{};
  std::vector<std::int8_t> variety_of_code;
};

std::vector<Rotation> close_group(std::initializer_list<Rotation> generators) {
  std::set<Rotation> group{Rotation{}};
  std::vector<Rotation> frontier{Rotation{}};
  while (!frontier.empty()) {
    std::vector<Rotation> next;
    for (const auto& r : frontier) {
      for (const auto& g : generators) {
        Rotation product = compose(g, r);
        if (group.insert(product).second) next.push_back(product);
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

const std::vector<Rotation>& rotations_table() {
  static const std::vector<Rotation> rotations = [] {
    auto group = close_group({kTurnX, kTurnZ});
    if (group.size() != kNumRotations)
      throw std::logic_error("rotation group closure must have 24 elements");
    return group;
  }();
  return rotations;
}

const Catalog& catalog() {
  static const Catalog cat = [] {
    Catalog c;

    std::set<OrientedCube> canon;
    FaceArray faces{1, 2, 3, 4, 5, 6};
    do {
      canon.insert(OrientedCube{canonical_form(faces)});
    } while (std::next_permutation(faces.begin(), faces.end()));
    if (canon.size() != kNumVarieties)
      throw std::logic_error("six-color cubes must form 30 rotation classes");

    c.variety_of_code.assign(kCodeSpace, -1);
    int index = 0;
    for (const auto& cube : canon) {
      VarietyInfo& info = c.varieties[index];
      info.canonical = cube;
      DuadMask opposite = 0;
      for (int p = 0; p < kNumFaces; p += 2)
        opposite |= DuadMask(1u << Duad::of(cube[p], cube[p + 1]).index());
      info.syntheme = syntheme_index(opposite);
      info.adjacent = DuadMask(((1u << kNumDuads) - 1) & ~opposite);
      for (int k = 0; k < kNumCorners; ++k) {
        info.triple_at[k] = corner_triple_at(cube, k);
        info.corners |= std::uint64_t{1} << info.triple_at[k].index();
      }
      info.sorted_triples = info.triple_at;
      std::sort(info.sorted_triples.begin(), info.sorted_triples.end());
      c.handles[index] = Variety(index);
      for (const auto& r : rotations_table())
        c.variety_of_code[encode(r.apply(cube).faces)] = static_cast<std::int8_t>(index);
      ++index;
    }
    return c;
  }();
  return cat;
}

const VarietyInfo& info(Variety v) { return catalog().varieties[v.index()]; }

}  // namespace

bool OrientedCube::has_distinct_colors() const {
  unsigned seen = 0;
  for (Color c : faces) {
    if (c < 1 || c > 6) return false;
    seen |= 1u << c;
  }
  return seen == 0b1111110u;
}

std::string OrientedCube::to_string() const {
  std::string out(kNumFaces, '0');
  for (int p = 0; p < kNumFaces; ++p) out[p] = static_cast<char>('0' + faces[p]);
  return out;
}

OrientedCube OrientedCube::from_string(std::string_view text) {
  if (text.size() != kNumFaces)
    throw std::invalid_argument("cube must have exactly six face digits: '" + std::string(text) + "'");
  OrientedCube cube;
  for (int p = 0; p < kNumFaces; ++p) {
    char ch = text[p];
    if (ch < '1' || ch > '9')
      throw std::invalid_argument("invalid face digit in '" + std::string(text) + "'");
    cube.faces[p] = static_cast<Color>(ch - '0');
  }
  return cube;
}

OrientedCube Rotation::apply(const OrientedCube& cube) const {
  OrientedCube out;
  for (int p = 0; p < kNumFaces; ++p) out.faces[perm_[p]] = cube.faces[p];
  return out;
}

Rotation Rotation::inverse() const {
  Perm inv{};
  for (int p = 0; p < kNumFaces; ++p) inv[perm_[p]] = static_cast<std::uint8_t>(p);
  return Rotation(inv);
}

Rotation compose(const Rotation& outer, const Rotation& inner) {
  Rotation::Perm perm{};
  for (int p = 0; p < kNumFaces; ++p) perm[p] = static_cast<std::uint8_t>(outer(inner(p)));
  return Rotation(perm);
}

bool preserves_opposition(const Rotation::Perm& perm) {
  for (int p = 0; p < kNumFaces; ++p)
    if (perm[opposite_face(p)] != opposite_face(perm[p])) return false;
  return true;
}

std::span<const Rotation> rotation_group() { return rotations_table(); }

std::span<const Rotation> quarter_turns() {
  static const std::array<Rotation, 6> turns{kTurnX, kTurnX.inverse(), kTurnY,
                                             kTurnY.inverse(), kTurnZ, kTurnZ.inverse()};
  return turns;
}

std::array<int, 3> corner_faces_clockwise(int corner) {
  const int fx = 0 + (corner & 1);
  const int fy = 2 + ((corner >> 1) & 1);
  const int fz = 4 + ((corner >> 2) & 1);
  // Seen from outside, x -> y -> z runs counterclockwise at corners with an
  // even number of negative axes and clockwise at the others.
  if (std::popcount(static_cast<unsigned>(corner)) % 2 == 0) return {fx, fz, fy};
  return {fx, fy, fz};
}

std::span<const EdgeFaces> edge_faces() {
  static const std::array<EdgeFaces, kNumEdges> edges = [] {
    std::array<EdgeFaces, kNumEdges> e{};
    int k = 0;
    for (int a = 0; a < kNumFaces; ++a)
      for (int b = a + 1; b < kNumFaces; ++b)
        if (b != opposite_face(a)) e[k++] = EdgeFaces{a, b};
    return e;
  }();
  return edges;
}

Duad Duad::of(Color a, Color b) {
  if (a == b || a < 1 || b < 1 || a > 6 || b > 6)
    throw std::invalid_argument("duad needs two distinct colors in 1..6");
  return a < b ? Duad{a, b} : Duad{b, a};
}

Duad Duad::from_index(int index) {
  if (index < 0 || index >= kNumDuads) throw std::out_of_range("duad index");
  return duad_tables().duads[index];
}

int Duad::index() const { return duad_tables().index[lo][hi]; }

std::string Duad::to_string() const {
  return {'{', static_cast<char>('0' + lo), static_cast<char>('0' + hi), '}'};
}

DuadMask Syntheme::mask() const {
  DuadMask m = 0;
  for (const auto& d : duads) m |= DuadMask(1u << d.index());
  return m;
}

int Syntheme::index() const { return syntheme_index(mask()); }

std::string Syntheme::to_string() const {
  std::string out;
  for (const auto& d : duads) out += d.to_string();
  return out;
}

std::span<const Syntheme> all_synthemes() { return syntheme_tables().synthemes; }

int syntheme_index(DuadMask mask) {
  if (mask >= (1u << kNumDuads)) return -1;
  return syntheme_tables().by_mask[mask];
}

CornerTriple CornerTriple::clockwise(Color a, Color b, Color c) {
  if (b < a && b < c) return CornerTriple{{b, c, a}};
  if (c < a && c < b) return CornerTriple{{c, a, b}};
  return CornerTriple{{a, b, c}};
}

CornerTriple CornerTriple::from_index(int index) {
  if (index < 0 || index >= kNumCornerTriples) throw std::out_of_range("corner triple index");
  return triple_tables().triples[index];
}

int CornerTriple::index() const {
  const auto& idx = triple_tables().index;
  auto it = idx.find(colors);
  if (it == idx.end()) throw std::invalid_argument("not a canonical corner triple");
  return it->second;
}

CornerTriple CornerTriple::mirror_image() const {
  return clockwise(colors[0], colors[2], colors[1]);
}

std::string CornerTriple::to_string() const {
  return {'(', static_cast<char>('0' + colors[0]), static_cast<char>('0' + colors[1]),
          static_cast<char>('0' + colors[2]), ')'};
}

std::span<const CornerTriple> all_corner_triples() { return triple_tables().triples; }

CornerTriple corner_triple_at(const OrientedCube& cube, int corner) {
  const auto f = corner_faces_clockwise(corner);
  return CornerTriple::clockwise(cube[f[0]], cube[f[1]], cube[f[2]]);
}

Variety::Variety(int index) {
  if (index < 0 || index >= kNumVarieties) throw std::out_of_range("variety index");
  index_ = static_cast<std::uint8_t>(index);
}

const OrientedCube& Variety::canonical() const { return info(*this).canonical; }
const Syntheme& Variety::syntheme() const { return all_synthemes()[info(*this).syntheme]; }
DuadMask Variety::opposite_mask() const { return syntheme().mask(); }
DuadMask Variety::adjacent_mask() const { return info(*this).adjacent; }

std::vector<Duad> Variety::adjacent_pairs() const {
  std::vector<Duad> out;
  for (int d = 0; d < kNumDuads; ++d)
    if (adjacent_mask() & (1u << d)) out.push_back(Duad::from_index(d));
  return out;
}

bool Variety::has_adjacent(Duad duad) const { return adjacent_mask() & (1u << duad.index()); }
std::uint64_t Variety::corner_mask() const { return info(*this).corners; }
std::span<const CornerTriple> Variety::corner_triples() const { return info(*this).sorted_triples; }

bool Variety::has_corner(const CornerTriple& triple) const {
  return corner_mask() >> triple.index() & 1u;
}

CornerTriple Variety::corner_at(int corner) const { return info(*this).triple_at.at(corner); }

std::span<const Variety> Variety::all() { return catalog().handles; }

Variety Variety::parse(std::string_view text) { return canonicalize(OrientedCube::from_string(text)); }

Variety canonicalize(const OrientedCube& cube) {
  if (!cube.has_distinct_colors())
    throw std::invalid_argument("cube " + cube.to_string() + " must use each color 1..6 once");
  return Variety(catalog().variety_of_code[encode(cube.faces)]);
}

Variety mirror(Variety v) {
  OrientedCube swapped = v.canonical();
  std::swap(swapped.faces[0], swapped.faces[1]);
  return canonicalize(swapped);
}

SharedStats shared_stats(Variety a, Variety b) {
  return SharedStats{
      std::popcount(static_cast<unsigned>(a.opposite_mask() & b.opposite_mask())),
      std::popcount(static_cast<unsigned>(a.adjacent_mask() & b.adjacent_mask())),
      std::popcount(a.corner_mask() & b.corner_mask())};
}

FaceArray canonical_form(const FaceArray& faces) {
  const OrientedCube cube{faces};
  FaceArray best = faces;
  for (const auto& r : rotation_group()) best = std::min(best, r.apply(cube).faces);
  return best;
}

namespace {

std::int64_t count_classes(int k, bool surjective) {
  std::set<FaceArray> classes;
  FaceArray faces{};
  const int total = [k] {
    int t = 1;
    for (int i = 0; i < kNumFaces; ++i) t *= k;
    return t;
  }();
  for (int code = 0; code < total; ++code) {
    int rest = code;
    unsigned used = 0;
    for (int p = 0; p < kNumFaces; ++p) {
      faces[p] = static_cast<Color>(1 + rest % k);
      rest /= k;
      used |= 1u << faces[p];
    }
    if (surjective && std::popcount(used) != k) continue;
    classes.insert(canonical_form(faces));
  }
  return static_cast<std::int64_t>(classes.size());
}

}  // namespace

std::int64_t count_varieties(int k) {
  if (k < 2 || k > 6) throw std::out_of_range("count_varieties needs 2 <= k <= 6");
  return count_classes(k, true);
}

std::int64_t count_colorings(int k) {
  if (k < 1 || k > 6) throw std::out_of_range("count_colorings needs 1 <= k <= 6");
  return count_classes(k, false);
}

}  // namespace hexaframe

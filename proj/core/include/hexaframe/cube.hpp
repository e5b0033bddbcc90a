#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hexaframe {

using Color = std::uint8_t;

inline constexpr int kNumColors = 6;
inline constexpr int kNumFaces = 6;
inline constexpr int kNumRotations = 24;
inline constexpr int kNumCorners = 8;
inline constexpr int kNumEdges = 12;
inline constexpr int kNumDuads = 15;
inline constexpr int kNumSynthemes = 15;
inline constexpr int kNumCornerTriples = 40;
inline constexpr int kNumVarieties = 30;

// Face positions: 0=+x 1=-x 2=+y 3=-y 4=+z 5=-z.
constexpr int opposite_face(int face) { return face ^ 1; }

using FaceArray = std::array<Color, kNumFaces>;

/// A cube sitting in a fixed spatial orientation; faces[p] is the color at
/// face position p.
struct OrientedCube {
  FaceArray faces{};

  Color operator[](int face) const { return faces[face]; }

  /// True when the faces carry each of the colors 1..6 exactly once.
  bool has_distinct_colors() const;

  /// Six digits in face-position order, e.g. "123456".
  std::string to_string() const;
  static OrientedCube from_string(std::string_view text);

  friend auto operator<=>(const OrientedCube&, const OrientedCube&) = default;
};

/// A permutation of face positions. The sticker at position p moves to
/// position perm[p].
class Rotation {
 public:
  using Perm = std::array<std::uint8_t, kNumFaces>;

  constexpr Rotation() : perm_{0, 1, 2, 3, 4, 5} {}
  explicit constexpr Rotation(const Perm& perm) : perm_(perm) {}

  int operator()(int face) const { return perm_[face]; }
  const Perm& perm() const { return perm_; }

  OrientedCube apply(const OrientedCube& cube) const;
  Rotation inverse() const;
  bool is_identity() const { return *this == Rotation{}; }

  friend auto operator<=>(const Rotation&, const Rotation&) = default;

 private:
  Perm perm_;
};

/// outer ∘ inner: apply inner first.
Rotation compose(const Rotation& outer, const Rotation& inner);

bool preserves_opposition(const Rotation::Perm& perm);

/// The 24 orientation-preserving rotations, closure of two quarter-turns,
/// sorted by permutation; the identity is element 0.
std::span<const Rotation> rotation_group();

/// Quarter-turns about +x, +y, +z and their inverses.
std::span<const Rotation> quarter_turns();

// Geometric corner c: bit0 set means -x, bit1 means -y, bit2 means -z.
/// Face positions meeting at a corner, in clockwise order seen from outside.
std::array<int, 3> corner_faces_clockwise(int corner);

struct EdgeFaces {
  int first;
  int second;
};

/// The 12 big-cube edges as pairs of adjacent face positions (first < second),
/// in lexicographic order.
std::span<const EdgeFaces> edge_faces();

/// Unordered pair of distinct colors.
struct Duad {
  Color lo = 1;
  Color hi = 2;

  static Duad of(Color a, Color b);
  static Duad from_index(int index);
  int index() const;
  std::string to_string() const;

  friend auto operator<=>(const Duad&, const Duad&) = default;
};

using DuadMask = std::uint16_t;

/// Three disjoint duads covering the palette.
struct Syntheme {
  std::array<Duad, 3> duads{};

  DuadMask mask() const;
  int index() const;
  std::string to_string() const;

  friend auto operator<=>(const Syntheme&, const Syntheme&) = default;
};

/// The 15 synthemes, sorted by their duad lists.
std::span<const Syntheme> all_synthemes();
int syntheme_index(DuadMask mask);

/// Clockwise corner reading up to cyclic rotation; smallest color first.
struct CornerTriple {
  std::array<Color, 3> colors{};

  static CornerTriple clockwise(Color a, Color b, Color c);
  static CornerTriple from_index(int index);
  int index() const;
  CornerTriple mirror_image() const;
  std::string to_string() const;

  friend auto operator<=>(const CornerTriple&, const CornerTriple&) = default;
};

std::span<const CornerTriple> all_corner_triples();

CornerTriple corner_triple_at(const OrientedCube& cube, int corner);

/// Rotation class of a six-color cube. A cheap handle into an immutable
/// catalog; index() follows the lexicographic order of canonical forms.
class Variety {
 public:
  constexpr Variety() = default;
  explicit Variety(int index);

  int index() const { return index_; }

  /// Lexicographically smallest face array over the 24 rotations.
  const OrientedCube& canonical() const;
  std::string name() const { return canonical().to_string(); }

  const Syntheme& syntheme() const;
  DuadMask opposite_mask() const;
  DuadMask adjacent_mask() const;
  std::vector<Duad> adjacent_pairs() const;
  bool has_adjacent(Duad duad) const;

  /// Bit t set iff corner triple index t occurs on the cube.
  std::uint64_t corner_mask() const;
  std::span<const CornerTriple> corner_triples() const;
  bool has_corner(const CornerTriple& triple) const;
  /// Triple read at geometric corner `corner` of the canonical orientation.
  CornerTriple corner_at(int corner) const;

  static std::span<const Variety> all();
  static Variety parse(std::string_view text);

  friend auto operator<=>(const Variety&, const Variety&) = default;

 private:
  std::uint8_t index_ = 0;
};

/// Throws std::invalid_argument unless the cube has six distinct colors.
Variety canonicalize(const OrientedCube& cube);

/// Swap one opposite pair and re-canonicalize.
Variety mirror(Variety v);

struct SharedStats {
  int opposite = 0;
  int adjacent = 0;
  int corners = 0;

  friend auto operator<=>(const SharedStats&, const SharedStats&) = default;
};

SharedStats shared_stats(Variety a, Variety b);

/// Lexicographically smallest rotation image of an arbitrary coloring.
FaceArray canonical_form(const FaceArray& faces);

/// Rotation classes of colorings using every one of k colors (2 <= k <= 6),
/// by direct enumeration of all k^6 face arrays.
std::int64_t count_varieties(int k);

/// Rotation classes of colorings drawn from at most k colors (1 <= k <= 6).
std::int64_t count_colorings(int k);

}  // namespace hexaframe

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hexaframe/cube.hpp"
#include "hexaframe/matching.hpp"
#include "hexaframe/multiset.hpp"

namespace hexaframe {

/// Corners plus edge interiors: 12n - 16 cubes. Throws std::invalid_argument
/// for n < 2.
int frame_size(int n);

/// Smallest total for which every multiset admits an n-frame.
int guaranteed_size(int n);

enum class SlotKind { Corner, Edge };

/// Corner slots use index 0..7 (geometric corner) and offset 0; edge slots
/// use index 0..11 (see edge_faces()) and offset 0..n-3 along the edge.
struct SlotId {
  SlotKind kind = SlotKind::Corner;
  int index = 0;
  int offset = 0;

  friend auto operator<=>(const SlotId&, const SlotId&) = default;
};

/// Big-cube face positions a slot exposes.
std::vector<int> exposed_faces(const SlotId& slot);

struct Placement {
  SlotId slot;
  Variety variety;
  /// Applied to the variety's canonical orientation.
  Rotation rotation;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct FrameSolution {
  int n = 2;
  Variety model;
  std::vector<Placement> placements;

  CubeMultiset used() const;
};

/// The model's colors on the two big-cube faces of an edge, in face-position
/// order.
struct EdgeSlotRequirement {
  Variety model;
  int edge = 0;
  Color first = 1;
  Color second = 2;
};

EdgeSlotRequirement edge_requirement(Variety model, int edge);

/// Rotation showing the model's colors on the three faces of corner `slot`;
/// empty iff v lacks the required triple. Unique when present.
std::optional<Rotation> orient_for_corner(Variety v, int slot, Variety model);

/// Rotation showing req.first and req.second on the edge's two faces.
std::optional<Rotation> orient_for_edge(Variety v, const EdgeSlotRequirement& req);

/// Edge groups filled varieties-first-fit, plus the cubes that did not fit.
struct EdgeFill {
  Variety model;
  int n = 3;
  std::array<std::vector<Variety>, kNumEdges> edges{};
  CubeMultiset leftover;

  int placed() const;
  bool complete() const;
};

/// Each cube of s (canonical order) goes to the first non-full edge whose
/// required pair it carries.
EdgeFill extend_frame_greedy(const CornerAssignment& corner, const CubeMultiset& s, int n);

/// Orients every cube of a complete corner assignment and edge fill.
FrameSolution assemble_frame(const CornerAssignment& corner, const EdgeFill& fill);

/// Single integral flow from varieties to the 8 corner slots and 12 edge
/// groups of one model.
std::optional<FrameSolution> build_frame_for_model(const CubeMultiset& s, int n, Variety model);

/// Tries every model in canonical order. Throws std::invalid_argument when
/// total(s) < frame_size(n).
std::optional<FrameSolution> build_frame(const CubeMultiset& s, int n);

struct FrameCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

FrameCheck verify_frame(const FrameSolution& sol, int n);
/// Also checks the used multiset fits inside `available`.
FrameCheck verify_frame(const FrameSolution& sol, int n, const CubeMultiset& available);

using EdgeFillCounts = std::array<int, kNumEdges>;

/// c[i] = number of cubes of s carrying the model's adjacent pair on edge i.
EdgeFillCounts edge_fill_counts(const CornerAssignment& corner, const CubeMultiset& s);

/// One cube per edge, edges taken by increasing availability; empty on a
/// dead end.
std::optional<std::array<Variety, kNumEdges>> fill_one_per_edge(Variety model, const CubeMultiset& s);

}  // namespace hexaframe

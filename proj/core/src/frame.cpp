#include "hexaframe/frame.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hexaframe/flow.hpp"

namespace hexaframe {

int frame_size(int n) {
  if (n < 2) throw std::invalid_argument("frame needs n >= 2");
  return 12 * n - 16;
}

int guaranteed_size(int n) {
  if (n < 2) throw std::invalid_argument("frame needs n >= 2");
  return n <= 3 ? 24 : frame_size(n);
}

std::vector<int> exposed_faces(const SlotId& slot) {
  if (slot.kind == SlotKind::Corner) {
    const auto f = corner_faces_clockwise(slot.index);
    return {f.begin(), f.end()};
  }
  const auto e = edge_faces()[slot.index];
  return {e.first, e.second};
}

CubeMultiset FrameSolution::used() const {
  CubeMultiset s;
  for (const auto& p : placements) s.add(p.variety);
  return s;
}

EdgeSlotRequirement edge_requirement(Variety model, int edge) {
  const auto e = edge_faces()[edge];
  return {model, edge, model.canonical()[e.first], model.canonical()[e.second]};
}

std::optional<Rotation> orient_for_corner(Variety v, int slot, Variety model) {
  const auto faces = corner_faces_clockwise(slot);
  for (const auto& r : rotation_group()) {
    const auto placed = r.apply(v.canonical());
    if (std::all_of(faces.begin(), faces.end(),
                    [&](int f) { return placed[f] == model.canonical()[f]; }))
      return r;
  }
  return std::nullopt;
}

std::optional<Rotation> orient_for_edge(Variety v, const EdgeSlotRequirement& req) {
  const auto e = edge_faces()[req.edge];
  for (const auto& r : rotation_group()) {
    const auto placed = r.apply(v.canonical());
    if (placed[e.first] == req.first && placed[e.second] == req.second) return r;
  }
  return std::nullopt;
}

int EdgeFill::placed() const {
  int total = 0;
  for (const auto& e : edges) total += static_cast<int>(e.size());
  return total;
}

bool EdgeFill::complete() const { return placed() == kNumEdges * (n - 2); }

EdgeFill extend_frame_greedy(const CornerAssignment& corner, const CubeMultiset& s, int n) {
  frame_size(n);
  EdgeFill fill{corner.model, n, {}, {}};
  std::array<Duad, kNumEdges> pairs{};
  for (int e = 0; e < kNumEdges; ++e) {
    const auto req = edge_requirement(corner.model, e);
    pairs[e] = Duad::of(req.first, req.second);
  }
  const auto capacity = static_cast<std::size_t>(n - 2);
  for (const auto& cube : s.expand()) {
    bool placed = false;
    for (int e = 0; e < kNumEdges && !placed; ++e) {
      if (fill.edges[e].size() < capacity && cube.has_adjacent(pairs[e])) {
        fill.edges[e].push_back(cube);
        placed = true;
      }
    }
    if (!placed) fill.leftover.add(cube);
  }
  return fill;
}

FrameSolution assemble_frame(const CornerAssignment& corner, const EdgeFill& fill) {
  if (fill.model != corner.model) throw std::invalid_argument("edge fill and corners use different models");
  if (!fill.complete()) throw std::invalid_argument("edge fill is incomplete");
  FrameSolution sol{fill.n, corner.model, {}};
  for (int k = 0; k < kNumCorners; ++k) {
    auto r = orient_for_corner(corner.picks[k], k, corner.model);
    if (!r) throw std::invalid_argument("corner pick does not carry the required triple");
    sol.placements.push_back({{SlotKind::Corner, k, 0}, corner.picks[k], *r});
  }
  for (int e = 0; e < kNumEdges; ++e) {
    const auto req = edge_requirement(corner.model, e);
    for (std::size_t off = 0; off < fill.edges[e].size(); ++off) {
      auto r = orient_for_edge(fill.edges[e][off], req);
      if (!r) throw std::invalid_argument("edge cube does not carry the required pair");
      sol.placements.push_back({{SlotKind::Edge, e, static_cast<int>(off)}, fill.edges[e][off], *r});
    }
  }
  return sol;
}

namespace {

FrameSolution corners_only(const CornerAssignment& corner) {
  EdgeFill empty{corner.model, 2, {}, {}};
  return assemble_frame(corner, empty);
}

}  // namespace

std::optional<FrameSolution> build_frame_for_model(const CubeMultiset& s, int n, Variety model) {
  const int size = frame_size(n);
  if (n == 2) {
    auto corner = corner_matching(s, model);
    if (!corner) return std::nullopt;
    return corners_only(*corner);
  }

  constexpr int kSource = 0;
  constexpr int kFirstVariety = 1;
  constexpr int kFirstCorner = kFirstVariety + kNumVarieties;
  constexpr int kFirstEdge = kFirstCorner + kNumCorners;
  constexpr int kSink = kFirstEdge + kNumEdges;
  const int per_edge = n - 2;

  FlowNetwork net(kSink + 1);
  std::array<std::vector<std::pair<int, int>>, kNumCorners> into_corner;  // (arc, variety)
  std::array<std::vector<std::pair<int, int>>, kNumEdges> into_edge;
  std::array<Duad, kNumEdges> pairs{};
  for (int e = 0; e < kNumEdges; ++e) {
    const auto req = edge_requirement(model, e);
    pairs[e] = Duad::of(req.first, req.second);
  }
  for (const auto& v : Variety::all()) {
    const int copies = std::min(s.count(v), size);
    if (copies == 0) continue;
    const int node = kFirstVariety + v.index();
    net.add_arc(kSource, node, copies);
    for (int k = 0; k < kNumCorners; ++k)
      if (v.has_corner(model.corner_at(k)))
        into_corner[k].emplace_back(net.add_arc(node, kFirstCorner + k, 1), v.index());
    for (int e = 0; e < kNumEdges; ++e)
      if (v.has_adjacent(pairs[e]))
        into_edge[e].emplace_back(net.add_arc(node, kFirstEdge + e, per_edge), v.index());
  }
  for (int k = 0; k < kNumCorners; ++k) net.add_arc(kFirstCorner + k, kSink, 1);
  for (int e = 0; e < kNumEdges; ++e) net.add_arc(kFirstEdge + e, kSink, per_edge);

  if (net.max_flow(kSource, kSink) != size) return std::nullopt;

  CornerAssignment corner{model, {}};
  for (int k = 0; k < kNumCorners; ++k) {
    for (const auto& [arc, variety] : into_corner[k]) {
      if (net.flow_on(arc) > 0) {
        corner.picks[k] = Variety(variety);
        break;
      }
    }
  }
  EdgeFill fill{model, n, {}, {}};
  for (int e = 0; e < kNumEdges; ++e)
    for (const auto& [arc, variety] : into_edge[e])
      for (int copy = 0; copy < net.flow_on(arc); ++copy) fill.edges[e].emplace_back(variety);
  return assemble_frame(corner, fill);
}

std::optional<FrameSolution> build_frame(const CubeMultiset& s, int n) {
  const int size = frame_size(n);
  if (s.total() < size)
    throw std::invalid_argument("need at least " + std::to_string(size) + " cubes for an " +
                                std::to_string(n) + "-frame, got " + std::to_string(s.total()));
  if (n == 2) {
    auto corner = find_corner_solution(s);
    if (!corner) return std::nullopt;
    return corners_only(*corner);
  }
  for (const auto& model : Variety::all())
    if (auto sol = build_frame_for_model(s, n, model)) return sol;
  return std::nullopt;
}

namespace {

std::string slot_name(const SlotId& slot) {
  if (slot.kind == SlotKind::Corner) return "corner " + std::to_string(slot.index);
  return "edge " + std::to_string(slot.index) + "/" + std::to_string(slot.offset);
}

}  // namespace

FrameCheck verify_frame(const FrameSolution& sol, int n) {
  FrameCheck check;
  auto fail = [&](std::string why) {
    check.ok = false;
    check.violations.push_back(std::move(why));
  };
  if (n < 2) {
    fail("frame size n must be at least 2");
    return check;
  }
  if (sol.n != n) fail("solution was built for n=" + std::to_string(sol.n));

  std::map<SlotId, int> seen;
  const auto& rotations = rotation_group();
  const auto& model_faces = sol.model.canonical();
  for (const auto& p : sol.placements) {
    const bool in_range = p.slot.kind == SlotKind::Corner
                              ? (p.slot.index >= 0 && p.slot.index < kNumCorners && p.slot.offset == 0)
                              : (p.slot.index >= 0 && p.slot.index < kNumEdges && p.slot.offset >= 0 &&
                                 p.slot.offset < n - 2);
    if (!in_range) {
      fail("slot out of range: " + slot_name(p.slot));
      continue;
    }
    if (++seen[p.slot] > 1) fail("slot filled twice: " + slot_name(p.slot));
    if (std::find(rotations.begin(), rotations.end(), p.rotation) == rotations.end()) {
      fail(slot_name(p.slot) + ": placement is not a proper rotation");
      continue;
    }
    const auto placed = p.rotation.apply(p.variety.canonical());
    for (int f : exposed_faces(p.slot)) {
      if (placed[f] != model_faces[f])
        fail(slot_name(p.slot) + ": face " + std::to_string(f) + " shows color " +
             std::to_string(placed[f]) + ", model needs " + std::to_string(model_faces[f]));
    }
  }
  for (int k = 0; k < kNumCorners; ++k)
    if (!seen.count({SlotKind::Corner, k, 0})) fail("missing " + slot_name({SlotKind::Corner, k, 0}));
  for (int e = 0; e < kNumEdges; ++e)
    for (int off = 0; off < n - 2; ++off)
      if (!seen.count({SlotKind::Edge, e, off})) fail("missing " + slot_name({SlotKind::Edge, e, off}));
  return check;
}

FrameCheck verify_frame(const FrameSolution& sol, int n, const CubeMultiset& available) {
  FrameCheck check = verify_frame(sol, n);
  const auto used = sol.used();
  for (const auto& v : Variety::all()) {
    if (used.count(v) > available.count(v)) {
      check.ok = false;
      check.violations.push_back("uses " + std::to_string(used.count(v)) + " of " + v.name() +
                                 " but only " + std::to_string(available.count(v)) + " available");
    }
  }
  return check;
}

EdgeFillCounts edge_fill_counts(const CornerAssignment& corner, const CubeMultiset& s) {
  EdgeFillCounts c{};
  for (int e = 0; e < kNumEdges; ++e) {
    const auto req = edge_requirement(corner.model, e);
    const auto pair = Duad::of(req.first, req.second);
    for (const auto& v : Variety::all())
      if (v.has_adjacent(pair)) c[e] += s.count(v);
  }
  return c;
}

std::optional<std::array<Variety, kNumEdges>> fill_one_per_edge(Variety model, const CubeMultiset& s) {
  const auto counts = edge_fill_counts(CornerAssignment{model, {}}, s);
  std::array<int, kNumEdges> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return counts[a] < counts[b]; });

  CubeMultiset left = s;
  std::array<Variety, kNumEdges> out{};
  for (int e : order) {
    const auto req = edge_requirement(model, e);
    const auto pair = Duad::of(req.first, req.second);
    bool found = false;
    for (const auto& v : Variety::all()) {
      if (left.count(v) > 0 && v.has_adjacent(pair)) {
        left.remove(v);
        out[e] = v;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

}  // namespace hexaframe

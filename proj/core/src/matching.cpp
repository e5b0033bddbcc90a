#include "hexaframe/matching.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hexaframe/flow.hpp"

namespace hexaframe {

const CubeCornerGraph& cube_corner_graph() {
  static const CubeCornerGraph graph = [] {
    CubeCornerGraph g;
    for (const auto& v : Variety::all()) {
      g.triples_of[v.index()] = v.corner_mask();
      for (const auto& t : v.corner_triples()) g.owners_of[t.index()] |= 1u << v.index();
    }
    return g;
  }();
  return graph;
}

int CubeCornerGraph::edge_count() const {
  int edges = 0;
  for (auto m : triples_of) edges += std::popcount(m);
  return edges;
}

int CubeCornerGraph::degree(Variety v) const { return std::popcount(triples_of[v.index()]); }

int CubeCornerGraph::degree_of_triple(int triple) const {
  return std::popcount(owners_of.at(triple));
}

std::array<CornerSlotRequirement, kNumCorners> corner_requirements(Variety model) {
  std::array<CornerSlotRequirement, kNumCorners> out{};
  for (int k = 0; k < kNumCorners; ++k) out[k] = {model, k, model.corner_at(k)};
  return out;
}

CubeMultiset CornerAssignment::used() const {
  CubeMultiset s;
  for (const auto& v : picks) s.add(v);
  return s;
}

bool is_valid_corner_assignment(const CornerAssignment& assignment, const CubeMultiset& available) {
  for (int k = 0; k < kNumCorners; ++k)
    if (!assignment.picks[k].has_corner(assignment.model.corner_at(k))) return false;
  return available.contains(assignment.used());
}

std::optional<CornerAssignment> corner_matching(const CubeMultiset& s, Variety model) {
  constexpr int kSource = 0;
  constexpr int kFirstVariety = 1;
  constexpr int kFirstSlot = kFirstVariety + kNumVarieties;
  constexpr int kSink = kFirstSlot + kNumCorners;
  FlowNetwork net(kSink + 1);

  const auto requirements = corner_requirements(model);
  std::vector<std::pair<int, int>> slot_arcs;  // (arc id, variety)
  std::array<std::vector<std::pair<int, int>>, kNumCorners> arcs_into_slot;
  for (const auto& v : Variety::all()) {
    const int copies = std::min(s.count(v), kNumCorners);
    if (copies == 0) continue;
    net.add_arc(kSource, kFirstVariety + v.index(), copies);
    for (const auto& req : requirements) {
      if (!v.has_corner(req.required)) continue;
      const int arc = net.add_arc(kFirstVariety + v.index(), kFirstSlot + req.slot, 1);
      arcs_into_slot[req.slot].emplace_back(arc, v.index());
    }
  }
  for (int k = 0; k < kNumCorners; ++k) net.add_arc(kFirstSlot + k, kSink, 1);

  if (net.max_flow(kSource, kSink) != kNumCorners) return std::nullopt;

  CornerAssignment out{model, {}};
  for (int k = 0; k < kNumCorners; ++k) {
    for (const auto& [arc, variety] : arcs_into_slot[k]) {
      if (net.flow_on(arc) == 1) {
        out.picks[k] = Variety(variety);
        break;
      }
    }
  }
  return out;
}

std::optional<CornerAssignment> find_corner_solution(const CubeMultiset& s) {
  for (const auto& model : Variety::all())
    if (auto found = corner_matching(s, model)) return found;
  return std::nullopt;
}

namespace corner_kernel {
namespace {

struct Tables {
  std::array<std::array<std::uint8_t, kNumCorners>, kNumVarieties> slot_triple{};
  std::array<std::uint64_t, kNumVarieties> model_mask{};
};

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    for (const auto& v : Variety::all()) {
      for (int k = 0; k < kNumCorners; ++k)
        out.slot_triple[v.index()][k] = static_cast<std::uint8_t>(v.corner_at(k).index());
      out.model_mask[v.index()] = v.corner_mask();
    }
    return out;
  }();
  return t;
}

struct Matcher {
  const PackedCounts& counts;
  std::array<std::uint32_t, kNumCorners> candidates{};
  std::array<std::int8_t, kNumCorners> slot_variety{};
  std::array<std::uint8_t, kNumVarieties> usage{};
  std::uint32_t visited = 0;

  bool augment(int slot) {
    std::uint32_t open = candidates[slot] & ~visited;
    while (open) {
      const int v = std::countr_zero(open);
      open &= open - 1;
      visited |= 1u << v;
      if (usage[v] < counts[v]) {
        ++usage[v];
        slot_variety[slot] = static_cast<std::int8_t>(v);
        return true;
      }
      for (int other = 0; other < kNumCorners; ++other) {
        if (slot_variety[other] == v && augment(other)) {
          slot_variety[slot] = static_cast<std::int8_t>(v);
          return true;
        }
      }
    }
    return false;
  }
};

std::uint32_t present_mask(const PackedCounts& counts) {
  std::uint32_t present = 0;
  for (int v = 0; v < kNumVarieties; ++v)
    if (counts[v]) present |= 1u << v;
  return present;
}

bool feasible_with(const PackedCounts& counts, std::uint32_t present, std::uint64_t corner_union,
                   int model) {
  const auto& t = tables();
  if ((corner_union & t.model_mask[model]) != t.model_mask[model]) return false;
  if (counts[model] >= kNumCorners) return true;
  const auto& owners = cube_corner_graph().owners_of;
  Matcher m{counts};
  m.slot_variety.fill(-1);
  for (int k = 0; k < kNumCorners; ++k) m.candidates[k] = owners[t.slot_triple[model][k]] & present;
  for (int k = 0; k < kNumCorners; ++k) {
    m.visited = 0;
    if (!m.augment(k)) return false;
  }
  return true;
}

}  // namespace

PackedCounts pack(const CubeMultiset& s) {
  PackedCounts out{};
  for (int v = 0; v < kNumVarieties; ++v)
    out[v] = static_cast<std::uint8_t>(std::min(s.counts()[v], kNumCorners));
  return out;
}

std::uint64_t corner_union(const PackedCounts& counts) {
  std::uint64_t u = 0;
  const auto& g = cube_corner_graph();
  for (int v = 0; v < kNumVarieties; ++v)
    if (counts[v]) u |= g.triples_of[v];
  return u;
}

bool feasible(const PackedCounts& counts, std::uint64_t corner_union, int model) {
  return feasible_with(counts, present_mask(counts), corner_union, model);
}

int first_model(const PackedCounts& counts, std::uint64_t corner_union) {
  const std::uint32_t present = present_mask(counts);
  for (int m = 0; m < kNumVarieties; ++m)
    if (feasible_with(counts, present, corner_union, m)) return m;
  return -1;
}

}  // namespace corner_kernel

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

PinnedSubsets::PinnedSubsets(int k, std::vector<Tableau::Position> pins) : k_(k) {
  if (k < 0 || k > kNumVarieties) throw std::invalid_argument("subset size must be in 0..30");
  if (k == 0 && !pins.empty()) throw std::invalid_argument("pins given for an empty subset");
  if (static_cast<int>(pins.size()) > k) throw std::invalid_argument("more pins than subset size");
  std::set<Tableau::Position> seen;
  for (const auto& p : pins) {
    if (p.row < 0 || p.row >= 6 || p.col < 0 || p.col >= 6 || p.row == p.col)
      throw std::invalid_argument("pin must name an off-diagonal tableau cell");
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate pin");
    pinned_.push_back(tableau().cell(p));
  }
  std::sort(pinned_.begin(), pinned_.end());
  for (const auto& v : Variety::all())
    if (!std::binary_search(pinned_.begin(), pinned_.end(), v)) pool_.push_back(v);
}

std::uint64_t PinnedSubsets::size() const {
  if (k_ == 0) return 0;
  return binomial(static_cast<int>(pool_.size()), k_ - static_cast<int>(pinned_.size()));
}

int PinnedSubsets::branch_count() const {
  if (k_ == 0) return 0;
  const int free = k_ - static_cast<int>(pinned_.size());
  if (free == 0) return 1;
  return static_cast<int>(pool_.size()) - free + 1;
}

}  // namespace hexaframe

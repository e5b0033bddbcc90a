#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hexaframe/cube.hpp"
#include "hexaframe/multiset.hpp"
#include "hexaframe/tableau.hpp"

namespace hexaframe {

/// Incidence between the 30 varieties and the 40 corner triples.
struct CubeCornerGraph {
  std::array<std::uint64_t, kNumVarieties> triples_of{};     // bit t: variety owns triple t
  std::array<std::uint32_t, kNumCornerTriples> owners_of{};  // bit v: triple owned by v

  int edge_count() const;
  int degree(Variety v) const;
  int degree_of_triple(int triple) const;
};

const CubeCornerGraph& cube_corner_graph();

struct CornerSlotRequirement {
  Variety model;
  int slot = 0;
  CornerTriple required;
};

std::array<CornerSlotRequirement, kNumCorners> corner_requirements(Variety model);

/// picks[k] is the variety placed at geometric corner k of a corner
/// solution modeled on `model`.
struct CornerAssignment {
  Variety model;
  std::array<Variety, kNumCorners> picks{};

  CubeMultiset used() const;
};

/// Checks both assignment invariants without going through the matcher.
bool is_valid_corner_assignment(const CornerAssignment& assignment, const CubeMultiset& available);

/// Maximum flow from cube copies to the model's eight corner slots; an
/// assignment exists iff the flow reaches 8.
std::optional<CornerAssignment> corner_matching(const CubeMultiset& s, Variety model);

/// First model, in canonical order, admitting a corner solution.
std::optional<CornerAssignment> find_corner_solution(const CubeMultiset& s);

/// Bitmask kernel used by the exhaustive sweeps. Counts are clamped to 8.
namespace corner_kernel {

using PackedCounts = std::array<std::uint8_t, kNumVarieties>;

PackedCounts pack(const CubeMultiset& s);
std::uint64_t corner_union(const PackedCounts& counts);

/// Feasibility of a corner solution modeled on `model`.
bool feasible(const PackedCounts& counts, std::uint64_t corner_union, int model);
/// -1 when no model works.
int first_model(const PackedCounts& counts, std::uint64_t corner_union);
inline int first_model(const PackedCounts& counts) {
  return first_model(counts, corner_union(counts));
}

}  // namespace corner_kernel

/// Subsets of k distinct varieties that contain the varieties at the pinned
/// tableau cells. Pins realize a symmetry reduction: e.g. every 10-subset is
/// S6-equivalent to one holding cells Ab and Ac.
class PinnedSubsets {
 public:
  /// Throws std::invalid_argument for diagonal/duplicate pins, more pins than
  /// k, or k outside 0..30. k == 0 yields an empty stream.
  PinnedSubsets(int k, std::vector<Tableau::Position> pins);

  std::uint64_t size() const;
  std::span<const Variety> pinned() const { return pinned_; }

  /// Work split: branch b holds the subsets whose smallest free variety is
  /// free_pool()[b]. A stream with no free slots has a single branch.
  int branch_count() const;
  std::span<const Variety> free_pool() const { return pool_; }

  template <class Fn>
  void for_each_in_branch(int branch, Fn&& fn) const {
    if (k_ == 0) return;
    std::vector<Variety> subset(pinned_);
    const int free = k_ - static_cast<int>(pinned_.size());
    if (free == 0) {
      fn(std::span<const Variety>(subset));
      return;
    }
    subset.push_back(pool_[branch]);
    recurse(subset, branch + 1, free - 1, fn);
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int b = 0; b < branch_count(); ++b) for_each_in_branch(b, fn);
  }

 private:
  template <class Fn>
  void recurse(std::vector<Variety>& subset, int start, int remaining, Fn& fn) const {
    if (remaining == 0) {
      fn(std::span<const Variety>(subset));
      return;
    }
    const int n = static_cast<int>(pool_.size());
    for (int i = start; i <= n - remaining; ++i) {
      subset.push_back(pool_[i]);
      recurse(subset, i + 1, remaining - 1, fn);
      subset.pop_back();
    }
  }

  int k_;
  std::vector<Variety> pinned_;
  std::vector<Variety> pool_;
};

std::uint64_t binomial(int n, int k);

}  // namespace hexaframe

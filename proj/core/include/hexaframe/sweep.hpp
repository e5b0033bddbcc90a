#pragma once

#include <cstdint>
#include <vector>

#include "hexaframe/multiset.hpp"

namespace hexaframe {

/// `size` distinct varieties, each repeated `repetition` times.
struct ShapeGroup {
  int repetition = 1;
  int size = 1;
};

/// Exhaustive corner-solution sweep over every multiset of a given shape.
/// Varieties are assigned group by group; within a group they are taken in
/// increasing index order, so each multiset is visited once.
struct SweepSpec {
  std::vector<ShapeGroup> groups;
  /// Varieties forced into group 0 (placed before the free picks).
  std::vector<Variety> fixed;
  /// With exactly one fixed variety: keep only assignments whose first free
  /// chunk is lexicographically least under the fixed variety's S6
  /// stabilizer. Sound when the fixed variety represents the whole orbit.
  bool stabilizer_reduction = false;
  /// Count the completions of an already solvable partial multiset instead of
  /// visiting them; corner solvability is monotone under adding cubes.
  bool prune_solvable_prefixes = true;
  /// Stop at the first failure (deterministically the first one in task
  /// order) instead of enumerating everything.
  bool stop_at_first_failure = false;
  std::size_t failure_limit = 64;
  int workers = 1;
};

struct SweepResult {
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::uint64_t solver_calls = 0;
  /// Up to failure_limit failing multisets, sorted.
  std::vector<CubeMultiset> failures;
  bool stopped_early = false;
};

/// Multisets of the shape with no stabilizer reduction:
/// prod_g C(pool_g, size_g), pinned varieties excluded from the first pool.
std::uint64_t shape_case_count(const SweepSpec& spec);

/// Total cubes in the shape.
int shape_total(const std::vector<ShapeGroup>& groups);

SweepResult run_sweep(const SweepSpec& spec);

}  // namespace hexaframe

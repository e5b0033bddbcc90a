#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hexaframe/multiset.hpp"
#include "hexaframe/sweep.hpp"

namespace hexaframe {

struct CheckFailure {
  std::string reason;
  std::optional<CubeMultiset> cubes;

  friend auto operator<=>(const CheckFailure&, const CheckFailure&) = default;
};

struct CheckReport {
  std::string id;
  std::uint64_t cases = 0;
  /// Cases whose negative outcome is the expected one (e.g. inputs below a
  /// guarantee); not failures.
  std::uint64_t expected_negatives = 0;
  /// Sorted.
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

struct CheckOptions {
  std::uint64_t seed = 1;
  /// 0 picks the check's default.
  int trials = 0;
  int workers = 1;
  /// Frame size for fuzz.
  int n = 3;
  /// Called with short progress lines by long sweeps.
  std::function<void(const std::string&)> progress;
};

// Individual checks. Counts quoted in comments are the exact case counts each
// check asserts.

CheckReport check_structure();
/// 435 unordered pairs against the shared-faces and shared-corners tables.
CheckReport check_pair_lemmas();
CheckReport check_tableau();
/// The pentad action of S6: homomorphism, non-inner, transpositions.
CheckReport check_outer_automorphism();
/// Two varieties pinned at Ab and Ac: C(28,8) = 3,108,105 ten-subsets.
CheckReport check_ten_varieties(const CheckOptions& opt = {});
/// Six lemma shapes swept without symmetry reduction, plus a bounded search
/// for a failing 4,4,2,2,2,2 assignment.
CheckReport check_computed_cases(const CheckOptions& opt = {});
CheckReport check_pentad_four();
CheckReport check_counterexample_23();
/// a1 in {6, 7}.
CheckReport check_partition_technical(int a1, const CheckOptions& opt = {});
CheckReport check_residual_partitions(const CheckOptions& opt = {});
CheckReport check_opposite_pair_family();
CheckReport fuzz_guarantees(int n, int trials, std::uint64_t seed, int workers = 1);
/// Single rotation or swap corruptions of built frames.
CheckReport check_mutation_detection(int trials, std::uint64_t seed);
/// count_varieties against the reference values 8, 32, 68, 75, 30.
CheckReport check_variety_counts();

/// The 12 pentads as variety sets: rows then columns of the tableau.
std::vector<std::array<Variety, 5>> pentad_variety_sets();

/// Seven copies of three members of a pentad plus one of the other two.
std::vector<CubeMultiset> counterexample_23_family();

/// Decreasing partitions of `total` with largest part at most `max_part`.
std::vector<std::vector<int>> partitions(int total, int max_part);

/// Groups equal parts of a decreasing partition.
std::vector<ShapeGroup> shape_of(const std::vector<int>& parts);

struct CheckInfo {
  std::string id;
  std::string summary;
  bool long_running = false;
};

std::span<const CheckInfo> check_registry();

/// Throws std::invalid_argument for an unknown id.
CheckReport run_check(std::string_view id, const CheckOptions& opt);

}  // namespace hexaframe

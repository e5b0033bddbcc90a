#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "hexaframe/cube.hpp"
#include "hexaframe/permutation.hpp"

namespace hexaframe {

/// Repetition number per variety.
class CubeMultiset {
 public:
  using Counts = std::array<int, kNumVarieties>;

  CubeMultiset() = default;
  explicit CubeMultiset(const Counts& counts);
  CubeMultiset(std::initializer_list<std::pair<Variety, int>> entries);

  int count(Variety v) const { return counts_[v.index()]; }
  int operator[](Variety v) const { return count(v); }
  const Counts& counts() const { return counts_; }

  void add(Variety v, int k = 1);
  /// Throws std::invalid_argument when fewer than k copies remain.
  void remove(Variety v, int k = 1);
  void set(Variety v, int k);

  int total() const;
  int distinct() const;
  bool empty() const { return total() == 0; }

  /// True when every count of `other` is at most the count here.
  bool contains(const CubeMultiset& other) const;

  /// Each variety repeated by its count, in canonical order.
  std::vector<Variety> expand() const;

  /// Compact "123456x7 124365" description; "{}" when empty.
  std::string to_string() const;

  friend auto operator<=>(const CubeMultiset&, const CubeMultiset&) = default;
  friend CubeMultiset operator+(CubeMultiset a, const CubeMultiset& b);

 private:
  Counts counts_{};
};

/// Recolors every cube of the multiset.
CubeMultiset act_on_multiset(const ColorPermutation& perm, const CubeMultiset& s);

}  // namespace hexaframe

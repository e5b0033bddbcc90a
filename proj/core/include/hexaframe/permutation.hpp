#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hexaframe/cube.hpp"

namespace hexaframe {

/// Bijection on six points stored zero-based. The tag keeps color
/// permutations and pentad permutations from mixing.
template <class Tag>
class Permutation6 {
 public:
  using Images = std::array<std::uint8_t, 6>;

  constexpr Permutation6() : images_{0, 1, 2, 3, 4, 5} {}
  explicit Permutation6(const Images& images) : images_(images) {
    unsigned seen = 0;
    for (auto i : images_) {
      if (i >= 6) throw std::invalid_argument("permutation image out of range");
      seen |= 1u << i;
    }
    if (seen != 0b111111u) throw std::invalid_argument("permutation is not a bijection");
  }

  int operator()(int point) const { return images_[point]; }
  const Images& images() const { return images_; }
  bool is_identity() const { return *this == Permutation6{}; }

  Permutation6 inverse() const {
    Images inv{};
    for (int i = 0; i < 6; ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
    return Permutation6(inv);
  }

  /// Cycle lengths in decreasing order, fixed points included.
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    unsigned seen = 0;
    for (int start = 0; start < 6; ++start) {
      if (seen & (1u << start)) continue;
      int len = 0;
      for (int p = start; !(seen & (1u << p)); p = images_[p]) {
        seen |= 1u << p;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  friend auto operator<=>(const Permutation6&, const Permutation6&) = default;

 private:
  Images images_;
};

/// outer ∘ inner.
template <class Tag>
Permutation6<Tag> compose(const Permutation6<Tag>& outer, const Permutation6<Tag>& inner) {
  typename Permutation6<Tag>::Images out{};
  for (int i = 0; i < 6; ++i) out[i] = static_cast<std::uint8_t>(outer(inner(i)));
  return Permutation6<Tag>(out);
}

struct ColorTag {};
struct PentadTag {};

/// Point i stands for color i + 1.
using ColorPermutation = Permutation6<ColorTag>;
/// Point i is pentad index i.
using PentadPermutation = Permutation6<PentadTag>;

inline Color apply(const ColorPermutation& perm, Color c) {
  return static_cast<Color>(perm(c - 1) + 1);
}

OrientedCube recolor(const ColorPermutation& perm, const OrientedCube& cube);
Duad apply(const ColorPermutation& perm, Duad duad);
int apply_to_syntheme(const ColorPermutation& perm, int syntheme);

/// All 720 color permutations in lexicographic order of images; identity first.
std::span<const ColorPermutation> symmetric_group();
/// Position of perm within symmetric_group().
int s6_index(const ColorPermutation& perm);

/// Parses cycle notation over colors 1..6, e.g. "(1 2)(3 4)", "(1,2,3)", "()".
/// Throws std::invalid_argument on malformed input.
ColorPermutation parse_cycles(std::string_view text);

/// Cycle notation with the given single-character labels; "()" for identity.
std::string to_cycle_string(const std::array<std::uint8_t, 6>& images, std::string_view labels);
inline std::string to_cycle_string(const ColorPermutation& p) {
  return to_cycle_string(p.images(), "123456");
}
inline std::string to_cycle_string(const PentadPermutation& p) {
  return to_cycle_string(p.images(), "ABCDEF");
}

/// "2+2+2" style, fixed points omitted; "1" for identity.
std::string cycle_type_string(const std::vector<int>& type);

}  // namespace hexaframe

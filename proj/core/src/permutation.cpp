#include "hexaframe/permutation.hpp"

#include <algorithm>
#include <cctype>

namespace hexaframe {

OrientedCube recolor(const ColorPermutation& perm, const OrientedCube& cube) {
  OrientedCube out;
  for (int p = 0; p < kNumFaces; ++p) out.faces[p] = apply(perm, cube.faces[p]);
  return out;
}

Duad apply(const ColorPermutation& perm, Duad duad) {
  return Duad::of(apply(perm, duad.lo), apply(perm, duad.hi));
}

int apply_to_syntheme(const ColorPermutation& perm, int syntheme) {
  DuadMask mask = 0;
  for (const auto& d : all_synthemes()[syntheme].duads)
    mask |= DuadMask(1u << apply(perm, d).index());
  return syntheme_index(mask);
}

std::span<const ColorPermutation> symmetric_group() {
  static const std::vector<ColorPermutation> group = [] {
    std::vector<ColorPermutation> out;
    ColorPermutation::Images images{0, 1, 2, 3, 4, 5};
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }();
  return group;
}

int s6_index(const ColorPermutation& perm) {
  // Lehmer code ranks permutations in lexicographic order.
  static constexpr int kFactorial[] = {120, 24, 6, 2, 1, 1};
  int rank = 0;
  unsigned used = 0;
  for (int i = 0; i < 6; ++i) {
    const int v = perm(i);
    int smaller = 0;
    for (int j = 0; j < v; ++j)
      if (!(used & (1u << j))) ++smaller;
    rank += smaller * kFactorial[i];
    used |= 1u << v;
  }
  return rank;
}

ColorPermutation parse_cycles(std::string_view text) {
  ColorPermutation::Images images{0, 1, 2, 3, 4, 5};
  unsigned moved = 0;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw std::invalid_argument("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i == text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] < '1' || text[i] > '6')
        throw std::invalid_argument(std::string("invalid color in cycle: '") + text[i] + "'");
      const int point = text[i] - '1';
      if (moved & (1u << point))
        throw std::invalid_argument("color appears twice in cycle notation");
      moved |= 1u << point;
      cycle.push_back(point);
      ++i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    skip_space();
  }
  return ColorPermutation(images);
}

std::string to_cycle_string(const std::array<std::uint8_t, 6>& images, std::string_view labels) {
  std::string out;
  unsigned seen = 0;
  for (int start = 0; start < 6; ++start) {
    if ((seen & (1u << start)) || images[start] == start) continue;
    out += '(';
    for (int p = start; !(seen & (1u << p)); p = images[p]) {
      seen |= 1u << p;
      if (out.back() != '(') out += ' ';
      out += labels[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string cycle_type_string(const std::vector<int>& type) {
  std::string out;
  for (int len : type) {
    if (len == 1) continue;
    if (!out.empty()) out += '+';
    out += std::to_string(len);
  }
  return out.empty() ? "1" : out;
}

}  // namespace hexaframe

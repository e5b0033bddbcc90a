#include "hexaframe/random.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

namespace hexaframe {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  // seed_seq takes 32-bit words.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

CubeMultiset random_multiset(int total, Rng& rng) {
  if (total < 0) throw std::invalid_argument("random_multiset: negative total");
  // Choose kNumVarieties - 1 bar positions among total + 29 cells (Floyd).
  const int bars = kNumVarieties - 1;
  const int cells = total + bars;
  std::set<int> chosen;
  for (int j = cells - bars; j < cells; ++j) {
    const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  CubeMultiset::Counts counts{};
  int prev = -1;
  int slot = 0;
  for (int b : chosen) {
    counts[slot++] = b - prev - 1;
    prev = b;
  }
  counts[slot] = cells - 1 - prev;
  return CubeMultiset(counts);
}

CubeMultiset random_clustered_multiset(int total, int distinct, Rng& rng) {
  if (distinct < 1 || distinct > kNumVarieties)
    throw std::invalid_argument("random_clustered_multiset: distinct must be in 1..30");
  std::vector<int> ids(kNumVarieties);
  for (int i = 0; i < kNumVarieties; ++i) ids[i] = i;
  for (int i = 0; i < distinct; ++i)
    std::swap(ids[i], ids[i + static_cast<int>(rng.below(static_cast<std::uint64_t>(kNumVarieties - i)))]);
  CubeMultiset s;
  for (int c = 0; c < total; ++c) s.add(Variety(ids[rng.below(static_cast<std::uint64_t>(distinct))]));
  return s;
}

ColorPermutation random_color_permutation(Rng& rng) {
  const auto& group = symmetric_group();
  return group[rng.below(group.size())];
}

}  // namespace hexaframe

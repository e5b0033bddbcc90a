#pragma once

#include <cstdint>
#include <random>

#include "hexaframe/multiset.hpp"
#include "hexaframe/permutation.hpp"

namespace hexaframe {

/// mt19937_64 seeded from (seed, stream). Bounded draws use rejection
/// sampling so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Uniform over all multisets of `total` cubes (stars and bars).
CubeMultiset random_multiset(int total, Rng& rng);

/// `total` cubes drawn from at most `distinct` randomly chosen varieties,
/// each cube uniformly among them.
CubeMultiset random_clustered_multiset(int total, int distinct, Rng& rng);

ColorPermutation random_color_permutation(Rng& rng);

}  // namespace hexaframe

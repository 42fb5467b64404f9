#pragma once

#include <cstddef>
#include <random>

#include "ccindex/game.hpp"

namespace ccindex {

struct InstanceShape {
  std::size_t players = 4;
  std::size_t blocks = 2;
  Weight max_weight = 20;  // weights drawn uniformly from [0, max_weight]
  // Probability that a player joins a block beyond its home block.
  double extra_membership = 0.25;
};

/// Seeded random weighted majority game: weights uniform in
/// [0, max_weight] (at least one positive), quota uniform in [1, w(P)].
WeightedMajorityGame random_game(std::size_t players, Weight max_weight, std::mt19937_64& rng);

/// Random cover with exactly shape.blocks distinct nonempty blocks. Every
/// player gets a home block; extra memberships overlap blocks. Throws
/// InvalidArgument when no such cover exists (blocks > 2^players - 1).
CoalitionConfiguration random_cover(const InstanceShape& shape, std::mt19937_64& rng);

ConfiguredGame random_instance(const InstanceShape& shape, std::mt19937_64& rng);

}  // namespace ccindex

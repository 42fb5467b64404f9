#pragma once

#include <cstddef>
#include <vector>

#include "ccindex/game.hpp"
#include "ccindex/rational.hpp"

namespace ccindex::oracle {

// Largest (c - c^i) + (c_k - 1) the brute-force evaluators will enumerate.
inline constexpr std::size_t kMaxPairBits = 25;

// One (T, R) pair for player i and block C_k together with i's marginal
// contribution f(T u S_R u {i}) - f(T u S_R).
struct MarginalRecord {
  PlayerId player;
  BlockId block;
  std::vector<BlockId> outside_blocks;  // R, a subset of C \ C^i
  std::vector<PlayerId> members;        // T, a subset of C_k \ {i}
  PlayerSet coalition;                  // T u S_R
  int marginal = 0;
};

/// Throws InstanceTooLarge if any (i, k) pair space exceeds kMaxPairBits.
void check_size(const ConfiguredGame& cg);

/// Generalized Banzhaf-Coleman index evaluated term by term from its
/// defining triple sum, with coalitions built as explicit player sets.
std::vector<Rational> oracle_banzhaf_cc(const ConfiguredGame& cg);

/// Configuration index evaluated term by term from its defining triple sum.
std::vector<Rational> oracle_configuration_index(const ConfiguredGame& cg);

/// All pairs on which player i swings, R bitmask ascending then T bitmask
/// ascending. Throws BlockDoesNotContainPlayer or InstanceTooLarge.
std::vector<MarginalRecord> enumerate_significant(const ConfiguredGame& cg, PlayerId i,
                                                  BlockId k);

}  // namespace ccindex::oracle

#pragma once

#include <cstddef>
#include <vector>

#include "ccindex/game.hpp"
#include "ccindex/genfun.hpp"
#include "ccindex/rational.hpp"

namespace ccindex {

// Closed weight range [first, last]. Empty when first > last.
struct SwingWindow {
  Weight first = 0;
  Weight last = 0;

  bool empty() const noexcept { return first > last; }
  bool contains(Weight m) const noexcept { return first <= m && m <= last; }
};

/// Coalitions of weight in [max(0, q - w_i), q - 1] lose without player i
/// and win with it. Empty for null players.
SwingWindow swing_window(const WeightedMajorityGame& game, PlayerId i);

// sigma_rt is r-major: sigma_rt[r][t], r in [0, c - c^i], t in [0, c_k - 1].
struct SwingCounts {
  PlayerId player;
  BlockId block;
  BigInt sigma;
  std::vector<std::vector<BigInt>> sigma_rt;
};

BigInt sum_over_window(const WeightCounts& counts, const SwingWindow& window);
std::vector<std::vector<BigInt>> sum_over_window(const TriCounts& counts,
                                                 const SwingWindow& window);

/// Swing totals for player i and block k, read off both generating
/// functions. Throws BlockDoesNotContainPlayer.
SwingCounts swing_counts(const ConfiguredGame& cg, PlayerId i, BlockId k);

/// Every (player, containing block) entry, ordered by player then block.
std::vector<SwingCounts> swing_table(const ConfiguredGame& cg);

/// r! (c - r - 1)! / c! * t! (c_k - t - 1)! / c_k!
Rational configuration_weight(std::size_t block_count, std::size_t block_size, std::size_t r,
                              std::size_t t);

/// Generalized Banzhaf-Coleman index: sum over C_k in C^i of
/// sigma^{i,k} / 2^{c + c_k - 2}.
std::vector<Rational> banzhaf_coleman_cc(const ConfiguredGame& cg);

/// Configuration index: sum over C_k in C^i and (r, t) of
/// configuration_weight(c, c_k, r, t) * sigma^{i,k}_{r,t}.
std::vector<Rational> configuration_index(const ConfiguredGame& cg);

struct ClassicalIndices {
  std::vector<Rational> banzhaf;         // raw (non-normalized) Banzhaf-Coleman
  std::vector<Rational> shapley_shubik;
};

/// Classical indices obtained by running the configured-game formulas on
/// the single-block configuration {P}.
ClassicalIndices classical_indices(const WeightedMajorityGame& game);

/// Rescales a vector so it sums to 1 (all-zero input is returned as is).
std::vector<Rational> normalized(const std::vector<Rational>& values);

}  // namespace ccindex

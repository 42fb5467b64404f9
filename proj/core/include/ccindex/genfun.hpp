#pragma once

#include <cstddef>
#include <vector>

#include "ccindex/game.hpp"
#include "ccindex/rational.hpp"

namespace ccindex {

// Coefficients of the univariate generating function G_{i,k}(x): coeffs[m]
// counts the (T, R) construction pairs with T a subset of C_k \ {i}, R a set
// of blocks not containing i, and w(T u S_R) = m. Dense over m in [0, w(P)].
struct WeightCounts {
  PlayerId player;
  BlockId block;
  std::vector<BigInt> coeffs;

  const BigInt& at(Weight m) const { return coeffs.at(m); }
  Weight max_weight() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// Coefficients of the trivariate G'_{i,k}(x, u, v), additionally keyed by
// r = |R| in [0, c - c^i] and t = |T| in [0, c_k - 1].
class TriCounts {
 public:
  TriCounts(PlayerId player, BlockId block, Weight max_weight, std::size_t r_extent,
            std::size_t t_extent);

  PlayerId player() const noexcept { return player_; }
  BlockId block() const noexcept { return block_; }
  Weight max_weight() const noexcept { return max_weight_; }
  // Number of admissible r values, c - c^i + 1.
  std::size_t r_extent() const noexcept { return r_extent_; }
  // Number of admissible t values, c_k.
  std::size_t t_extent() const noexcept { return t_extent_; }

  const BigInt& at(Weight m, std::size_t r, std::size_t t) const;
  BigInt& at(Weight m, std::size_t r, std::size_t t);

  // Sum over (r, t) for fixed m.
  BigInt marginal(Weight m) const;

 private:
  std::size_t offset(Weight m, std::size_t r, std::size_t t) const;

  PlayerId player_;
  BlockId block_;
  Weight max_weight_;
  std::size_t r_extent_;
  std::size_t t_extent_;
  std::vector<BigInt> data_;
};

/// Total number of (T, R) pairs for player i and block k:
/// 2^{(c_k - 1) + (c - c^i)}.
BigInt pair_count(const ConfiguredGame& cg, PlayerId i, BlockId k);

/// Throws BlockDoesNotContainPlayer when i is not in C_k, InstanceTooLarge
/// when C \ C^i has more blocks than a 64-bit subset mask can enumerate.
WeightCounts weight_counts(const ConfiguredGame& cg, PlayerId i, BlockId k);

/// Same enumeration as weight_counts, also tracking how many outside blocks
/// (r) and how many members of C_k \ {i} (t) each pair selects.
TriCounts tri_counts(const ConfiguredGame& cg, PlayerId i, BlockId k);

}  // namespace ccindex

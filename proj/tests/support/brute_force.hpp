#pragma once

// Test-only reference computations. Nothing here calls into the
// generating-function engine; every count comes from explicit enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "ccindex/game.hpp"
#include "ccindex/rational.hpp"

namespace ccindex::testing {

using PairKey = std::tuple<Weight, std::size_t, std::size_t>;  // (m, r, t)

// Counts every (T, R) pair for player i and block k by w(T u S_R), |R|, |T|.
inline std::map<PairKey, BigInt> enumerate_pairs(const ConfiguredGame& cg, PlayerId i, BlockId k) {
  const auto& config = cg.config();
  const auto& weights = cg.game().weights();
  std::vector<std::size_t> members;
  for (PlayerId j : config.block(k)) {
    if (j != i) members.push_back(j.index);
  }
  std::vector<std::vector<std::size_t>> outside;
  for (BlockId l : config.non_membership(i)) {
    std::vector<std::size_t> block;
    for (PlayerId j : config.block(l)) block.push_back(j.index);
    outside.push_back(block);
  }

  std::map<PairKey, BigInt> counts;
  for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << outside.size()); ++rm) {
    for (std::uint64_t tm = 0; tm < (std::uint64_t{1} << members.size()); ++tm) {
      std::vector<bool> in(weights.size(), false);
      std::size_t r = 0;
      std::size_t t = 0;
      for (std::size_t l = 0; l < outside.size(); ++l) {
        if (rm >> l & 1) {
          ++r;
          for (std::size_t j : outside[l]) in[j] = true;
        }
      }
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (tm >> j & 1) {
          ++t;
          in[members[j]] = true;
        }
      }
      Weight m = 0;
      for (std::size_t j = 0; j < weights.size(); ++j) {
        if (in[j]) m += weights[j];
      }
      counts[{m, r, t}] += 1;
    }
  }
  return counts;
}

inline Weight subset_weight(std::span<const Weight> weights, std::uint64_t mask) {
  Weight sum = 0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (mask >> j & 1) sum += weights[j];
  }
  return sum;
}

// Raw Banzhaf-Coleman: swings / 2^{p-1}.
inline std::vector<Rational> banzhaf_by_subsets(const WeightedMajorityGame& game) {
  const auto weights = game.weights();
  const std::size_t p = weights.size();
  std::vector<Rational> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    BigInt swings = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
      if (mask >> i & 1) continue;
      const Weight w = subset_weight(weights, mask);
      if (w < game.quota() && w + weights[i] >= game.quota()) ++swings;
    }
    BigInt den = 1;
    den <<= (p - 1);
    out[i] = Rational(swings, den);
  }
  return out;
}

// Shapley-Shubik by walking every ordering and crediting the pivot.
inline std::vector<Rational> shapley_by_orderings(const WeightedMajorityGame& game) {
  const auto weights = game.weights();
  const std::size_t p = weights.size();
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::uint64_t> pivots(p, 0);
  std::uint64_t orderings = 0;
  do {
    ++orderings;
    Weight running = 0;
    for (std::size_t pos = 0; pos < p; ++pos) {
      running += weights[order[pos]];
      if (running >= game.quota()) {
        ++pivots[order[pos]];
        break;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<Rational> out;
  for (std::uint64_t n : pivots) out.emplace_back(BigInt(n), BigInt(orderings));
  return out;
}

// Shapley-Shubik by the subset form sum |S|!(p-|S|-1)!/p! over swings.
inline std::vector<Rational> shapley_by_subsets(const WeightedMajorityGame& game) {
  const auto weights = game.weights();
  const std::size_t p = weights.size();
  auto fact = [](std::size_t n) {
    BigInt f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
  };
  std::vector<Rational> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
      if (mask >> i & 1) continue;
      const Weight w = subset_weight(weights, mask);
      if (w < game.quota() && w + weights[i] >= game.quota()) {
        const auto s = static_cast<std::size_t>(std::popcount(mask));
        out[i] += Rational(fact(s) * fact(p - s - 1), fact(p));
      }
    }
  }
  return out;
}

// True when exchanging players a and b maps the weight vector and the block
// multiset onto themselves.
inline bool interchangeable(const ConfiguredGame& cg, PlayerId a, PlayerId b) {
  const auto& game = cg.game();
  if (game.weight(a) != game.weight(b)) return false;
  const auto& config = cg.config();
  std::vector<std::vector<std::size_t>> original;
  std::vector<std::vector<std::size_t>> swapped;
  for (std::size_t k = 0; k < config.block_count(); ++k) {
    std::vector<std::size_t> block;
    std::vector<std::size_t> image;
    for (PlayerId j : config.block(BlockId{k})) {
      block.push_back(j.index);
      image.push_back(j == a ? b.index : j == b ? a.index : j.index);
    }
    std::sort(image.begin(), image.end());
    original.push_back(block);
    swapped.push_back(image);
  }
  std::sort(original.begin(), original.end());
  std::sort(swapped.begin(), swapped.end());
  return original == swapped;
}

}  // namespace ccindex::testing

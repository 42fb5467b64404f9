#include "ccindex/random_instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ccindex/error.hpp"

namespace ccindex {

WeightedMajorityGame random_game(std::size_t players, Weight max_weight, std::mt19937_64& rng) {
  if (players == 0) throw Error(ErrorCode::InvalidArgument, "need at least one player");
  std::uniform_int_distribution<Weight> weight_dist(0, max_weight);
  std::vector<Weight> weights(players);
  for (auto& w : weights) w = weight_dist(rng);
  if (std::all_of(weights.begin(), weights.end(), [](Weight w) { return w == 0; })) {
    std::uniform_int_distribution<std::size_t> pick(0, players - 1);
    weights[pick(rng)] = std::max<Weight>(1, max_weight);
  }
  const Weight total = std::accumulate(weights.begin(), weights.end(), Weight{0});
  std::uniform_int_distribution<Weight> quota_dist(1, total);
  const Weight quota = quota_dist(rng);
  return WeightedMajorityGame(quota, std::move(weights));
}

CoalitionConfiguration random_cover(const InstanceShape& shape, std::mt19937_64& rng) {
  const std::size_t p = shape.players;
  const std::size_t c = shape.blocks;
  if (p == 0 || c == 0) throw Error(ErrorCode::InvalidArgument, "need players and blocks");
  if (p < 64 && c > (std::size_t{1} << p) - 1) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(c) + " distinct blocks over " +
                                                std::to_string(p) + " players is impossible");
  }

  std::uniform_int_distribution<std::size_t> block_dist(0, c - 1);
  std::uniform_int_distribution<std::size_t> player_dist(0, p - 1);
  std::bernoulli_distribution extra(shape.extra_membership);
  std::bernoulli_distribution coin(0.5);

  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::vector<bool>> member(c, std::vector<bool>(p, false));
    for (std::size_t j = 0; j < p; ++j) member[block_dist(rng)][j] = true;
    for (std::size_t k = 0; k < c; ++k) {
      for (std::size_t j = 0; j < p; ++j) {
        // dense re-draws once the easy construction keeps colliding
        if (extra(rng) || (attempt > 100 && coin(rng))) member[k][j] = true;
      }
      if (std::none_of(member[k].begin(), member[k].end(), [](bool b) { return b; })) {
        member[k][player_dist(rng)] = true;
      }
    }
    std::set<std::vector<bool>> distinct(member.begin(), member.end());
    if (distinct.size() != c) continue;

    std::vector<std::vector<std::size_t>> blocks(c);
    for (std::size_t k = 0; k < c; ++k) {
      for (std::size_t j = 0; j < p; ++j) {
        if (member[k][j]) blocks[k].push_back(j);
      }
    }
    return CoalitionConfiguration(p, std::move(blocks));
  }
  throw Error(ErrorCode::InvalidArgument, "could not draw " + std::to_string(c) +
                                              " distinct blocks over " + std::to_string(p) +
                                              " players");
}

ConfiguredGame random_instance(const InstanceShape& shape, std::mt19937_64& rng) {
  WeightedMajorityGame game = random_game(shape.players, shape.max_weight, rng);
  CoalitionConfiguration config = random_cover(shape, rng);
  return ConfiguredGame(std::move(game), std::move(config));
}

}  // namespace ccindex

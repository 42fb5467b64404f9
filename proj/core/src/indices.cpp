#include "ccindex/indices.hpp"

#include <algorithm>
#include <string>

#include "ccindex/error.hpp"

namespace ccindex {

SwingWindow swing_window(const WeightedMajorityGame& game, PlayerId i) {
  const Weight w = game.weight(i);
  const Weight q = game.quota();
  return SwingWindow{w >= q ? 0 : q - w, q - 1};
}

BigInt sum_over_window(const WeightCounts& counts, const SwingWindow& window) {
  BigInt sum = 0;
  if (window.empty()) return sum;
  const Weight last = std::min(window.last, counts.max_weight());
  for (Weight m = window.first; m <= last; ++m) sum += counts.coeffs[m];
  return sum;
}

std::vector<std::vector<BigInt>> sum_over_window(const TriCounts& counts,
                                                 const SwingWindow& window) {
  std::vector<std::vector<BigInt>> sigma(counts.r_extent(),
                                         std::vector<BigInt>(counts.t_extent()));
  if (window.empty()) return sigma;
  const Weight last = std::min(window.last, counts.max_weight());
  for (Weight m = window.first; m <= last; ++m) {
    for (std::size_t r = 0; r < counts.r_extent(); ++r) {
      for (std::size_t t = 0; t < counts.t_extent(); ++t) sigma[r][t] += counts.at(m, r, t);
    }
  }
  return sigma;
}

SwingCounts swing_counts(const ConfiguredGame& cg, PlayerId i, BlockId k) {
  const SwingWindow window = swing_window(cg.game(), i);
  SwingCounts out{i, k, sum_over_window(weight_counts(cg, i, k), window),
                  sum_over_window(tri_counts(cg, i, k), window)};
  return out;
}

std::vector<SwingCounts> swing_table(const ConfiguredGame& cg) {
  std::vector<SwingCounts> table;
  for (std::size_t i = 0; i < cg.player_count(); ++i) {
    for (BlockId k : cg.config().membership(PlayerId{i})) {
      table.push_back(swing_counts(cg, PlayerId{i}, k));
    }
  }
  return table;
}

Rational configuration_weight(std::size_t block_count, std::size_t block_size, std::size_t r,
                              std::size_t t) {
  if (r >= block_count || t >= block_size) {
    throw Error(ErrorCode::InvalidArgument,
                "configuration weight needs r < c and t < c_k (r=" + std::to_string(r) +
                    ", c=" + std::to_string(block_count) + ", t=" + std::to_string(t) +
                    ", c_k=" + std::to_string(block_size) + ")");
  }
  const BigInt num = factorial(r) * factorial(block_count - r - 1) * factorial(t) *
                     factorial(block_size - t - 1);
  const BigInt den = factorial(block_count) * factorial(block_size);
  return Rational(num, den);
}

std::vector<Rational> banzhaf_coleman_cc(const ConfiguredGame& cg) {
  const auto& config = cg.config();
  const std::size_t c = config.block_count();
  std::vector<Rational> beta(cg.player_count());
  for (std::size_t i = 0; i < cg.player_count(); ++i) {
    const PlayerId player{i};
    const SwingWindow window = swing_window(cg.game(), player);
    if (window.empty()) continue;
    for (BlockId k : config.membership(player)) {
      const BigInt sigma = sum_over_window(weight_counts(cg, player, k), window);
      beta[i] += Rational(sigma, power_of_two(c + config.block_size(k) - 2));
    }
  }
  return beta;
}

std::vector<Rational> configuration_index(const ConfiguredGame& cg) {
  const auto& config = cg.config();
  const std::size_t c = config.block_count();
  std::vector<Rational> phi(cg.player_count());
  for (std::size_t i = 0; i < cg.player_count(); ++i) {
    const PlayerId player{i};
    const SwingWindow window = swing_window(cg.game(), player);
    if (window.empty()) continue;
    for (BlockId k : config.membership(player)) {
      const std::size_t ck = config.block_size(k);
      const auto sigma = sum_over_window(tri_counts(cg, player, k), window);
      for (std::size_t r = 0; r < sigma.size(); ++r) {
        for (std::size_t t = 0; t < sigma[r].size(); ++t) {
          if (sigma[r][t] == 0) continue;
          phi[i] += configuration_weight(c, ck, r, t) * Rational(sigma[r][t]);
        }
      }
    }
  }
  return phi;
}

ClassicalIndices classical_indices(const WeightedMajorityGame& game) {
  const ConfiguredGame cg(game, CoalitionConfiguration::grand_coalition(game.player_count()));
  return ClassicalIndices{banzhaf_coleman_cc(cg), configuration_index(cg)};
}

std::vector<Rational> normalized(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  if (total == 0) return values;
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v / total);
  return out;
}

}  // namespace ccindex

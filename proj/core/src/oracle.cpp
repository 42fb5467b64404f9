#include "ccindex/oracle.hpp"

#include <cstdint>
#include <string>

#include "ccindex/error.hpp"

// Deliberately shares nothing with genfun.cpp: every coalition is built as
// an explicit set and scored with the characteristic function.

namespace ccindex::oracle {

namespace {

void check_pair_space(const ConfiguredGame& cg, PlayerId i, BlockId k) {
  const auto& config = cg.config();
  if (!config.contains(k, i)) {
    throw Error(ErrorCode::BlockDoesNotContainPlayer,
                "player " + std::to_string(i.index + 1) + " is not in block " +
                    std::to_string(k.index + 1));
  }
  const std::size_t bits = config.non_membership(i).size() + config.block_size(k) - 1;
  if (bits > kMaxPairBits) {
    throw Error(ErrorCode::InstanceTooLarge,
                "player " + std::to_string(i.index + 1) + ", block " +
                    std::to_string(k.index + 1) + " spans 2^" + std::to_string(bits) +
                    " pairs (limit 2^" + std::to_string(kMaxPairBits) + ")");
  }
}

// visit(R, T, coalition, marginal) for every pair, R-major.
template <typename Visit>
void for_each_pair(const ConfiguredGame& cg, PlayerId i, BlockId k, Visit&& visit) {
  check_pair_space(cg, i, k);
  const auto& game = cg.game();
  const auto& config = cg.config();

  const auto outside = config.non_membership(i);
  std::vector<PlayerId> members;
  for (PlayerId j : config.block(k)) {
    if (j != i) members.push_back(j);
  }

  std::vector<BlockId> chosen_blocks;
  std::vector<PlayerId> chosen_members;
  for (std::uint64_t rmask = 0; rmask < (std::uint64_t{1} << outside.size()); ++rmask) {
    chosen_blocks.clear();
    PlayerSet blocks_union = game.empty_coalition();
    for (std::size_t l = 0; l < outside.size(); ++l) {
      if (rmask >> l & 1) {
        chosen_blocks.push_back(outside[l]);
        blocks_union |= config.block_set(outside[l]);
      }
    }
    for (std::uint64_t tmask = 0; tmask < (std::uint64_t{1} << members.size()); ++tmask) {
      chosen_members.clear();
      PlayerSet coalition = blocks_union;
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (tmask >> j & 1) {
          chosen_members.push_back(members[j]);
          coalition.set(members[j].index);
        }
      }
      PlayerSet with_i = coalition;
      with_i.set(i.index);
      const int marginal = (game.evaluate(with_i) ? 1 : 0) - (game.evaluate(coalition) ? 1 : 0);
      visit(chosen_blocks, chosen_members, coalition, marginal);
    }
  }
}

BigInt fact(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

void check_size(const ConfiguredGame& cg) {
  for (std::size_t i = 0; i < cg.player_count(); ++i) {
    for (BlockId k : cg.config().membership(PlayerId{i})) check_pair_space(cg, PlayerId{i}, k);
  }
}

std::vector<Rational> oracle_banzhaf_cc(const ConfiguredGame& cg) {
  check_size(cg);
  const std::size_t c = cg.block_count();
  std::vector<Rational> beta(cg.player_count());
  for (std::size_t i = 0; i < cg.player_count(); ++i) {
    for (BlockId k : cg.config().membership(PlayerId{i})) {
      BigInt den = 1;
      den <<= c + cg.config().block_size(k) - 2;
      const Rational term(BigInt(1), den);
      for_each_pair(cg, PlayerId{i}, k, [&](const auto&, const auto&, const auto&, int marginal) {
        if (marginal != 0) beta[i] += term * marginal;
      });
    }
  }
  return beta;
}

std::vector<Rational> oracle_configuration_index(const ConfiguredGame& cg) {
  check_size(cg);
  const std::size_t c = cg.block_count();
  std::vector<Rational> phi(cg.player_count());
  for (std::size_t i = 0; i < cg.player_count(); ++i) {
    for (BlockId k : cg.config().membership(PlayerId{i})) {
      const std::size_t ck = cg.config().block_size(k);
      for_each_pair(cg, PlayerId{i}, k,
                    [&](const std::vector<BlockId>& r_blocks, const std::vector<PlayerId>& t_members,
                        const PlayerSet&, int marginal) {
                      if (marginal == 0) return;
                      const std::size_t r = r_blocks.size();
                      const std::size_t t = t_members.size();
                      const Rational weight(fact(r) * fact(c - r - 1) * fact(t) * fact(ck - t - 1),
                                            fact(c) * fact(ck));
                      phi[i] += weight * marginal;
                    });
    }
  }
  return phi;
}

std::vector<MarginalRecord> enumerate_significant(const ConfiguredGame& cg, PlayerId i,
                                                  BlockId k) {
  std::vector<MarginalRecord> records;
  for_each_pair(cg, i, k,
                [&](const std::vector<BlockId>& r_blocks, const std::vector<PlayerId>& t_members,
                    const PlayerSet& coalition, int marginal) {
                  if (marginal == 1) {
                    records.push_back(MarginalRecord{i, k, r_blocks, t_members, coalition, 1});
                  }
                });
  return records;
}

}  // namespace ccindex::oracle

#include "ccindex/game.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "ccindex/error.hpp"

namespace ccindex {

WeightedMajorityGame::WeightedMajorityGame(Weight quota, std::vector<Weight> weights,
                                           std::vector<std::string> labels)
    : quota_(quota), weights_(std::move(weights)), labels_(std::move(labels)) {
  if (weights_.empty()) throw Error(ErrorCode::EmptyGame, "a game needs at least one player");
  if (quota_ == 0) throw Error(ErrorCode::NonpositiveQuota, "quota must be at least 1");
  if (!labels_.empty() && labels_.size() != weights_.size()) {
    throw Error(ErrorCode::PlayerCountMismatch,
                std::to_string(labels_.size()) + " labels for " +
                    std::to_string(weights_.size()) + " players");
  }
  total_ = std::accumulate(weights_.begin(), weights_.end(), Weight{0});
  if (quota_ > total_) {
    throw Error(ErrorCode::QuotaUnreachable, "quota " + std::to_string(quota_) +
                                                 " exceeds total weight " +
                                                 std::to_string(total_));
  }
}

Weight WeightedMajorityGame::weight(PlayerId i) const {
  if (i.index >= weights_.size()) {
    throw Error(ErrorCode::PlayerOutOfRange, "player " + std::to_string(i.index + 1));
  }
  return weights_[i.index];
}

std::string WeightedMajorityGame::label(PlayerId i) const {
  if (i.index >= weights_.size()) {
    throw Error(ErrorCode::PlayerOutOfRange, "player " + std::to_string(i.index + 1));
  }
  if (labels_.empty()) return "P" + std::to_string(i.index + 1);
  return labels_[i.index];
}

Weight WeightedMajorityGame::weight_of(const PlayerSet& coalition) const {
  if (coalition.size() != weights_.size()) {
    throw Error(ErrorCode::PlayerOutOfRange, "coalition over " + std::to_string(coalition.size()) +
                                                 " players in a " +
                                                 std::to_string(weights_.size()) +
                                                 "-player game");
  }
  Weight sum = 0;
  for (auto j = coalition.find_first(); j != PlayerSet::npos; j = coalition.find_next(j)) {
    sum += weights_[j];
  }
  return sum;
}

Weight WeightedMajorityGame::weight_of(std::span<const PlayerId> coalition) const {
  PlayerSet set(weights_.size());
  for (PlayerId i : coalition) {
    if (i.index >= weights_.size()) {
      throw Error(ErrorCode::PlayerOutOfRange, "player " + std::to_string(i.index + 1));
    }
    set.set(i.index);
  }
  return weight_of(set);
}

bool WeightedMajorityGame::evaluate(const PlayerSet& coalition) const {
  return weight_of(coalition) >= quota_;
}

bool WeightedMajorityGame::evaluate(std::span<const PlayerId> coalition) const {
  return weight_of(coalition) >= quota_;
}

PlayerSet WeightedMajorityGame::grand_coalition() const {
  PlayerSet all(player_count());
  all.set();
  return all;
}

CoalitionConfiguration::CoalitionConfiguration(std::size_t player_count,
                                               std::vector<std::vector<std::size_t>> blocks)
    : player_count_(player_count) {
  if (player_count_ == 0) throw Error(ErrorCode::EmptyGame, "a configuration needs players");
  if (blocks.empty()) throw Error(ErrorCode::NotACover, "configuration has no blocks");

  std::set<std::vector<std::size_t>> seen;
  PlayerSet covered(player_count_);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    auto& members = blocks[k];
    const std::string where = "block " + std::to_string(k + 1);
    if (members.empty()) throw Error(ErrorCode::EmptyBlock, where + " is empty");
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw Error(ErrorCode::DuplicatePlayerInBlock, where + " lists a player twice");
    }
    if (members.back() >= player_count_) {
      throw Error(ErrorCode::PlayerOutOfRange,
                  where + " names player " + std::to_string(members.back() + 1) + " of " +
                      std::to_string(player_count_));
    }
    if (!seen.insert(members).second) {
      throw Error(ErrorCode::DuplicateBlock, where + " repeats an earlier block");
    }

    PlayerSet set(player_count_);
    std::vector<PlayerId> ids;
    ids.reserve(members.size());
    for (std::size_t j : members) {
      set.set(j);
      ids.push_back(PlayerId{j});
    }
    covered |= set;
    blocks_.push_back(std::move(ids));
    block_sets_.push_back(std::move(set));
  }
  if (!covered.all()) {
    covered.flip();
    throw Error(ErrorCode::NotACover,
                "player " + std::to_string(covered.find_first() + 1) + " is in no block");
  }

  membership_.resize(player_count_);
  non_membership_.resize(player_count_);
  for (std::size_t i = 0; i < player_count_; ++i) {
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (block_sets_[k].test(i)) {
        membership_[i].push_back(BlockId{k});
      } else {
        non_membership_[i].push_back(BlockId{k});
      }
    }
  }
}

CoalitionConfiguration CoalitionConfiguration::grand_coalition(std::size_t player_count) {
  std::vector<std::size_t> all(player_count);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return CoalitionConfiguration(player_count, {std::move(all)});
}

CoalitionConfiguration CoalitionConfiguration::singletons(std::size_t player_count) {
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(player_count);
  for (std::size_t i = 0; i < player_count; ++i) blocks.push_back({i});
  return CoalitionConfiguration(player_count, std::move(blocks));
}

std::span<const PlayerId> CoalitionConfiguration::block(BlockId k) const {
  if (k.index >= blocks_.size()) {
    throw Error(ErrorCode::InvalidArgument, "no block " + std::to_string(k.index + 1));
  }
  return blocks_[k.index];
}

const PlayerSet& CoalitionConfiguration::block_set(BlockId k) const {
  if (k.index >= blocks_.size()) {
    throw Error(ErrorCode::InvalidArgument, "no block " + std::to_string(k.index + 1));
  }
  return block_sets_[k.index];
}

bool CoalitionConfiguration::contains(BlockId k, PlayerId i) const {
  check_player(i);
  return block_set(k).test(i.index);
}

std::span<const BlockId> CoalitionConfiguration::membership(PlayerId i) const {
  check_player(i);
  return membership_[i.index];
}

std::span<const BlockId> CoalitionConfiguration::non_membership(PlayerId i) const {
  check_player(i);
  return non_membership_[i.index];
}

bool CoalitionConfiguration::is_partition() const noexcept {
  return std::all_of(membership_.begin(), membership_.end(),
                     [](const auto& m) { return m.size() == 1; });
}

std::optional<std::vector<std::size_t>> CoalitionConfiguration::partition_groups() const {
  std::vector<std::size_t> groups;
  PlayerSet covered(player_count_);
  std::size_t run = 0;
  for (const auto& set : block_sets_) {
    if (covered.intersects(set)) return std::nullopt;
    covered |= set;
    ++run;
    if (covered.all()) {
      groups.push_back(run);
      covered.reset();
      run = 0;
    }
  }
  if (run != 0) return std::nullopt;
  return groups;
}

void CoalitionConfiguration::check_player(PlayerId i) const {
  if (i.index >= player_count_) {
    throw Error(ErrorCode::PlayerOutOfRange, "player " + std::to_string(i.index + 1) + " of " +
                                                 std::to_string(player_count_));
  }
}

ConfiguredGame::ConfiguredGame(WeightedMajorityGame game, CoalitionConfiguration config)
    : game_(std::move(game)), config_(std::move(config)) {
  if (game_.player_count() != config_.player_count()) {
    throw Error(ErrorCode::PlayerCountMismatch,
                "game has " + std::to_string(game_.player_count()) +
                    " players, configuration covers " + std::to_string(config_.player_count()));
  }
}

ConfiguredGame validate(WeightedMajorityGame game, CoalitionConfiguration config) {
  return ConfiguredGame(std::move(game), std::move(config));
}

ConfiguredGame validate(Weight quota, std::vector<Weight> weights,
                        std::vector<std::vector<std::size_t>> blocks,
                        std::vector<std::string> labels) {
  WeightedMajorityGame game(quota, std::move(weights), std::move(labels));
  CoalitionConfiguration config(game.player_count(), std::move(blocks));
  return ConfiguredGame(std::move(game), std::move(config));
}

}  // namespace ccindex

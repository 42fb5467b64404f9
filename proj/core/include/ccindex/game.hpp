#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ccindex {

using Weight = std::uint64_t;

// Zero-based player index. Files and reports use 1-based numbering; the
// conversion happens only in the I/O layer.
struct PlayerId {
  std::size_t index = 0;
  friend auto operator<=>(const PlayerId&, const PlayerId&) = default;
};

// Zero-based position of a block in the configuration's block list.
struct BlockId {
  std::size_t index = 0;
  friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

using PlayerSet = boost::dynamic_bitset<>;

/// Weighted majority game [q; w_1, ..., w_p]: a coalition wins iff its
/// total weight reaches the quota.
class WeightedMajorityGame {
 public:
  // Throws EmptyGame, NonpositiveQuota or QuotaUnreachable.
  WeightedMajorityGame(Weight quota, std::vector<Weight> weights,
                       std::vector<std::string> labels = {});

  Weight quota() const noexcept { return quota_; }
  std::size_t player_count() const noexcept { return weights_.size(); }
  std::span<const Weight> weights() const noexcept { return weights_; }
  Weight weight(PlayerId i) const;
  Weight total_weight() const noexcept { return total_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Falls back to "P<n>" (1-based) when the game carries no labels.
  std::string label(PlayerId i) const;

  Weight weight_of(const PlayerSet& coalition) const;
  Weight weight_of(std::span<const PlayerId> coalition) const;

  // Characteristic function: true iff w(coalition) >= quota.
  bool evaluate(const PlayerSet& coalition) const;
  bool evaluate(std::span<const PlayerId> coalition) const;

  PlayerSet empty_coalition() const { return PlayerSet(player_count()); }
  PlayerSet grand_coalition() const;

 private:
  Weight quota_;
  std::vector<Weight> weights_;
  std::vector<std::string> labels_;
  Weight total_ = 0;
};

/// A cover of {0, ..., p-1} by nonempty, pairwise distinct blocks. Blocks
/// may overlap. Block order is kept exactly as given; members within a block
/// are stored in ascending order.
class CoalitionConfiguration {
 public:
  // Throws EmptyGame, EmptyBlock, DuplicatePlayerInBlock, DuplicateBlock,
  // PlayerOutOfRange or NotACover.
  CoalitionConfiguration(std::size_t player_count,
                         std::vector<std::vector<std::size_t>> blocks);

  // {P}: the classical game without any structure.
  static CoalitionConfiguration grand_coalition(std::size_t player_count);
  // {{1}, ..., {p}}.
  static CoalitionConfiguration singletons(std::size_t player_count);

  std::size_t player_count() const noexcept { return player_count_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  std::span<const PlayerId> block(BlockId k) const;
  const PlayerSet& block_set(BlockId k) const;
  std::size_t block_size(BlockId k) const { return block(k).size(); }
  bool contains(BlockId k, PlayerId i) const;

  // C^i, the blocks containing player i, in configuration order. Never empty.
  std::span<const BlockId> membership(PlayerId i) const;
  // C \ C^i, in configuration order. Empty when i belongs to every block.
  std::span<const BlockId> non_membership(PlayerId i) const;
  std::size_t membership_count(PlayerId i) const { return membership(i).size(); }

  bool is_partition() const noexcept;

  // When the block list splits into consecutive runs that are each a
  // partition of the player set (e.g. two partitions concatenated), returns
  // the run lengths. Otherwise nullopt.
  std::optional<std::vector<std::size_t>> partition_groups() const;

 private:
  void check_player(PlayerId i) const;

  std::size_t player_count_;
  std::vector<std::vector<PlayerId>> blocks_;
  std::vector<PlayerSet> block_sets_;
  std::vector<std::vector<BlockId>> membership_;
  std::vector<std::vector<BlockId>> non_membership_;
};

/// A weighted majority game paired with a coalition configuration over the
/// same player set. Immutable once built.
class ConfiguredGame {
 public:
  // Throws PlayerCountMismatch when the two player sets differ.
  ConfiguredGame(WeightedMajorityGame game, CoalitionConfiguration config);

  const WeightedMajorityGame& game() const noexcept { return game_; }
  const CoalitionConfiguration& config() const noexcept { return config_; }
  std::size_t player_count() const noexcept { return game_.player_count(); }
  std::size_t block_count() const noexcept { return config_.block_count(); }

 private:
  WeightedMajorityGame game_;
  CoalitionConfiguration config_;
};

ConfiguredGame validate(WeightedMajorityGame game, CoalitionConfiguration config);

// Builds and checks all three objects from raw (0-based) data.
ConfiguredGame validate(Weight quota, std::vector<Weight> weights,
                        std::vector<std::vector<std::size_t>> blocks,
                        std::vector<std::string> labels = {});

}  // namespace ccindex

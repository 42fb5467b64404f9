#include <gtest/gtest.h>

#include <random>

#include "ccindex/error.hpp"
#include "ccindex/game.hpp"
#include "support/fixtures.hpp"

namespace ccindex {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(Validate, AcceptsExample35) {
  const ConfiguredGame cg = testing::example35();
  EXPECT_EQ(cg.player_count(), 4u);
  EXPECT_EQ(cg.block_count(), 3u);
  EXPECT_EQ(cg.game().quota(), 3u);
  EXPECT_EQ(cg.game().total_weight(), 6u);
}

TEST(Validate, AcceptsMinimalGame) {
  const ConfiguredGame cg = validate(1, {1}, {{0}});
  EXPECT_EQ(cg.player_count(), 1u);
  EXPECT_EQ(cg.block_count(), 1u);
}

TEST(Validate, RejectsBadInput) {
  EXPECT_EQ(code_of([] { validate(3, {1, 1}, {{0}, {1}}); }), ErrorCode::QuotaUnreachable);
  EXPECT_EQ(code_of([] { validate(0, {1, 1}, {{0, 1}}); }), ErrorCode::NonpositiveQuota);
  EXPECT_EQ(code_of([] { validate(1, {}, {}); }), ErrorCode::EmptyGame);
  EXPECT_EQ(code_of([] { validate(1, {1, 1}, {{0, 1}, {}}); }), ErrorCode::EmptyBlock);
  EXPECT_EQ(code_of([] { validate(1, {1, 1}, {{0}}); }), ErrorCode::NotACover);
  EXPECT_EQ(code_of([] { validate(1, {1, 1}, {{0, 2}, {1}}); }), ErrorCode::PlayerOutOfRange);
  EXPECT_EQ(code_of([] { validate(1, {1, 1}, {{0, 1}, {1, 0}}); }), ErrorCode::DuplicateBlock);
  EXPECT_EQ(code_of([] { validate(1, {1, 1}, {{0, 0, 1}}); }),
            ErrorCode::DuplicatePlayerInBlock);
  EXPECT_EQ(code_of([] { validate(1, {1, 1}, {}); }), ErrorCode::NotACover);
  EXPECT_EQ(code_of([] {
              validate(WeightedMajorityGame(1, {1, 1}), CoalitionConfiguration(3, {{0, 1, 2}}));
            }),
            ErrorCode::PlayerCountMismatch);
}

TEST(Validate, KeepsBlockOrderAndSortsMembers) {
  const ConfiguredGame cg = validate(2, {1, 1, 1}, {{2, 0}, {1}});
  const auto first = cg.config().block(BlockId{0});
  ASSERT_EQ(first.size(), 2u);
  EXPECT_EQ(first[0], PlayerId{0});
  EXPECT_EQ(first[1], PlayerId{2});
  EXPECT_EQ(cg.config().block(BlockId{1})[0], PlayerId{1});
}

TEST(Validate, AcceptsGrandCoalitionAlongsideOtherBlocks) {
  const ConfiguredGame cg = validate(2, {1, 1, 1}, {{0, 1, 2}, {0}});
  EXPECT_EQ(cg.config().membership_count(PlayerId{0}), 2u);
  EXPECT_TRUE(cg.config().non_membership(PlayerId{0}).empty());
}

TEST(Evaluate, WeightAgainstQuota) {
  const auto cg = testing::example35();
  const auto& game = cg.game();
  const std::vector<PlayerId> t{PlayerId{1}, PlayerId{2}};
  EXPECT_TRUE(game.evaluate(t));
  EXPECT_FALSE(game.evaluate(game.empty_coalition()));
  EXPECT_TRUE(game.evaluate(game.grand_coalition()));
  const std::vector<PlayerId> bad{PlayerId{4}};
  EXPECT_EQ(code_of([&] { game.evaluate(bad); }), ErrorCode::PlayerOutOfRange);
}

TEST(Evaluate, Eu28GrandCoalitionWins) {
  const auto cg = testing::eu28();
  EXPECT_EQ(cg.game().total_weight(), 751u);
  EXPECT_EQ(cg.game().quota(), 376u);
  EXPECT_TRUE(cg.game().evaluate(cg.game().grand_coalition()));
}

TEST(Evaluate, MonotoneOnNestedCoalitions) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    std::uniform_int_distribution<std::size_t> players(1, 12);
    const std::size_t p = players(rng);
    std::uniform_int_distribution<Weight> wd(0, 15);
    std::vector<Weight> weights(p);
    Weight total = 0;
    for (auto& w : weights) total += (w = wd(rng));
    if (total == 0) continue;
    std::uniform_int_distribution<Weight> qd(1, total);
    const WeightedMajorityGame game(qd(rng), weights);
    std::bernoulli_distribution coin(0.5);
    PlayerSet small(p);
    for (std::size_t j = 0; j < p; ++j) small[j] = coin(rng);
    PlayerSet big = small;
    for (std::size_t j = 0; j < p; ++j) big[j] = big[j] || coin(rng);
    EXPECT_LE(game.evaluate(small), game.evaluate(big));
    EXPECT_TRUE(game.evaluate(game.grand_coalition()));
  }
}

TEST(Membership, Example35) {
  const auto cg = testing::example35();
  const auto& config = cg.config();
  const auto m3 = config.membership(PlayerId{2});
  ASSERT_EQ(m3.size(), 3u);
  EXPECT_EQ(m3[0], BlockId{0});
  EXPECT_EQ(m3[2], BlockId{2});
  EXPECT_TRUE(config.non_membership(PlayerId{2}).empty());

  const auto m1 = config.membership(PlayerId{0});
  ASSERT_EQ(m1.size(), 1u);
  EXPECT_EQ(m1[0], BlockId{0});
  const auto out1 = config.non_membership(PlayerId{0});
  ASSERT_EQ(out1.size(), 2u);
  EXPECT_EQ(out1[0], BlockId{1});
  EXPECT_EQ(out1[1], BlockId{2});
  EXPECT_EQ(code_of([&] { config.membership(PlayerId{4}); }), ErrorCode::PlayerOutOfRange);
}

TEST(Membership, SingletonsAndRecovery) {
  const auto config = CoalitionConfiguration::singletons(5);
  EXPECT_TRUE(config.is_partition());
  for (std::size_t i = 0; i < 5; ++i) {
    const auto m = config.membership(PlayerId{i});
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0], BlockId{i});
  }

  const auto cg = testing::eu28();
  std::vector<bool> seen(cg.block_count(), false);
  for (std::size_t i = 0; i < cg.player_count(); ++i) {
    ASSERT_FALSE(cg.config().membership(PlayerId{i}).empty());
    for (BlockId k : cg.config().membership(PlayerId{i})) seen[k.index] = true;
  }
  for (bool b : seen) EXPECT_TRUE(b);
}

TEST(Configuration, PartitionGroups) {
  const CoalitionConfiguration two(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  EXPECT_FALSE(two.is_partition());
  ASSERT_TRUE(two.partition_groups().has_value());
  EXPECT_EQ(*two.partition_groups(), (std::vector<std::size_t>{2, 2}));

  EXPECT_FALSE(testing::example35().config().partition_groups().has_value());
  EXPECT_TRUE(CoalitionConfiguration::grand_coalition(3).is_partition());
}

}  // namespace
}  // namespace ccindex

#include "ccindex/genfun.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "ccindex/error.hpp"

namespace ccindex {

namespace {

constexpr std::size_t kMaxOutsideBlocks = 62;

// The pieces of the (T, R) enumeration that do not depend on R.
struct PairLayout {
  std::vector<PlayerId> members;        // C_k \ {i}, ascending
  std::vector<const PlayerSet*> outside;  // C \ C^i, configuration order
};

PairLayout make_layout(const ConfiguredGame& cg, PlayerId i, BlockId k) {
  const auto& config = cg.config();
  if (!config.contains(k, i)) {
    throw Error(ErrorCode::BlockDoesNotContainPlayer,
                "player " + std::to_string(i.index + 1) + " is not in block " +
                    std::to_string(k.index + 1));
  }
  PairLayout layout;
  for (PlayerId j : config.block(k)) {
    if (j != i) layout.members.push_back(j);
  }
  const auto outside = config.non_membership(i);
  if (outside.size() > kMaxOutsideBlocks) {
    throw Error(ErrorCode::InstanceTooLarge,
                std::to_string(outside.size()) + " blocks outside C^" +
                    std::to_string(i.index + 1) + " exceed the subset-mask limit");
  }
  for (BlockId l : outside) layout.outside.push_back(&config.block_set(l));
  return layout;
}

// Calls visit(union_weight, r, covered) once per R, in ascending bitmask
// order, where covered marks which members of C_k \ {i} lie inside S_R.
template <typename Visit>
void for_each_outside_subset(const WeightedMajorityGame& game, const PairLayout& layout,
                             Visit&& visit) {
  const std::size_t n = layout.outside.size();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  PlayerSet united(game.player_count());
  boost::dynamic_bitset<> covered(layout.members.size());
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    united.reset();
    for (std::size_t l = 0; l < n; ++l) {
      if (mask & (std::uint64_t{1} << l)) united |= *layout.outside[l];
    }
    for (std::size_t j = 0; j < layout.members.size(); ++j) {
      covered[j] = united.test(layout.members[j].index);
    }
    const auto r = static_cast<std::size_t>(std::popcount(mask));
    visit(game.weight_of(united), r, covered);
  }
}

// Product over j of (1 + x^{delta_j}), where delta_j is zero for members
// already inside S_R. Entry m is the coefficient of x^m.
std::vector<BigInt> fold_members(const WeightedMajorityGame& game, const PairLayout& layout,
                                 const boost::dynamic_bitset<>& covered) {
  Weight span = 0;
  for (std::size_t j = 0; j < layout.members.size(); ++j) {
    if (!covered[j]) span += game.weight(layout.members[j]);
  }
  std::vector<BigInt> poly(span + 1);
  poly[0] = 1;
  Weight reach = 0;
  for (std::size_t j = 0; j < layout.members.size(); ++j) {
    if (covered[j]) {
      for (Weight m = 0; m <= reach; ++m) poly[m] <<= 1;
      continue;
    }
    const Weight delta = game.weight(layout.members[j]);
    if (delta == 0) {
      for (Weight m = 0; m <= reach; ++m) poly[m] <<= 1;
      continue;
    }
    for (Weight m = reach + 1; m-- > 0;) {
      if (poly[m] != 0) poly[m + delta] += poly[m];
    }
    reach += delta;
  }
  return poly;
}

// Product over j of (1 + x^{delta_j} u); row-major (m, t) with t in
// [0, members.size()].
struct MemberFold {
  Weight span = 0;
  std::size_t t_extent = 1;
  std::vector<BigInt> data;

  const BigInt& at(Weight m, std::size_t t) const { return data[m * t_extent + t]; }
  BigInt& at(Weight m, std::size_t t) { return data[m * t_extent + t]; }
};

MemberFold fold_members_marked(const WeightedMajorityGame& game, const PairLayout& layout,
                               const boost::dynamic_bitset<>& covered) {
  MemberFold fold;
  fold.t_extent = layout.members.size() + 1;
  for (std::size_t j = 0; j < layout.members.size(); ++j) {
    if (!covered[j]) fold.span += game.weight(layout.members[j]);
  }
  fold.data.resize((fold.span + 1) * fold.t_extent);
  fold.at(0, 0) = 1;
  Weight reach = 0;
  for (std::size_t j = 0; j < layout.members.size(); ++j) {
    const Weight delta = covered[j] ? 0 : game.weight(layout.members[j]);
    // t can grow by at most one per member, so after j members t <= j.
    for (Weight m = reach + 1; m-- > 0;) {
      for (std::size_t t = j + 1; t-- > 0;) {
        const BigInt& src = fold.at(m, t);
        if (src != 0) fold.at(m + delta, t + 1) += src;
      }
    }
    reach += delta;
  }
  return fold;
}

}  // namespace

TriCounts::TriCounts(PlayerId player, BlockId block, Weight max_weight, std::size_t r_extent,
                     std::size_t t_extent)
    : player_(player),
      block_(block),
      max_weight_(max_weight),
      r_extent_(r_extent),
      t_extent_(t_extent),
      data_((max_weight + 1) * r_extent * t_extent) {}

std::size_t TriCounts::offset(Weight m, std::size_t r, std::size_t t) const {
  if (m > max_weight_ || r >= r_extent_ || t >= t_extent_) {
    throw Error(ErrorCode::InvalidArgument, "coefficient index (" + std::to_string(m) + "," +
                                                std::to_string(r) + "," + std::to_string(t) +
                                                ") out of range");
  }
  return (m * r_extent_ + r) * t_extent_ + t;
}

const BigInt& TriCounts::at(Weight m, std::size_t r, std::size_t t) const {
  return data_[offset(m, r, t)];
}

BigInt& TriCounts::at(Weight m, std::size_t r, std::size_t t) { return data_[offset(m, r, t)]; }

BigInt TriCounts::marginal(Weight m) const {
  BigInt sum = 0;
  const std::size_t base = offset(m, 0, 0);
  for (std::size_t n = 0; n < r_extent_ * t_extent_; ++n) sum += data_[base + n];
  return sum;
}

BigInt pair_count(const ConfiguredGame& cg, PlayerId i, BlockId k) {
  const auto& config = cg.config();
  if (!config.contains(k, i)) {
    throw Error(ErrorCode::BlockDoesNotContainPlayer,
                "player " + std::to_string(i.index + 1) + " is not in block " +
                    std::to_string(k.index + 1));
  }
  return power_of_two((config.block_size(k) - 1) + config.non_membership(i).size());
}

WeightCounts weight_counts(const ConfiguredGame& cg, PlayerId i, BlockId k) {
  const PairLayout layout = make_layout(cg, i, k);
  const auto& game = cg.game();

  WeightCounts out{i, k, std::vector<BigInt>(game.total_weight() + 1)};
  std::map<boost::dynamic_bitset<>, std::vector<BigInt>> folds;
  for_each_outside_subset(game, layout, [&](Weight base, std::size_t,
                                            const boost::dynamic_bitset<>& covered) {
    auto it = folds.find(covered);
    if (it == folds.end()) it = folds.emplace(covered, fold_members(game, layout, covered)).first;
    const auto& poly = it->second;
    for (Weight m = 0; m < poly.size(); ++m) {
      if (poly[m] != 0) out.coeffs[base + m] += poly[m];
    }
  });
  return out;
}

TriCounts tri_counts(const ConfiguredGame& cg, PlayerId i, BlockId k) {
  const PairLayout layout = make_layout(cg, i, k);
  const auto& game = cg.game();

  TriCounts out(i, k, game.total_weight(), layout.outside.size() + 1, layout.members.size() + 1);
  std::map<boost::dynamic_bitset<>, MemberFold> folds;
  for_each_outside_subset(game, layout, [&](Weight base, std::size_t r,
                                            const boost::dynamic_bitset<>& covered) {
    auto it = folds.find(covered);
    if (it == folds.end()) {
      it = folds.emplace(covered, fold_members_marked(game, layout, covered)).first;
    }
    const MemberFold& fold = it->second;
    for (Weight m = 0; m <= fold.span; ++m) {
      for (std::size_t t = 0; t < fold.t_extent; ++t) {
        const BigInt& n = fold.at(m, t);
        if (n != 0) out.at(base + m, r, t) += n;
      }
    }
  });
  return out;
}

}  // namespace ccindex

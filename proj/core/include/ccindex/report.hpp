#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ccindex/game.hpp"
#include "ccindex/rational.hpp"

namespace ccindex {

enum class IndexSelection { Banzhaf, Configuration, Both };
enum class Method { GeneratingFunction, Oracle };

struct PlayerResult {
  PlayerId player;
  std::string label;
  Weight weight = 0;
  std::vector<BlockId> blocks;  // C^i
  std::optional<Rational> beta;
  std::optional<Rational> phi;
};

struct IndexReport {
  std::vector<PlayerResult> players;
  // Consecutive partition runs of the block list, when the configuration
  // decomposes that way; used to print one membership column per run.
  std::optional<std::vector<std::size_t>> partition_groups;
};

IndexReport compute_report(const ConfiguredGame& cg, IndexSelection selection,
                           Method method = Method::GeneratingFunction);

struct RenderOptions {
  int precision = 9;
  bool exact = false;
  bool normalize_banzhaf = false;
};

std::string render_table(const IndexReport& report, const RenderOptions& options);
// Columns player,label,weight,beta,phi (only the computed indices appear).
// With options.exact the index columns hold num/den strings.
std::string render_csv(const IndexReport& report, const RenderOptions& options);
std::string render_json(const IndexReport& report, const RenderOptions& options);

/// Coefficient tables of every (i, k) as CSV rows i,k,m,r,t,count; i and k
/// are 1-based, r and t are empty on univariate rows. Zero rows omitted.
std::string dump_counts_csv(const ConfiguredGame& cg);

}  // namespace ccindex

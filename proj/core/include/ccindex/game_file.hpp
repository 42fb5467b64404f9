#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ccindex/game.hpp"

namespace ccindex {

// On-disk game description:
//   {"quota": int, "weights": [int, ...], "labels": ["...", ...]?,
//    "configuration": [[int, ...], ...]}
// Player numbers in "configuration" are 1-based.
struct GameFile {
  Weight quota = 0;
  std::vector<Weight> weights;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> configuration;

  friend bool operator==(const GameFile&, const GameFile&) = default;
};

/// Throws ParseError (with line and column for malformed JSON) when the text
/// does not match the schema. Semantic checks happen in to_configured_game.
GameFile parse_game_file(std::string_view text);

/// Throws IoError when the file cannot be read, otherwise as parse_game_file.
GameFile read_game_file(const std::filesystem::path& path);

std::string serialize(const GameFile& file);

/// Converts to 0-based indices and runs full validation.
ConfiguredGame to_configured_game(const GameFile& file);

GameFile to_game_file(const ConfiguredGame& cg);

}  // namespace ccindex

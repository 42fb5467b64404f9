#include "ccindex/game_file.hpp"

#include <fstream>
#include <sstream>

#include "ccindex/error.hpp"
#include "json.hpp"

namespace ccindex {

namespace {

using nlohmann::json;

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t n = 0; n < byte && n < text.size(); ++n) {
    if (text[n] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::uint64_t as_unsigned(const json& value, const std::string& where) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer()) {
    throw Error(ErrorCode::ParseError, where + " must be nonnegative, got " + value.dump());
  }
  throw Error(ErrorCode::ParseError, where + " must be an integer, got " + value.dump());
}

const json& require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw Error(ErrorCode::ParseError, std::string("missing required field \"") + key + "\"");
  }
  return *it;
}

}  // namespace

GameFile parse_game_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON at " + position_of(text, e.byte) + ": " +
                                           e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top level must be a JSON object");

  GameFile file;
  const json& quota = require(doc, "quota");
  if (quota.is_number_integer() && !quota.is_number_unsigned()) {
    throw Error(ErrorCode::NonpositiveQuota, "quota " + quota.dump() + " is negative");
  }
  file.quota = as_unsigned(quota, "quota");

  const json& weights = require(doc, "weights");
  if (!weights.is_array()) throw Error(ErrorCode::ParseError, "\"weights\" must be an array");
  for (std::size_t n = 0; n < weights.size(); ++n) {
    file.weights.push_back(as_unsigned(weights[n], "weights[" + std::to_string(n) + "]"));
  }

  if (const auto it = doc.find("labels"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw Error(ErrorCode::ParseError, "\"labels\" must be an array");
    for (std::size_t n = 0; n < it->size(); ++n) {
      if (!(*it)[n].is_string()) {
        throw Error(ErrorCode::ParseError, "labels[" + std::to_string(n) + "] must be a string");
      }
      file.labels.push_back((*it)[n].get<std::string>());
    }
  }

  const json& config = require(doc, "configuration");
  if (!config.is_array()) {
    throw Error(ErrorCode::ParseError, "\"configuration\" must be an array of arrays");
  }
  for (std::size_t k = 0; k < config.size(); ++k) {
    const std::string where = "configuration[" + std::to_string(k) + "]";
    if (!config[k].is_array()) throw Error(ErrorCode::ParseError, where + " must be an array");
    std::vector<std::size_t> block;
    for (std::size_t n = 0; n < config[k].size(); ++n) {
      block.push_back(as_unsigned(config[k][n], where + "[" + std::to_string(n) + "]"));
    }
    file.configuration.push_back(std::move(block));
  }
  return file;
}

GameFile read_game_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  try {
    return parse_game_file(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string serialize(const GameFile& file) {
  json doc;
  doc["quota"] = file.quota;
  doc["weights"] = file.weights;
  if (!file.labels.empty()) doc["labels"] = file.labels;
  doc["configuration"] = file.configuration;
  return doc.dump(2) + "\n";
}

ConfiguredGame to_configured_game(const GameFile& file) {
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(file.configuration.size());
  for (std::size_t k = 0; k < file.configuration.size(); ++k) {
    std::vector<std::size_t> block;
    for (std::size_t player : file.configuration[k]) {
      if (player == 0) {
        throw Error(ErrorCode::PlayerOutOfRange,
                    "configuration[" + std::to_string(k) + "] uses player 0; players are 1-based");
      }
      block.push_back(player - 1);
    }
    blocks.push_back(std::move(block));
  }
  return validate(file.quota, file.weights, std::move(blocks), file.labels);
}

GameFile to_game_file(const ConfiguredGame& cg) {
  GameFile file;
  file.quota = cg.game().quota();
  file.weights.assign(cg.game().weights().begin(), cg.game().weights().end());
  file.labels = cg.game().labels();
  for (std::size_t k = 0; k < cg.block_count(); ++k) {
    std::vector<std::size_t> block;
    for (PlayerId j : cg.config().block(BlockId{k})) block.push_back(j.index + 1);
    file.configuration.push_back(std::move(block));
  }
  return file;
}

}  // namespace ccindex

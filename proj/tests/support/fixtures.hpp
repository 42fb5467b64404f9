#pragma once

#include <array>
#include <string>

#include "ccindex/game.hpp"
#include "ccindex/game_file.hpp"

#ifndef CCINDEX_TEST_DATA_DIR
#error "CCINDEX_TEST_DATA_DIR must point at the bundled datasets"
#endif

namespace ccindex::testing {

inline std::string data_path(const std::string& name) {
  return std::string(CCINDEX_TEST_DATA_DIR) + "/" + name;
}

// [3; 1,2,2,1] with C = {{1,2,3},{2,3},{3,4}}.
inline ConfiguredGame example35() {
  return validate(3, {1, 2, 2, 1}, {{0, 1, 2}, {1, 2}, {2, 3}});
}

inline ConfiguredGame eu28() { return to_configured_game(read_game_file(data_path("eu28.json"))); }

struct PublishedRow {
  const char* state;
  unsigned seats;
  const char* beta;
  const char* phi;
};

// Published EU-28 (2015) results, 9 decimal places.
inline constexpr std::array<PublishedRow, 28> kEu28Table{{
    {"Austria", 18, "0.039794922", "0.025046296"},
    {"Belgium", 21, "0.045776367", "0.030555556"},
    {"Bulgaria", 17, "0.037109375", "0.023750000"},
    {"Croatia", 11, "0.024902344", "0.016289683"},
    {"Cyprus", 6, "0.009277344", "0.009834656"},
    {"Czech Republic", 21, "0.045776367", "0.030555556"},
    {"Denmark", 13, "0.019287109", "0.009338624"},
    {"Estonia", 6, "0.012207031", "0.008710317"},
    {"Finland", 13, "0.012207031", "0.007037037"},
    {"France", 74, "0.157226562", "0.101243386"},
    {"Germany", 96, "0.208007812", "0.138511905"},
    {"Greece", 21, "0.033325195", "0.027996032"},
    {"Hungary", 21, "0.044433594", "0.029345238"},
    {"Ireland", 11, "0.014892578", "0.007645503"},
    {"Italy", 73, "0.100097656", "0.094914021"},
    {"Latvia", 8, "0.014648438", "0.009900794"},
    {"Lithuania", 11, "0.024902344", "0.016289683"},
    {"Luxembourg", 6, "0.015380859", "0.013068783"},
    {"Malta", 6, "0.009277344", "0.009834656"},
    {"Netherlands", 26, "0.060058594", "0.035350529"},
    {"Poland", 51, "0.113281250", "0.077757937"},
    {"Portugal", 21, "0.033325195", "0.027996032"},
    {"Romania", 32, "0.070312500", "0.051289683"},
    {"Slovakia", 13, "0.024047852", "0.016117725"},
    {"Slovenia", 8, "0.021118164", "0.015185185"},
    {"Spain", 54, "0.071166992", "0.065939153"},
    {"Sweden", 20, "0.020996094", "0.012513228"},
    {"United Kingdom", 73, "0.130371094", "0.087982804"},
}};

}  // namespace ccindex::testing

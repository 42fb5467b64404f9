#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccindex/error.hpp"
#include "ccindex/game_file.hpp"
#include "ccindex/indices.hpp"
#include "ccindex/oracle.hpp"
#include "ccindex/random_instance.hpp"
#include "ccindex/report.hpp"

namespace ccindex::cli {

namespace {

struct ReportFlags {
  std::string file;
  std::string index = "both";
  std::string format = "table";
  int precision = 9;
  bool exact = false;
  bool normalize_banzhaf = false;
  std::string dump_counts;
  bool diff = false;
};

struct BenchFlags {
  std::string players = "4..12";
  std::string blocks = "3";
  std::size_t repetitions = 1;
  std::uint64_t seed = 1;
  Weight max_weight = 20;
  bool no_oracle = false;
};

struct Range {
  std::size_t first = 0;
  std::size_t last = 0;
};

// "a..b" or a single number "a".
Range parse_range(const std::string& text, const char* name) {
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size() || part.front() == '-') {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("--") + name + " expects N or A..B, got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
  };
  Range range;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    range.first = number(text.substr(0, dots));
    range.last = number(text.substr(dots + 2));
  } else {
    range.first = range.last = number(text);
  }
  if (range.first == 0 || range.first > range.last) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("--") + name + " range '" + text + "' is empty or includes 0");
  }
  return range;
}

IndexSelection parse_selection(const std::string& text) {
  if (text == "banzhaf") return IndexSelection::Banzhaf;
  if (text == "configuration") return IndexSelection::Configuration;
  return IndexSelection::Both;
}

void add_report_flags(CLI::App& cmd, ReportFlags& flags) {
  cmd.add_option("file", flags.file, "Game description (JSON)")->required();
  cmd.add_option("--index", flags.index, "Which index to compute")
      ->check(CLI::IsMember({"banzhaf", "configuration", "both"}));
  cmd.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd.add_option("--precision", flags.precision, "Decimal places (round half to even)")
      ->check(CLI::Range(0, 1000));
  cmd.add_flag("--exact", flags.exact, "Print exact fractions");
  cmd.add_flag("--normalize-banzhaf", flags.normalize_banzhaf,
               "Also print beta rescaled to sum to 1 (not the index itself)");
}

std::string render(const IndexReport& report, const ReportFlags& flags) {
  const RenderOptions options{flags.precision, flags.exact, flags.normalize_banzhaf};
  if (flags.format == "csv") return render_csv(report, options);
  if (flags.format == "json") return render_json(report, options);
  return render_table(report, options);
}

int cmd_compute(const ReportFlags& flags, std::ostream& out) {
  const ConfiguredGame cg = to_configured_game(read_game_file(flags.file));
  if (!flags.dump_counts.empty()) {
    std::ofstream dump(flags.dump_counts, std::ios::binary);
    if (!dump) throw Error(ErrorCode::IoError, "cannot write " + flags.dump_counts);
    dump << dump_counts_csv(cg);
  }
  out << render(compute_report(cg, parse_selection(flags.index)), flags);
  return kSuccess;
}

// First mismatch between engine and oracle, if any.
std::optional<std::string> first_discrepancy(const IndexReport& engine, const IndexReport& brute,
                                             int precision) {
  for (std::size_t n = 0; n < engine.players.size(); ++n) {
    const auto& a = engine.players[n];
    const auto& b = brute.players[n];
    auto describe = [&](const char* name, const Rational& x, const Rational& y) {
      std::ostringstream msg;
      msg << "discrepancy: player " << n + 1 << " (" << a.label << ") " << name
          << " engine=" << to_fraction(x) << " (" << to_decimal(x, precision) << ")"
          << " oracle=" << to_fraction(y) << " (" << to_decimal(y, precision) << ")";
      return msg.str();
    };
    if (a.beta && *a.beta != *b.beta) return describe("beta", *a.beta, *b.beta);
    if (a.phi && *a.phi != *b.phi) return describe("phi", *a.phi, *b.phi);
  }
  return std::nullopt;
}

int cmd_oracle(const ReportFlags& flags, std::ostream& out) {
  const ConfiguredGame cg = to_configured_game(read_game_file(flags.file));
  oracle::check_size(cg);
  const IndexSelection selection = parse_selection(flags.index);
  const IndexReport brute = compute_report(cg, selection, Method::Oracle);
  if (!flags.diff) {
    out << render(brute, flags);
    return kSuccess;
  }
  const IndexReport engine = compute_report(cg, selection, Method::GeneratingFunction);
  if (auto msg = first_discrepancy(engine, brute, flags.precision)) {
    out << *msg << '\n';
    return kDiscrepancy;
  }
  out << "no discrepancies (" << cg.player_count() << " players checked)\n";
  return kSuccess;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const ConfiguredGame cg = to_configured_game(read_game_file(file));
  const auto& game = cg.game();
  const auto& config = cg.config();
  out << "players (p): " << cg.player_count() << '\n';
  out << "blocks (c): " << cg.block_count() << '\n';
  out << "quota (q): " << game.quota() << '\n';
  out << "total weight w(P): " << game.total_weight() << '\n';
  if (config.is_partition()) {
    out << "configuration: partition\n";
  } else {
    out << "configuration: cover, not a partition";
    if (const auto groups = config.partition_groups()) {
      out << " (" << groups->size() << " consecutive partitions of sizes";
      for (std::size_t n = 0; n < groups->size(); ++n) out << (n ? "," : " ") << (*groups)[n];
      out << ")";
    }
    out << '\n';
  }
  out << "block sizes:";
  for (std::size_t k = 0; k < cg.block_count(); ++k) out << ' ' << config.block_size(BlockId{k});
  out << '\n';
  out << "memberships |C^i|:\n";
  for (std::size_t i = 0; i < cg.player_count(); ++i) {
    const PlayerId id{i};
    out << "  " << i + 1 << ' ' << game.label(id) << ": " << config.membership_count(id)
        << " block" << (config.membership_count(id) == 1 ? "" : "s") << " (";
    const auto blocks = config.membership(id);
    for (std::size_t n = 0; n < blocks.size(); ++n) out << (n ? "," : "") << blocks[n].index + 1;
    out << ")\n";
  }
  out << "valid\n";
  return kSuccess;
}

int cmd_bench(const BenchFlags& flags, std::ostream& out, std::ostream& err) {
  const Range players = parse_range(flags.players, "p");
  const Range blocks = parse_range(flags.blocks, "c");
  if (flags.repetitions == 0) throw Error(ErrorCode::InvalidArgument, "--reps must be positive");

  using Clock = std::chrono::steady_clock;
  auto millis = [](Clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };

  std::mt19937_64 rng(flags.seed);
  out << "p,c,rep,engine_ms,oracle_ms\n";
  for (std::size_t p = players.first; p <= players.last; ++p) {
    for (std::size_t c = blocks.first; c <= blocks.last; ++c) {
      if (p < 64 && c > (std::size_t{1} << p) - 1) {
        err << "skipping p=" << p << ", c=" << c << ": not enough distinct blocks\n";
        continue;
      }
      for (std::size_t rep = 0; rep < flags.repetitions; ++rep) {
        const InstanceShape shape{p, c, flags.max_weight, 1.0 / static_cast<double>(c + 1)};
        const ConfiguredGame cg = random_instance(shape, rng);

        const auto t0 = Clock::now();
        const auto beta = banzhaf_coleman_cc(cg);
        const auto phi = configuration_index(cg);
        const auto t1 = Clock::now();

        std::string oracle_ms;
        if (!flags.no_oracle) {
          try {
            const auto t2 = Clock::now();
            const auto ob = oracle::oracle_banzhaf_cc(cg);
            const auto op = oracle::oracle_configuration_index(cg);
            const auto t3 = Clock::now();
            if (ob != beta || op != phi) {
              err << "engine/oracle mismatch at p=" << p << ", c=" << c << ", rep=" << rep << '\n';
            }
            std::ostringstream cell;
            cell.setf(std::ios::fixed);
            cell.precision(3);
            cell << millis(t3 - t2);
            oracle_ms = cell.str();
          } catch (const Error& e) {
            if (e.code() != ErrorCode::InstanceTooLarge) throw;
          }
        }
        std::ostringstream row;
        row.setf(std::ios::fixed);
        row.precision(3);
        row << p << ',' << c << ',' << rep << ',' << millis(t1 - t0) << ',' << oracle_ms;
        out << row.str() << '\n';
      }
    }
  }
  return kSuccess;
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::InstanceTooLarge ? kOracleSizeGuard : kInputError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power indices for weighted majority games with coalition configuration",
               "ccindex"};
  app.require_subcommand(1);

  ReportFlags compute_flags;
  auto* compute = app.add_subcommand("compute", "Compute indices with generating functions");
  add_report_flags(*compute, compute_flags);
  compute->add_option("--dump-counts", compute_flags.dump_counts,
                      "Write coefficient tables (i,k,m,r,t,count) to this CSV file");

  ReportFlags oracle_flags;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compute indices by brute-force enumeration");
  add_report_flags(*oracle_cmd, oracle_flags);
  oracle_cmd->add_flag("--diff", oracle_flags.diff,
                       "Compare against the generating-function engine");

  std::string validate_file;
  auto* validate_cmd = app.add_subcommand("validate", "Check a game file and describe it");
  validate_cmd->add_option("file", validate_file, "Game description (JSON)")->required();

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Time engine against oracle on random instances");
  bench->add_option("--p", bench_flags.players, "Player counts, N or A..B");
  bench->add_option("--c", bench_flags.blocks, "Block counts, N or A..B");
  bench->add_option("--reps", bench_flags.repetitions, "Instances per (p, c)");
  bench->add_option("--seed", bench_flags.seed, "RNG seed");
  bench->add_option("--max-weight", bench_flags.max_weight, "Largest random weight");
  bench->add_flag("--no-oracle", bench_flags.no_oracle, "Skip the brute-force timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*compute) return cmd_compute(compute_flags, out);
    if (*oracle_cmd) return cmd_oracle(oracle_flags, out);
    if (*validate_cmd) return cmd_validate(validate_file, out);
    if (*bench) return cmd_bench(bench_flags, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace ccindex::cli

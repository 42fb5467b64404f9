#include "ccindex/report.hpp"

#include <algorithm>
#include <sstream>

#include "ccindex/error.hpp"
#include "ccindex/genfun.hpp"
#include "ccindex/indices.hpp"
#include "ccindex/oracle.hpp"
#include "json.hpp"

namespace ccindex {

namespace {

constexpr const char* kNormalizedNote =
    "* beta_norm rescales beta to sum to 1; it is a convenience view, not the "
    "generalized Banzhaf-Coleman index";

std::string render_value(const Rational& value, const RenderOptions& options) {
  return options.exact ? to_fraction(value) : to_decimal(value, options.precision);
}

std::vector<Rational> column(const IndexReport& report, bool beta) {
  std::vector<Rational> out;
  for (const auto& row : report.players) out.push_back(beta ? *row.beta : *row.phi);
  return out;
}

bool has_beta(const IndexReport& report) {
  return !report.players.empty() && report.players.front().beta.has_value();
}

bool has_phi(const IndexReport& report) {
  return !report.players.empty() && report.players.front().phi.has_value();
}

// Membership cells: one per partition run (1-based position inside the run),
// or a single comma-joined list of global block numbers.
std::vector<std::string> membership_cells(const IndexReport& report, const PlayerResult& row) {
  std::vector<std::string> cells;
  if (report.partition_groups) {
    std::size_t start = 0;
    for (std::size_t size : *report.partition_groups) {
      std::string cell;
      for (BlockId k : row.blocks) {
        if (k.index >= start && k.index < start + size) cell = std::to_string(k.index - start + 1);
      }
      cells.push_back(cell);
      start += size;
    }
    return cells;
  }
  std::string joined;
  for (BlockId k : row.blocks) {
    if (!joined.empty()) joined += ",";
    joined += std::to_string(k.index + 1);
  }
  cells.push_back(joined);
  return cells;
}

}  // namespace

IndexReport compute_report(const ConfiguredGame& cg, IndexSelection selection, Method method) {
  const bool want_beta = selection != IndexSelection::Configuration;
  const bool want_phi = selection != IndexSelection::Banzhaf;
  std::vector<Rational> beta;
  std::vector<Rational> phi;
  if (method == Method::Oracle) {
    if (want_beta) beta = oracle::oracle_banzhaf_cc(cg);
    if (want_phi) phi = oracle::oracle_configuration_index(cg);
  } else {
    if (want_beta) beta = banzhaf_coleman_cc(cg);
    if (want_phi) phi = configuration_index(cg);
  }

  IndexReport report;
  report.partition_groups = cg.config().partition_groups();
  for (std::size_t i = 0; i < cg.player_count(); ++i) {
    const PlayerId id{i};
    PlayerResult row;
    row.player = id;
    row.label = cg.game().label(id);
    row.weight = cg.game().weight(id);
    const auto blocks = cg.config().membership(id);
    row.blocks.assign(blocks.begin(), blocks.end());
    if (want_beta) row.beta = beta[i];
    if (want_phi) row.phi = phi[i];
    report.players.push_back(std::move(row));
  }
  return report;
}

std::string render_table(const IndexReport& report, const RenderOptions& options) {
  std::vector<std::string> header{"#", "label"};
  if (report.partition_groups) {
    for (std::size_t g = 0; g < report.partition_groups->size(); ++g) {
      header.push_back("C" + std::to_string(g + 1));
    }
  } else {
    header.push_back("blocks");
  }
  header.push_back("weight");
  const bool beta = has_beta(report);
  const bool phi = has_phi(report);
  const bool norm = beta && options.normalize_banzhaf;
  if (beta) header.push_back("beta");
  if (norm) header.push_back("beta_norm*");
  if (phi) header.push_back("phi");
  if (options.exact) {
    if (beta) header.push_back("beta_exact");
    if (phi) header.push_back("phi_exact");
  }

  std::vector<Rational> beta_norm;
  if (norm) beta_norm = normalized(column(report, true));

  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 0; n < report.players.size(); ++n) {
    const auto& p = report.players[n];
    std::vector<std::string> cells{std::to_string(p.player.index + 1), p.label};
    for (auto& cell : membership_cells(report, p)) cells.push_back(std::move(cell));
    cells.push_back(std::to_string(p.weight));
    if (beta) cells.push_back(to_decimal(*p.beta, options.precision));
    if (norm) cells.push_back(to_decimal(beta_norm[n], options.precision));
    if (phi) cells.push_back(to_decimal(*p.phi, options.precision));
    if (options.exact) {
      if (beta) cells.push_back(to_fraction(*p.beta));
      if (phi) cells.push_back(to_fraction(*p.phi));
    }
    rows.push_back(std::move(cells));
  }

  std::vector<std::size_t> widths(header.size());
  for (std::size_t col = 0; col < header.size(); ++col) {
    widths[col] = header[col].size();
    for (const auto& row : rows) widths[col] = std::max(widths[col], row[col].size());
  }

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t col = 0; col < cells.size(); ++col) {
      if (col > 0) line += "  ";
      const std::string pad(widths[col] - cells[col].size(), ' ');
      // label is the only left-aligned column
      line += col == 1 ? cells[col] + pad : pad + cells[col];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  if (norm) out << kNormalizedNote << '\n';
  return out.str();
}

std::string render_csv(const IndexReport& report, const RenderOptions& options) {
  const bool beta = has_beta(report);
  const bool phi = has_phi(report);
  const bool norm = beta && options.normalize_banzhaf;
  std::vector<Rational> beta_norm;
  if (norm) beta_norm = normalized(column(report, true));

  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };

  std::ostringstream out;
  out << "player,label,weight";
  if (beta) out << ",beta";
  if (phi) out << ",phi";
  if (norm) out << ",beta_normalized";
  out << '\n';
  for (std::size_t n = 0; n < report.players.size(); ++n) {
    const auto& p = report.players[n];
    out << p.player.index + 1 << ',' << quote(p.label) << ',' << p.weight;
    if (beta) out << ',' << render_value(*p.beta, options);
    if (phi) out << ',' << render_value(*p.phi, options);
    if (norm) out << ',' << render_value(beta_norm[n], options);
    out << '\n';
  }
  return out.str();
}

std::string render_json(const IndexReport& report, const RenderOptions& options) {
  using nlohmann::ordered_json;
  const bool beta = has_beta(report);
  const bool norm = beta && options.normalize_banzhaf;
  std::vector<Rational> beta_norm;
  if (norm) beta_norm = normalized(column(report, true));

  ordered_json doc;
  doc["precision"] = options.precision;
  ordered_json players = ordered_json::array();
  for (std::size_t n = 0; n < report.players.size(); ++n) {
    const auto& p = report.players[n];
    ordered_json row;
    row["player"] = p.player.index + 1;
    row["label"] = p.label;
    row["weight"] = p.weight;
    ordered_json blocks = ordered_json::array();
    for (BlockId k : p.blocks) blocks.push_back(k.index + 1);
    row["blocks"] = blocks;
    if (p.beta) {
      row["beta"] = to_decimal(*p.beta, options.precision);
      row["beta_exact"] = to_fraction(*p.beta);
    }
    if (norm) {
      row["beta_normalized"] = to_decimal(beta_norm[n], options.precision);
      row["beta_normalized_exact"] = to_fraction(beta_norm[n]);
    }
    if (p.phi) {
      row["phi"] = to_decimal(*p.phi, options.precision);
      row["phi_exact"] = to_fraction(*p.phi);
    }
    players.push_back(std::move(row));
  }
  doc["players"] = std::move(players);
  if (norm) doc["note"] = kNormalizedNote + 2;
  return doc.dump(2) + "\n";
}

std::string dump_counts_csv(const ConfiguredGame& cg) {
  std::ostringstream out;
  out << "i,k,m,r,t,count\n";
  for (std::size_t i = 0; i < cg.player_count(); ++i) {
    const PlayerId id{i};
    for (BlockId k : cg.config().membership(id)) {
      const WeightCounts wc = weight_counts(cg, id, k);
      for (Weight m = 0; m <= wc.max_weight(); ++m) {
        if (wc.coeffs[m] != 0) out << i + 1 << ',' << k.index + 1 << ',' << m << ",,," << wc.coeffs[m] << '\n';
      }
      const TriCounts tc = tri_counts(cg, id, k);
      for (Weight m = 0; m <= tc.max_weight(); ++m) {
        for (std::size_t r = 0; r < tc.r_extent(); ++r) {
          for (std::size_t t = 0; t < tc.t_extent(); ++t) {
            const BigInt& n = tc.at(m, r, t);
            if (n != 0) {
              out << i + 1 << ',' << k.index + 1 << ',' << m << ',' << r << ',' << t << ',' << n
                  << '\n';
            }
          }
        }
      }
    }
  }
  return out.str();
}

}  // namespace ccindex

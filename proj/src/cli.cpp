// Copyright 2026 The mubar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mubar/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mubar/braid.hpp"
#include "mubar/error.hpp"
#include "mubar/linking.hpp"
#include "mubar/milnor.hpp"
#include "mubar/moves.hpp"
#include "mubar/pd.hpp"

namespace mubar {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string pd_path;
  std::string braid;
  bool braid_given = false;
  int strands = 0;
  int k = 4;
  bool json = false;
  bool force = false;
  std::uint64_t seed = 1;
  std::vector<std::string> moves;
  std::vector<std::string> sequences;
};

LinkDiagram load(const RunConfig& cfg) {
  if (!cfg.pd_path.empty() && cfg.braid_given) {
    throw ValidationError("give either --pd or --braid, not both");
  }
  if (cfg.braid_given) {
    if (cfg.strands <= 0) throw ValidationError("--braid needs --strands N");
    return parse_braid(cfg.braid, cfg.strands);
  }
  if (cfg.pd_path.empty()) throw ValidationError("no input: use --pd or --braid");
  std::ifstream in(cfg.pd_path);
  if (!in) throw ValidationError("cannot open " + cfg.pd_path);
  std::stringstream text;
  text << in.rdbuf();
  return parse_pd(text.str());
}

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

std::string residue_string(const MilnorEntry& e) {
  if (e.exact) return e.mu.str();
  return e.mu_bar.str() + " mod " + e.delta.str();
}

json table_json(const MilnorTable& t) {
  json entries = json::array();
  for (const MilnorEntry& e : t.entries) {
    entries.push_back({{"I", e.I},
                       {"mu", integer_json(e.mu)},
                       {"delta", integer_json(e.delta)},
                       {"mu_bar", integer_json(e.mu_bar)},
                       {"exact", e.exact}});
  }
  const auto first = first_nonvanishing(t);
  return {{"k", t.k},
          {"entries", entries},
          {"first_nonvanishing", first ? json(*first) : json(nullptr)}};
}

json lk_json(const LinkingMatrix& m) {
  json rows = json::array();
  json writhe = json::array();
  for (int i = 1; i <= m.n; ++i) {
    json row = json::array();
    for (int j = 1; j <= m.n; ++j) row.push_back(i == j ? json(nullptr) : json(m.at(i, j)));
    rows.push_back(row);
    writhe.push_back(m.at(i, i));
  }
  return {{"n", m.n}, {"matrix", rows}, {"writhe", writhe}};
}

void print_lk(std::ostream& out, const LinkingMatrix& m) {
  for (int i = 1; i <= m.n; ++i) {
    for (int j = 1; j <= m.n; ++j) {
      out << std::setw(4);
      if (i == j) {
        out << ".";
      } else {
        out << m.at(i, j);
      }
    }
    out << '\n';
  }
  out << "writhe:";
  for (int i = 1; i <= m.n; ++i) out << ' ' << m.at(i, i);
  out << '\n';
}

void print_table(std::ostream& out, const MilnorTable& t) {
  std::size_t width = 2;
  for (const MilnorEntry& e : t.entries) {
    width = std::max(width, sequence_string(e.I).size());
  }
  out << std::left << std::setw(static_cast<int>(width) + 2) << "I" << "mu_bar\n";
  for (const MilnorEntry& e : t.entries) {
    out << std::setw(static_cast<int>(width) + 2) << sequence_string(e.I)
        << residue_string(e) << '\n';
  }
  out << std::right;
  const auto first = first_nonvanishing(t);
  out << "first non-vanishing length: ";
  if (first) {
    out << *first << '\n';
  } else {
    out << "none up to " << t.k << '\n';
  }
}

// "123" or, when some index exceeds 9, "1,12,3".
std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> I;
  if (text.find(',') != std::string::npos) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        I.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw ParseError("bad index '" + item + "' in sequence", 0);
      }
    }
  } else {
    for (std::size_t p = 0; p < text.size(); ++p) {
      if (text[p] < '1' || text[p] > '9') {
        throw ParseError("bad character in sequence '" + text + "'", p);
      }
      I.push_back(text[p] - '0');
    }
  }
  if (I.size() < 2) throw ValidationError("sequence needs length >= 2");
  return I;
}

int cmd_lk(const RunConfig& cfg, std::ostream& out) {
  const LinkingMatrix m = linking_matrix(load(cfg));
  if (cfg.json) {
    out << lk_json(m).dump() << '\n';
  } else {
    print_lk(out, m);
  }
  return kExitOk;
}

int cmd_milnor(const RunConfig& cfg, std::ostream& out) {
  const MilnorTable t = milnor_table(load(cfg), cfg.k, cfg.force);
  if (cfg.json) {
    out << table_json(t).dump() << '\n';
  } else {
    print_table(out, t);
  }
  return kExitOk;
}

int cmd_moves(const RunConfig& cfg, std::ostream& out) {
  const LinkDiagram before = load(cfg);
  LinkDiagram d = before;
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::string> applied;
  for (const std::string& text : cfg.moves) {
    if (text.rfind("random:", 0) == 0) {
      int steps = 0;
      try {
        steps = std::stoi(text.substr(7));
      } catch (const std::logic_error&) {
        throw ParseError("bad step count in '" + text + "'", 7);
      }
      std::vector<MoveSpec> log;
      d = random_isotopy(d, steps, rng, &log);
      for (const MoveSpec& m : log) applied.push_back(describe(m));
      continue;
    }
    MoveSpec m = parse_move(text);
    if (m.kind == MoveKind::DeltaMove && m.darts.empty()) {
      const auto site = find_delta_site(d);
      if (!site) throw ValidationError("no site for a delta move");
      m.darts = site->darts;
    }
    d = apply_move(d, m);
    applied.push_back(describe(m));
  }

  const LinkingMatrix lk0 = linking_matrix(before);
  const LinkingMatrix lk1 = linking_matrix(d);
  const MilnorTable t0 = milnor_table(before, cfg.k, cfg.force);
  const MilnorTable t1 = milnor_table(d, cfg.k, cfg.force);
  const bool same_lk = same_linking(lk0, lk1);
  const bool same_table = same_residues(t0, t1);
  if (cfg.json) {
    out << json{{"moves", applied},
                {"pd", to_pd(d)},
                {"before", {{"lk", lk_json(lk0)}, {"milnor", table_json(t0)}}},
                {"after", {{"lk", lk_json(lk1)}, {"milnor", table_json(t1)}}},
                {"lk_unchanged", same_lk},
                {"milnor_unchanged", same_table}}
               .dump()
        << '\n';
    return kExitOk;
  }
  for (const std::string& m : applied) out << "applied " << m << '\n';
  out << to_pd(d) << '\n';
  out << "crossings: " << before.crossing_count() << " -> " << d.crossing_count()
      << '\n';
  out << "linking matrix " << (same_lk ? "unchanged" : "changed") << '\n';
  if (!same_lk) {
    out << "before:\n";
    print_lk(out, lk0);
    out << "after:\n";
    print_lk(out, lk1);
  }
  out << "milnor table (k=" << cfg.k << ") " << (same_table ? "unchanged" : "changed")
      << '\n';
  for (std::size_t p = 0; p < t0.entries.size(); ++p) {
    const MilnorEntry& a = t0.entries[p];
    const MilnorEntry& b = t1.entries[p];
    if (a.delta != b.delta || a.mu_bar != b.mu_bar) {
      out << "  " << sequence_string(a.I) << ": " << residue_string(a) << " -> "
          << residue_string(b) << '\n';
    }
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const LinkDiagram d = load(cfg);
  std::vector<std::vector<int>> seqs;
  for (const std::string& s : cfg.sequences) seqs.push_back(parse_sequence(s));
  if (seqs.empty()) {
    for (const MilnorEntry& e : milnor_table(d, cfg.k, cfg.force).entries) {
      seqs.push_back(e.I);
    }
  }
  MilnorEngine engine(d);
  bool all = true;
  json rows = json::array();
  for (const auto& I : seqs) {
    const Integer main = engine.mu(I);
    const Integer oracle = oracle_mu(d, I);
    const bool match = main == oracle;
    all = all && match;
    if (cfg.json) {
      rows.push_back({{"I", I},
                      {"main", integer_json(main)},
                      {"oracle", integer_json(oracle)},
                      {"match", match}});
    } else {
      out << sequence_string(I) << " main=" << main << " oracle=" << oracle
          << (match ? " MATCH" : " MISMATCH") << '\n';
    }
  }
  if (cfg.json) out << json{{"results", rows}, {"match", all}}.dump() << '\n';
  return all ? kExitOk : kExitMismatch;
}

void add_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--pd", cfg.pd_path, "PD code file");
  sub->add_option("--braid", cfg.braid, "braid word, e.g. \"1 -2 1\"")
      ->each([&cfg](const std::string&) { cfg.braid_given = true; });
  sub->add_option("--strands", cfg.strands, "strand count for --braid");
  sub->add_flag("--json", cfg.json, "machine-readable output");
}

void add_table_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-k", cfg.k, "maximum sequence length")->check(CLI::Range(2, 11));
  sub->add_flag("--force", cfg.force, "override the table size guard");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Linking numbers and Milnor invariants of links"};
  app.name("mubar");
  app.require_subcommand(1);

  CLI::App* lk_cmd = app.add_subcommand("lk", "linking matrix (writhe on the diagonal)");
  add_input(lk_cmd, cfg);

  CLI::App* milnor_cmd = app.add_subcommand("milnor", "Milnor invariants up to length k");
  add_input(milnor_cmd, cfg);
  add_table_options(milnor_cmd, cfg);

  CLI::App* moves_cmd =
      app.add_subcommand("moves", "apply local moves and compare invariants");
  add_input(moves_cmd, cfg);
  add_table_options(moves_cmd, cfg);
  moves_cmd->add_option("--seed", cfg.seed, "seed for random:N");
  moves_cmd->add_option("move", cfg.moves,
                        "moves: r1:E[:+|-][:over|under] r1x:C r2:E,F[:+|-] r2x:E "
                        "r3:E cc:C scc:C delta[:E,F,G][:+|-] random:N "
                        "(1-based; -E reverses an edge)");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "compare mu against the fixed-point oracle");
  add_input(oracle_cmd, cfg);
  add_table_options(oracle_cmd, cfg);
  oracle_cmd->add_option("-I,--sequence", cfg.sequences,
                         "sequence such as 123 or 1,2,10 (default: all up to k)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*lk_cmd) return cmd_lk(cfg, out);
    if (*milnor_cmd) return cmd_milnor(cfg, out);
    if (*moves_cmd) return cmd_moves(cfg, out);
    return cmd_oracle(cfg, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace mubar

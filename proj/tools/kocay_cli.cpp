// Command-line front end: counting, covering identities, and deck-only
// reconstruction over graph6 / colored-record inputs.  Reports are plain
// key-value text, or a fixed-schema JSON object under --json with keys
// inputs/values/status/ledger/timing.  Exit codes: 0 success, 1 verification
// failure (an identity or sweep case failed), 2 input error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <kocay/kocay.hpp>

namespace k = kocay;
using nlohmann::ordered_json;

namespace {

int g_exit = 0;
bool g_json = false;
bool g_timing = false;

struct Report {
  ordered_json inputs = ordered_json::object();
  ordered_json values = ordered_json::object();
  std::string status = "ok";
  ordered_json ledger = ordered_json::array();
  std::vector<std::string> text;
  int exit_code = 0;
};

void emit(const Report& r, std::chrono::duration<double> elapsed) {
  if (g_json) {
    ordered_json j;
    j["inputs"] = r.inputs;
    j["values"] = r.values;
    j["status"] = r.status;
    j["ledger"] = r.ledger;
    j["timing"] = g_timing ? ordered_json{{"seconds", elapsed.count()}} : ordered_json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : r.text) std::cout << line << "\n";
    if (g_timing) std::cout << "timing=" << elapsed.count() << "s\n";
  }
}

void run(const std::function<void(Report&)>& fill) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  fill(r);
  emit(r, std::chrono::steady_clock::now() - t0);
  g_exit = r.exit_code;
}

// ---- argument parsing helpers ----

bool looks_colored(const std::string& s) { return s.find('=') != std::string::npos; }

using AnyGraph = std::variant<k::Graph, k::ColoredGraph>;

AnyGraph parse_any(const std::string& flag, const std::string& s) {
  try {
    if (looks_colored(s)) return k::parse_colored_record(s);
    return k::parse_graph6(s);
  } catch (const k::input_error& e) {
    throw k::input_error(flag + ": " + e.what());
  }
}

k::Graph parse_plain(const std::string& flag, const std::string& s) {
  try {
    return k::parse_graph6(s);
  } catch (const k::input_error& e) {
    throw k::input_error(flag + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find(sep, start);
    if (end == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// Sequence members: a value containing '=' is one colored record; anything
// else is a comma-separated list of graph6 tokens.  Kinds must not mix.
std::variant<k::CoverSequence, k::ColoredCoverSequence> parse_sequence(
    const std::string& flag, const std::vector<std::string>& raw) {
  k::CoverSequence plain;
  k::ColoredCoverSequence colored;
  for (const auto& value : raw) {
    if (looks_colored(value)) {
      colored.push_back(std::get<k::ColoredGraph>(parse_any(flag, value)));
    } else {
      for (const auto& token : split(value, ','))
        if (!token.empty()) plain.push_back(parse_plain(flag, token));
    }
  }
  if (!plain.empty() && !colored.empty())
    throw k::input_error(flag + ": plain and colored members cannot mix");
  if (plain.empty() && colored.empty()) throw k::input_error(flag + ": empty sequence");
  if (!colored.empty()) return colored;
  return plain;
}

std::vector<std::string> read_lines(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw k::input_error(flag + ": cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    lines.push_back(line);
  }
  if (lines.empty()) throw k::input_error(flag + ": no cards in " + path);
  return lines;
}

k::Deck load_plain_deck(const std::string& flag, const std::string& path) {
  std::vector<k::CanonicalForm> cards;
  const auto lines = read_lines(flag, path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (looks_colored(lines[i]))
      throw k::input_error(flag + ": line " + std::to_string(i + 1) + ": expected a graph6 card");
    try {
      cards.push_back(k::canonical_form(k::parse_graph6(lines[i])));
    } catch (const k::input_error& e) {
      throw k::input_error(flag + ": line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return k::Deck(std::move(cards));
}

// Colored deck file: colored records, or graph6 cards lifted through
// two_form (deleting a vertex commutes with taking the two-form).
k::ColoredDeck load_colored_deck(const std::string& flag, const std::string& path) {
  std::vector<k::ColoredCanonicalForm> cards;
  const auto lines = read_lines(flag, path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      if (looks_colored(lines[i]))
        cards.push_back(k::colored_canonical_form(k::parse_colored_record(lines[i])));
      else
        cards.push_back(k::colored_canonical_form(k::two_form(k::parse_graph6(lines[i]))));
    } catch (const k::input_error& e) {
      throw k::input_error(flag + ": line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return k::ColoredDeck(std::move(cards));
}

std::vector<std::pair<int, int>> parse_ordering(const std::string& flag, const std::string& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& token : split(s, ',')) {
    const auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= token.size())
      throw k::input_error(flag + ": expected comma-separated u-v pairs");
    try {
      out.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
    } catch (const std::exception&) {
      throw k::input_error(flag + ": expected comma-separated u-v pairs");
    }
  }
  return out;
}

std::string ordering_text(const std::vector<std::pair<int, int>>& ordering) {
  std::string out;
  for (auto [a, b] : ordering) {
    if (!out.empty()) out += ',';
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

ordered_json ledger_json(const std::vector<std::pair<std::string, std::string>>& ledger) {
  ordered_json out = ordered_json::array();
  for (const auto& [label, value] : ledger) out.push_back({{"label", label}, {"value", value}});
  return out;
}

void append_report_text(Report& r, const k::ReconstructionReport& rec) {
  for (const auto& [label, value] : rec.ledger) r.text.push_back("  " + label + ": " + value);
}

// ---- sweep suites ----

struct SweepResult {
  std::uint64_t cases = 0;
  std::uint64_t fail = 0;
  std::string counterexample;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok) {
      if (fail == 0) counterexample = describe();
      ++fail;
    }
  }
};

SweepResult sweep_kelly(int n) {
  if (n < 2) throw k::input_error("--n: kelly sweep needs n >= 2");
  SweepResult result;
  for (const auto& g : k::enumerate_graphs(n)) {
    const auto d = k::deck(g);
    for (int m = 1; m < n; ++m)
      for (const auto& h : k::enumerate_graphs(m))
        result.record(k::kelly_count_from_deck(d, h) == k::count_subgraph(g, h), [&] {
          return "kelly: g=" + k::serialize_graph6(g) + " h=" + k::serialize_graph6(h);
        });
  }
  return result;
}

SweepResult sweep_kocay(int n) {
  SweepResult result;
  std::vector<k::Graph> pool;
  for (int m = 1; m <= 3; ++m)
    for (const auto& f : k::enumerate_graphs(m)) pool.push_back(f);
  for (const auto& g : k::enumerate_graphs(n))
    for (const auto& f1 : pool)
      for (const auto& f2 : pool)
        result.record(k::kocay_check(g, {f1, f2}).equal, [&] {
          return "replay: kocay --graph " + k::serialize_graph6(g) + " --seq " +
                 k::serialize_graph6(f1) + "," + k::serialize_graph6(f2);
        });
  return result;
}

SweepResult sweep_path(int n) {
  if (n < 5) throw k::input_error("--n: path sweep needs n >= 5");
  SweepResult result;
  const auto pn = k::path_graph(n);
  for (const auto& g : k::enumerate_graphs(n))
    result.record(k::reconstruct_path_count(k::deck(g), n).values[0] == k::count_subgraph(g, pn),
                  [&] { return "path: g=" + k::serialize_graph6(g); });
  return result;
}

SweepResult sweep_tree(int n) {
  if (n < 2) throw k::input_error("--n: tree sweep needs n >= 2");
  SweepResult result;
  std::vector<k::Graph> trees;
  for (const auto& t : k::enumerate_graphs(n))
    if (k::is_tree(t)) trees.push_back(t);
  for (const auto& g : k::enumerate_graphs(n)) {
    const auto d = k::colored_deck(k::two_form(g));
    for (const auto& t : trees) {
      const auto rec = k::tree_descent(d, t);
      const auto [gt, gct] = k::tree_combo_oracle(g, t);
      bool ok = false;
      switch (rec.status) {
        case k::ResolutionStatus::exact:
          ok = rec.values.size() == 2 && rec.values[0] == gt && rec.values[1] == gct;
          break;
        case k::ResolutionStatus::sum_combo:
          ok = rec.values.size() == 1 && rec.values[0] == gt + gct;
          break;
        case k::ResolutionStatus::difference_combo:
          ok = rec.values.size() == 1 && rec.values[0] == gt - gct;
          break;
        case k::ResolutionStatus::combo_only:
          ok = false;
          break;
      }
      result.record(ok, [&] {
        return "tree: g=" + k::serialize_graph6(g) + " t=" + k::serialize_graph6(t) +
               " status=" + std::string(k::to_string(rec.status));
      });
    }
  }
  return result;
}

SweepResult sweep_lemma5(int n) {
  SweepResult result;
  std::vector<k::ColoredGraph> patterns;
  for (int m = 2; m <= 3; ++m)
    for (const auto& h : k::enumerate_colored_graphs(m)) patterns.push_back(h);
  for (const auto& g : k::enumerate_graphs(n)) {
    const auto gp = k::two_form(g);
    for (const auto& h : patterns) {
      for (auto e : h.red_edges())
        result.record(k::edge_identity_check(gp, h, e).equal, [&] {
          return "lemma5: g=" + k::serialize_graph6(g) + " h=" + k::serialize_colored_record(h) +
                 " e=" + std::to_string(e.first) + "-" + std::to_string(e.second);
        });
      for (auto e : h.blue_edges())
        result.record(k::edge_identity_check(gp, h, e).equal, [&] {
          return "lemma5: g=" + k::serialize_graph6(g) + " h=" + k::serialize_colored_record(h) +
                 " e=" + std::to_string(e.first) + "-" + std::to_string(e.second);
        });
    }
  }
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact small-graph counting, covering identities, and deck-only reconstruction"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", g_json, "emit a JSON report (inputs/values/status/ledger/timing)");
    sub->add_flag("--timing", g_timing, "include wall-clock timing in the report");
  };

  // count
  auto* count_cmd = app.add_subcommand("count", "count pattern copies in a host");
  std::string count_host, count_pattern;
  bool count_induced = false;
  count_cmd->add_option("--host", count_host, "host graph (graph6 or colored record)")->required();
  count_cmd->add_option("--pattern", count_pattern, "pattern graph (same kind as host)")->required();
  count_cmd->add_flag("--induced", count_induced, "count induced copies instead of subgraphs");
  add_common(count_cmd);
  count_cmd->callback([&] {
    run([&](Report& r) {
      const AnyGraph host = parse_any("--host", count_host);
      const AnyGraph pattern = parse_any("--pattern", count_pattern);
      if (host.index() != pattern.index())
        throw k::input_error("--pattern: kind differs from --host");
      k::Count value;
      if (std::holds_alternative<k::Graph>(host)) {
        const auto& g = std::get<k::Graph>(host);
        const auto& h = std::get<k::Graph>(pattern);
        value = count_induced ? k::count_induced(g, h) : k::count_subgraph(g, h);
      } else {
        const auto& g = std::get<k::ColoredGraph>(host);
        const auto& h = std::get<k::ColoredGraph>(pattern);
        value = count_induced ? k::count_colored_induced(g, h) : k::count_colored_subgraph(g, h);
      }
      r.inputs = {{"command", "count"},
                  {"host", count_host},
                  {"pattern", count_pattern},
                  {"induced", count_induced}};
      r.values = {{"count", value.str()}};
      r.text.push_back(value.str());
    });
  });

  // deck
  auto* deck_cmd = app.add_subcommand("deck", "list the vertex-deleted deck");
  std::string deck_graph;
  bool deck_colored = false;
  deck_cmd->add_option("--graph", deck_graph, "graph (graph6; or colored record with --colored)")
      ->required();
  deck_cmd->add_flag("--colored", deck_colored,
                     "emit the colored deck (of the two-form for a graph6 input)");
  add_common(deck_cmd);
  deck_cmd->callback([&] {
    run([&](Report& r) {
      r.inputs = {{"command", "deck"}, {"graph", deck_graph}, {"colored", deck_colored}};
      ordered_json cards = ordered_json::array();
      if (deck_colored) {
        const AnyGraph any = parse_any("--graph", deck_graph);
        const k::ColoredGraph gp = std::holds_alternative<k::Graph>(any)
                                       ? k::two_form(std::get<k::Graph>(any))
                                       : std::get<k::ColoredGraph>(any);
        const k::ColoredDeck d = k::colored_deck(gp);
        for (const auto& card : d.cards()) {
          const auto line = k::serialize_colored_record(card.representative());
          cards.push_back(line);
          r.text.push_back(line);
        }
      } else {
        const k::Graph g = parse_plain("--graph", deck_graph);
        const k::Deck d = k::deck(g);
        for (const auto& card : d.cards()) {
          const auto line = k::serialize_graph6(card.representative());
          cards.push_back(line);
          r.text.push_back(line);
        }
      }
      r.values = {{"cards", cards}};
    });
  });

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "cover multiplicity c(F, X)");
  std::string cover_target;
  std::vector<std::string> cover_seq;
  cover_cmd->add_option("--target", cover_target, "covered graph X (graph6 or colored record)")
      ->required();
  cover_cmd->add_option("--seq", cover_seq, "sequence members (graph6 list or colored records)")
      ->required();
  add_common(cover_cmd);
  cover_cmd->callback([&] {
    run([&](Report& r) {
      const AnyGraph target = parse_any("--target", cover_target);
      const auto seq = parse_sequence("--seq", cover_seq);
      k::Count value;
      ordered_json seq_json = ordered_json::array();
      if (std::holds_alternative<k::Graph>(target)) {
        if (!std::holds_alternative<k::CoverSequence>(seq))
          throw k::input_error("--seq: kind differs from --target");
        const auto& f = std::get<k::CoverSequence>(seq);
        for (const auto& m : f) seq_json.push_back(k::serialize_graph6(m));
        value = k::cover_count(f, std::get<k::Graph>(target));
      } else {
        if (!std::holds_alternative<k::ColoredCoverSequence>(seq))
          throw k::input_error("--seq: kind differs from --target");
        const auto& f = std::get<k::ColoredCoverSequence>(seq);
        for (const auto& m : f) seq_json.push_back(k::serialize_colored_record(m));
        value = k::cover_count(f, std::get<k::ColoredGraph>(target));
      }
      r.inputs = {{"command", "cover"}, {"target", cover_target}, {"seq", seq_json}};
      r.values = {{"covers", value.str()}};
      r.text.push_back(value.str());
    });
  });

  // kocay
  auto* kocay_cmd = app.add_subcommand("kocay", "verify the covering identity on a graph");
  std::string kocay_graph;
  std::vector<std::string> kocay_seq;
  kocay_cmd->add_option("--graph", kocay_graph, "graph G (graph6 or colored record)")->required();
  kocay_cmd->add_option("--seq", kocay_seq, "sequence members (graph6 list or colored records)")
      ->required();
  add_common(kocay_cmd);
  kocay_cmd->callback([&] {
    run([&](Report& r) {
      const AnyGraph g = parse_any("--graph", kocay_graph);
      const auto seq = parse_sequence("--seq", kocay_seq);
      ordered_json seq_json = ordered_json::array();
      ordered_json terms = ordered_json::array();
      k::Count lhs, rhs;
      bool equal = false;
      if (std::holds_alternative<k::Graph>(g)) {
        if (!std::holds_alternative<k::CoverSequence>(seq))
          throw k::input_error("--seq: kind differs from --graph");
        const auto& f = std::get<k::CoverSequence>(seq);
        for (const auto& m : f) seq_json.push_back(k::serialize_graph6(m));
        const auto rep = k::kocay_check(std::get<k::Graph>(g), f);
        lhs = rep.lhs;
        rhs = rep.rhs;
        equal = rep.equal;
        for (const auto& term : rep.terms) {
          terms.push_back({{"class", k::serialize_graph6(term.cls)},
                           {"covers", term.covers.str()},
                           {"copies", term.copies.str()}});
          r.text.push_back("term class=" + k::serialize_graph6(term.cls) + " covers=" +
                           term.covers.str() + " copies=" + term.copies.str());
        }
      } else {
        if (!std::holds_alternative<k::ColoredCoverSequence>(seq))
          throw k::input_error("--seq: kind differs from --graph");
        const auto& f = std::get<k::ColoredCoverSequence>(seq);
        for (const auto& m : f) seq_json.push_back(k::serialize_colored_record(m));
        const auto rep = k::kocay_check(std::get<k::ColoredGraph>(g), f);
        lhs = rep.lhs;
        rhs = rep.rhs;
        equal = rep.equal;
        for (const auto& term : rep.terms) {
          terms.push_back({{"class", k::serialize_colored_record(term.cls)},
                           {"covers", term.covers.str()},
                           {"copies", term.copies.str()}});
          r.text.push_back("term class=" + k::serialize_colored_record(term.cls) + " covers=" +
                           term.covers.str() + " copies=" + term.copies.str());
        }
      }
      r.inputs = {{"command", "kocay"}, {"graph", kocay_graph}, {"seq", seq_json}};
      r.values = {{"lhs", lhs.str()}, {"rhs", rhs.str()}, {"equal", equal}, {"terms", terms}};
      r.status = equal ? "equal" : "mismatch";
      r.text.insert(r.text.begin(), "LHS=" + lhs.str() + " RHS=" + rhs.str() +
                                        " equal=" + (equal ? "true" : "false"));
      r.exit_code = equal ? 0 : 1;
    });
  });

  // path
  auto* path_cmd = app.add_subcommand("path", "reconstruct (G,P_n) from a deck file");
  std::string path_deck;
  path_cmd->add_option("--deck", path_deck, "file with one graph6 card per line")->required();
  add_common(path_cmd);
  path_cmd->callback([&] {
    run([&](Report& r) {
      const auto d = load_plain_deck("--deck", path_deck);
      ordered_json cards = ordered_json::array();
      for (const auto& card : d.cards()) cards.push_back(k::serialize_graph6(card.representative()));
      const auto rec = k::reconstruct_path_count(d, d.order());
      r.inputs = {{"command", "path"}, {"deck", path_deck}, {"cards", cards}};
      r.values = {{"value", rec.values[0].str()}};
      r.status = std::string(k::to_string(rec.status));
      r.ledger = ledger_json(rec.ledger);
      r.text.push_back("value=" + rec.values[0].str());
      r.text.push_back("status=" + r.status);
      append_report_text(r, rec);
    });
  });

  // tree
  auto* tree_cmd = app.add_subcommand("tree", "tree-count descent from a colored deck file");
  std::string tree_deck, tree_tree, tree_ordering;
  tree_cmd->add_option("--deck", tree_deck,
                       "file with one colored record per line (graph6 cards are lifted via the two-form)")
      ->required();
  tree_cmd->add_option("--tree", tree_tree, "tree T (graph6)")->required();
  tree_cmd->add_option("--ordering", tree_ordering, "edge ordering, e.g. 0-1,1-2,...");
  add_common(tree_cmd);
  tree_cmd->callback([&] {
    run([&](Report& r) {
      const auto d = load_colored_deck("--deck", tree_deck);
      const auto t = parse_plain("--tree", tree_tree);
      std::optional<std::vector<std::pair<int, int>>> ordering;
      if (!tree_ordering.empty()) ordering = parse_ordering("--ordering", tree_ordering);
      k::ReconstructionReport rec;
      try {
        rec = k::tree_descent(d, t, ordering);
      } catch (const k::input_error& e) {
        throw k::input_error(std::string("--tree: ") + e.what());
      }
      ordered_json cards = ordered_json::array();
      for (const auto& card : d.cards())
        cards.push_back(k::serialize_colored_record(card.representative()));
      ordered_json values = ordered_json::array();
      for (const auto& v : rec.values) values.push_back(v.str());
      r.inputs = {{"command", "tree"},
                  {"deck", tree_deck},
                  {"cards", cards},
                  {"tree", tree_tree},
                  {"ordering", tree_ordering}};
      r.values = {{"target", rec.target},
                  {"a", rec.coeff_a.str()},
                  {"b", rec.coeff_b.str()},
                  {"values", values},
                  {"ordering", ordering_text(rec.edge_ordering)}};
      r.status = std::string(k::to_string(rec.status));
      r.ledger = ledger_json(rec.ledger);
      r.text.push_back("status=" + r.status);
      r.text.push_back("a=" + rec.coeff_a.str());
      r.text.push_back("b=" + rec.coeff_b.str());
      std::string joined;
      for (const auto& v : rec.values) {
        if (!joined.empty()) joined += ',';
        joined += v.str();
      }
      r.text.push_back("values=" + joined);
      r.text.push_back("ordering=" + ordering_text(rec.edge_ordering));
      append_report_text(r, rec);
    });
  });

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "run a property suite over all classes at order n");
  int sweep_n = 0;
  std::string sweep_suite;
  sweep_cmd->add_option("--n", sweep_n, "graph order")->required();
  sweep_cmd->add_option("--suite", sweep_suite, "kelly|kocay|path|tree|lemma5")->required();
  add_common(sweep_cmd);
  sweep_cmd->callback([&] {
    run([&](Report& r) {
      if (sweep_n < 1 || sweep_n > k::kMaxVertices)
        throw k::input_error("--n: order must be between 1 and 10");
      SweepResult result;
      if (sweep_suite == "kelly") result = sweep_kelly(sweep_n);
      else if (sweep_suite == "kocay") result = sweep_kocay(sweep_n);
      else if (sweep_suite == "path") result = sweep_path(sweep_n);
      else if (sweep_suite == "tree") result = sweep_tree(sweep_n);
      else if (sweep_suite == "lemma5") result = sweep_lemma5(sweep_n);
      else throw k::input_error("--suite: unknown suite " + sweep_suite);
      r.inputs = {{"command", "sweep"}, {"n", sweep_n}, {"suite", sweep_suite}};
      r.values = {{"cases", result.cases},
                  {"pass", result.cases - result.fail},
                  {"fail", result.fail}};
      r.status = result.fail == 0 ? "pass" : "fail";
      r.text.push_back("suite=" + sweep_suite + " n=" + std::to_string(sweep_n) +
                       " cases=" + std::to_string(result.cases) +
                       " pass=" + std::to_string(result.cases - result.fail) +
                       " fail=" + std::to_string(result.fail));
      if (result.fail > 0) {
        r.ledger.push_back({{"label", "counterexample"}, {"value", result.counterexample}});
        r.text.push_back("counterexample: " + result.counterexample);
        r.exit_code = 1;
      }
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const k::consistency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const k::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}

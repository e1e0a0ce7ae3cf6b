// oramsey: command-line front end and session server.
//
// Exit codes: 0 success (a win was recorded), 2 a cap or budget was reached
// first, 64 usage error (bad options or graph spec), 1 anything else.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "oramsey/bounds.hpp"
#include "oramsey/match.hpp"
#include "oramsey/registry.hpp"
#include "oramsey/session.hpp"
#include "oramsey/session_http.hpp"
#include "oramsey/solver.hpp"
#include "oramsey/strategy_compiler.hpp"
#include "oramsey/verify.hpp"

namespace {

using namespace oramsey;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCap = 2;
constexpr int kExitUsage = 64;

struct Targets {
  std::string red_spec;
  std::string blue_spec;
  OrderedGraph red;
  OrderedGraph blue;

  void parse() {
    red = parse_graph_spec(red_spec);
    blue = parse_graph_spec(blue_spec);
  }
};

void add_targets(CLI::App* cmd, Targets& t) {
  cmd->add_option("--red", t.red_spec, "red target, e.g. path:3, cycle:5, star:3,3, custom:3:1-2,2-3")->required();
  cmd->add_option("--blue", t.blue_spec, "blue target")->required();
}

void add_strategy_params(CLI::App* cmd, StrategyParams& p) {
  cmd->add_option("--seed", p.seed, "seed for random strategies");
  cmd->add_option("--k", p.k, "cycle-biclique: cycle length");
  cmd->add_option("--n", p.n, "cycle-biclique: biclique side; leaf-recursion: clique size");
  cmd->add_option("--block", p.block, "cycle-biclique: bridging block size");
  cmd->add_option("--board", p.board, "minimax builder: board size");
  cmd->add_option("--room", p.room, "minimax painter: free vertices per gap");
  cmd->add_option("--max-vertices", p.max_vertices, "clique builder: stop after this many vertices");
  cmd->add_option("--budget", p.node_budget, "node budget for minimax strategies");
}

std::string value_text(int v) { return v == kNoForcedWin ? "inf" : std::to_string(v); }

json value_json(int v) { return v == kNoForcedWin ? json(nullptr) : json(v); }

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text << '\n';
  if (!out) throw Error("write to '" + path + "' failed");
}

// ---------------------------------------------------------------------------

struct MatchArgs {
  Targets targets;
  std::string builder;
  std::string painter;
  StrategyParams params;
  int cap = 10000;
  std::string out;
};

int cmd_match(const MatchArgs& a, bool as_json) {
  auto builder = make_builder(a.builder, a.targets.red, a.targets.blue, a.params);
  auto painter = make_painter(a.painter, a.params);
  const MatchResult r =
      run_match(a.targets.red, a.targets.blue, *builder, *painter, a.cap, a.targets.red_spec, a.targets.blue_spec);
  if (!a.out.empty()) write_file(a.out, transcript_to_json(r.transcript).dump(2));

  const int turns = r.transcript.turns;
  json comparisons = json::array();
  for (const BoundReport& b : applicable_bounds(a.targets.red, a.targets.blue)) {
    if (b.quantity != "r_o") continue;
    const bool within = b.kind == BoundKind::lower ? turns >= b.integer_view : turns <= b.integer_view;
    comparisons.push_back({{"name", b.name}, {"kind", bound_kind_name(b.kind)}, {"bound", b.integer_view},
                           {"quantity", b.quantity}, {"turns_within", within}});
  }
  if (as_json) {
    std::cout << json{{"transcript", transcript_to_json(r.transcript)},
                      {"finished", r.finished},
                      {"builder", builder->name()},
                      {"painter", painter->name()},
                      {"seed", a.params.seed},
                      {"bounds", comparisons}}
                     .dump(2)
              << '\n';
  } else {
    if (r.finished) {
      std::cout << color_name(*r.transcript.winner) << " wins in " << turns << '\n';
      std::cout << "witness:";
      for (int w : *r.transcript.witness) std::cout << ' ' << w;
      std::cout << '\n';
    } else {
      std::cout << "no winner after " << turns << " turns (cap)\n";
    }
    std::cout << "builder " << builder->name() << ", painter " << painter->name() << ", seed " << a.params.seed
              << ", board " << r.state.board().size() << " vertices\n";
    for (const auto& c : comparisons) {
      std::cout << "  " << c["name"].get<std::string>() << ": " << c["kind"].get<std::string>() << ' '
                << c["bound"].get<long long>() << " on " << c["quantity"].get<std::string>() << ", turns " << turns
                << (c["kind"] == "lower" ? (c["turns_within"] ? " >= " : " < ") : (c["turns_within"] ? " <= " : " > "))
                << "bound\n";
    }
  }
  return r.finished ? kExitOk : kExitCap;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  Targets targets;
  int board = 0;
  SolverOptions options;
  bool no_memo = false;
  bool no_symmetry = false;
};

json solve_json(const SolveResult& r) {
  json pv = json::array();
  for (const PlayedPair& m : r.principal_variation) pv.push_back({m.u, m.v, std::string(1, color_code(m.color))});
  return {{"board", r.board_size}, {"value", value_json(r.value)}, {"complete", r.complete},
          {"lower", r.lower},      {"upper", value_json(r.upper)}, {"nodes", r.nodes},
          {"principal_variation", pv}};
}

int cmd_solve(SolveArgs a, bool as_json) {
  a.options.memo = !a.no_memo;
  a.options.symmetry = !a.no_symmetry;
  const SolveResult r = solve_restricted(a.targets.red, a.targets.blue, a.board, a.options);
  if (as_json) {
    json j = solve_json(r);
    j["red"] = a.targets.red_spec;
    j["blue"] = a.targets.blue_spec;
    std::cout << j.dump(2) << '\n';
  } else if (!r.complete) {
    std::cout << "budget exhausted: " << r.lower << " <= r_o <= " << value_text(r.upper) << " (" << r.nodes
              << " nodes)\n";
  } else {
    std::cout << value_text(r.value) << '\n';
    if (r.value == kNoForcedWin) {
      std::cout << "painter survives forever on " << a.board << " vertices\n";
    } else {
      std::cout << "principal variation:";
      for (const PlayedPair& m : r.principal_variation) std::cout << ' ' << m.u << '-' << m.v << color_code(m.color);
      std::cout << '\n';
    }
    std::cout << r.nodes << " nodes, " << r.memo_entries << " memo entries\n";
  }
  return r.complete ? kExitOk : kExitCap;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
  Targets targets;
  std::optional<int> board;
  SolverOptions options;
};

int cmd_bounds(const BoundsArgs& a, bool as_json) {
  const auto reports = applicable_bounds(a.targets.red, a.targets.blue);
  std::optional<BoundsVerification> check;
  if (a.board) check = verify_bounds(a.targets.red, a.targets.blue, *a.board, a.options);
  if (as_json) {
    json j = {{"red", a.targets.red_spec}, {"blue", a.targets.blue_spec}, {"bounds", json::array()}};
    for (const BoundReport& r : reports) j["bounds"].push_back(bound_to_json(r));
    if (check) {
      json cmp = json::array();
      for (const BoundComparison& c : check->comparisons) {
        cmp.push_back({{"name", c.name}, {"kind", bound_kind_name(c.kind)}, {"bound", c.bound},
                       {"applicable", c.applicable}, {"holds", c.holds}, {"note", c.note}});
      }
      j["verification"] = {{"solve", solve_json(check->solve)},
                           {"ordered_ramsey", check->ordered_ramsey ? json(*check->ordered_ramsey) : json(nullptr)},
                           {"comparisons", cmp},
                           {"all_hold", check->all_hold}};
    }
    std::cout << j.dump(2) << '\n';
  } else {
    for (const BoundReport& r : reports) {
      std::cout << r.name << ": " << bound_kind_name(r.kind) << ' ' << r.integer_view << " (" << r.quantity
                << (r.kind == BoundKind::lower ? " >= " : r.kind == BoundKind::upper ? " <= " : " = ")
                << rational_text(r.value) << ")\n";
      if (!r.assumptions.empty()) std::cout << "  assumes " << r.assumptions << '\n';
      std::cout << "  " << r.cite << '\n';
    }
    if (check) {
      std::cout << "r_o(N=" << *a.board << ") = " << value_text(check->solve.value) << '\n';
      for (const BoundComparison& c : check->comparisons) {
        std::cout << "  " << c.name << ' ' << c.bound << ": "
                  << (!c.applicable ? "not applicable" : c.holds ? "holds" : "VIOLATED");
        if (!c.note.empty()) std::cout << " (" << c.note << ')';
        std::cout << '\n';
      }
    }
  }
  return check && !check->all_hold ? kExitError : kExitOk;
}

// ---------------------------------------------------------------------------

struct RamseyArgs {
  Targets targets;
  int max_board = 8;
  std::uint64_t budget = 2'000'000'000ULL;
};

int cmd_ramsey(const RamseyArgs& a, bool as_json) {
  const RamseyResult r = ordered_ramsey_number(a.targets.red, a.targets.blue, a.max_board, a.budget);
  if (as_json) {
    std::cout << json{{"red", a.targets.red_spec}, {"blue", a.targets.blue_spec}, {"max_board", a.max_board},
                      {"value", r.value ? json(*r.value) : json(nullptr)}, {"nodes", r.nodes}}
                     .dump(2)
              << '\n';
  } else if (r.value) {
    std::cout << *r.value << '\n';
  } else {
    std::cout << "greater than " << a.max_board << '\n';
  }
  return r.value ? kExitOk : kExitCap;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
  Targets targets;
  int first = 0;
  int last = 0;
  SolverOptions options;
};

int cmd_scan(const ScanArgs& a, bool as_json) {
  const StabilizationScan s = stabilization_scan(a.targets.red, a.targets.blue, a.first, a.last, a.options);
  if (as_json) {
    json entries = json::array();
    for (const auto& e : s.entries) entries.push_back({{"board", e.board_size}, {"value", value_json(e.result.value)}});
    std::cout << json{{"entries", entries},
                      {"non_increasing", s.non_increasing},
                      {"stable_from", s.stable_from ? json(*s.stable_from) : json(nullptr)}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto& e : s.entries) std::cout << "N=" << e.board_size << "  " << value_text(e.result.value) << '\n';
    if (s.stable_from) std::cout << "constant from N=" << *s.stable_from << '\n';
    if (!s.non_increasing) std::cout << "WARNING: value increased with N\n";
  }
  return s.non_increasing ? kExitOk : kExitError;
}

// ---------------------------------------------------------------------------

struct CompileArgs {
  Targets targets;
  std::string builder;
  StrategyParams params;
  int depth_cap = 64;
  std::size_t node_cap = 1U << 22;
  std::string out;
};

int cmd_compile(const CompileArgs& a, bool as_json) {
  auto builder = make_builder(a.builder, a.targets.red, a.targets.blue, a.params);
  const DecisionTree tree = enumerate_game_tree(*builder, a.targets.red, a.targets.blue, a.depth_cap, a.node_cap);
  const RestrictionAssignment assignment = compute_restriction_bound(tree);
  const CompiledBuilder compiled = compile_to_integer_strategy(tree, assignment);
  const CompiledCheck check = verify_compiled(tree, compiled);
  if (!a.out.empty()) write_file(a.out, tree_to_json(tree, &assignment).dump(2));
  if (as_json) {
    std::cout << json{{"builder", builder->name()},
                      {"board_size", assignment.board_size},
                      {"depth", tree.max_depth},
                      {"nodes", tree.nodes.size()},
                      {"leaves", tree.leaves},
                      {"branches_checked", check.branches},
                      {"mismatches", check.mismatches}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "N=" << assignment.board_size << '\n';
    std::cout << builder->name() << ": " << tree.nodes.size() << " nodes, " << tree.leaves << " leaves, depth "
              << tree.max_depth << '\n';
    std::cout << "compiled strategy on [" << assignment.board_size << "] replays " << check.branches - check.mismatches
              << '/' << check.branches << " branches\n";
    for (const auto& f : check.failures) std::cout << "  mismatch: " << f << '\n';
  }
  return check.mismatches == 0 ? kExitOk : kExitError;
}

// ---------------------------------------------------------------------------

int cmd_replay(const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  const Transcript t = import_transcript(text.str());
  if (as_json) {
    std::cout << transcript_to_json(t).dump(2) << '\n';
  } else if (t.winner) {
    std::cout << "valid: " << color_name(*t.winner) << " wins in " << t.turns << '\n';
  } else {
    std::cout << "valid: unfinished after " << t.turns << " turns\n";
  }
  return kExitOk;
}

int cmd_serve(const std::string& host, int port) {
  SessionManager sessions;
  httplib::Server server;
  install_session_routes(server, sessions);
  std::cerr << "serving sessions on http://" << host << ':' << port << '\n';
  if (!server.listen(host, port)) throw Error("cannot listen on " + host + ":" + std::to_string(port));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online ordered Ramsey games: matches, exact values, bounds and a session server"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  MatchArgs match;
  auto* m = app.add_subcommand("match", "play one game between two strategies");
  add_targets(m, match.targets);
  m->add_option("--builder", match.builder, "builder strategy")->required();
  m->add_option("--painter", match.painter, "painter strategy")->required();
  add_strategy_params(m, match.params);
  m->add_option("--cap", match.cap, "maximum number of turns")->check(CLI::PositiveNumber);
  m->add_option("--out", match.out, "write the transcript JSON here");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "exact online value on a board of N vertices");
  add_targets(s, solve.targets);
  s->add_option("--board", solve.board, "N")->required()->check(CLI::Range(1, kMaxSolverBoard));
  s->add_option("--budget", solve.options.node_budget, "search node budget");
  s->add_flag("--no-memo", solve.no_memo, "disable the transposition table");
  s->add_flag("--no-symmetry", solve.no_symmetry, "disable symmetry merging");

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "closed-form bounds for the target pair");
  add_targets(b, bounds.targets);
  b->add_option("--board", bounds.board, "also solve on N vertices and check every bound")
      ->check(CLI::Range(1, kMaxSolverBoard));
  b->add_option("--budget", bounds.options.node_budget, "search node budget");

  RamseyArgs ramsey;
  auto* r = app.add_subcommand("ramsey", "offline ordered Ramsey number by enumeration");
  add_targets(r, ramsey.targets);
  r->add_option("--max-board", ramsey.max_board, "largest N to try")->check(CLI::Range(1, kMaxSolverBoard));
  r->add_option("--budget", ramsey.budget, "search node budget per N");

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "exact values over a range of boards");
  add_targets(sc, scan.targets);
  sc->add_option("--from", scan.first, "first N")->required()->check(CLI::Range(1, kMaxSolverBoard));
  sc->add_option("--to", scan.last, "last N")->required()->check(CLI::Range(1, kMaxSolverBoard));
  sc->add_option("--budget", scan.options.node_budget, "search node budget per N");

  CompileArgs compile;
  auto* c = app.add_subcommand("compile", "enumerate a builder's game tree and compile it onto [N]");
  add_targets(c, compile.targets);
  c->add_option("--builder", compile.builder, "builder strategy")->required();
  add_strategy_params(c, compile.params);
  c->add_option("--depth-cap", compile.depth_cap, "longest branch allowed")->check(CLI::PositiveNumber);
  c->add_option("--node-cap", compile.node_cap, "largest tree allowed");
  c->add_option("--out", compile.out, "write the tree JSON here");

  std::string replay_path;
  auto* rp = app.add_subcommand("replay", "validate a transcript file");
  rp->add_option("file", replay_path, "transcript JSON")->required();

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* sv = app.add_subcommand("serve", "run the HTTP session server");
  sv->add_option("--host", host, "address to bind");
  sv->add_option("--port", port, "port")->check(CLI::Range(1, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (m->parsed()) {
      match.targets.parse();
      return cmd_match(match, as_json);
    }
    if (s->parsed()) {
      solve.targets.parse();
      return cmd_solve(solve, as_json);
    }
    if (b->parsed()) {
      bounds.targets.parse();
      return cmd_bounds(bounds, as_json);
    }
    if (r->parsed()) {
      ramsey.targets.parse();
      return cmd_ramsey(ramsey, as_json);
    }
    if (sc->parsed()) {
      scan.targets.parse();
      if (scan.last < scan.first) throw CLI::ValidationError("--to", "must not be below --from");
      return cmd_scan(scan, as_json);
    }
    if (c->parsed()) {
      compile.targets.parse();
      return cmd_compile(compile, as_json);
    }
    if (rp->parsed()) return cmd_replay(replay_path, as_json);
    if (sv->parsed()) return cmd_serve(host, port);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

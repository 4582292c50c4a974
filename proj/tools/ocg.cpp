/*
 * Copyright 2026 The ocgames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// ocg: command-line front end.
//
// Exit codes: 0 Eve wins / ok, 1 Adam wins / certificate rejected,
// 2 unknown, 3 equivalence disagreements, 10 usage or input error,
// 11 transformation precondition violated.

#include "ocg/experiments.hpp"
#include "ocg/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

  using namespace ocg;

  enum Exit : int {
    exit_ok = 0,
    exit_adam = 1,
    exit_unknown = 2,
    exit_disagree = 3,
    exit_input = 10,
    exit_precondition = 11,
  };

  // OCG_LOG: 0/quiet, 1/info (default 0), 2/debug.
  int log_level () {
    static const int level = [] {
      const char* v = std::getenv ("OCG_LOG");
      if (!v) return 0;
      const std::string s (v);
      if (s == "debug") return 2;
      if (s == "info") return 1;
      if (s == "quiet" || s.empty ()) return 0;
      try {
        return std::stoi (s);
      }
      catch (...) {
        return 1;
      }
    }();
    return level;
  }

  void log (int level, const std::string& msg) {
    if (log_level () >= level) std::cerr << "ocg: " << msg << '\n';
  }

  struct Common {
      bool pretty = false;
      std::string out;
  };

  void emit (const Common& c, const Json& doc, const std::string& pretty_text) {
    if (!c.out.empty ()) {
      write_json_file (c.out, doc);
      log (1, "wrote " + c.out);
      if (c.pretty) std::cout << pretty_text;
      return;
    }
    std::cout << (c.pretty ? pretty_text : dump (doc));
  }

  int outcome_code (Outcome o) {
    switch (o) {
      case Outcome::EveWins: return exit_ok;
      case Outcome::AdamWins: return exit_adam;
      default: return exit_unknown;
    }
  }

  BigInt big_option (const std::string& text, const std::string& flag) {
    try {
      return parse_bigint (text);
    }
    catch (const std::invalid_argument&) {
      throw FormatError (flag + ": not an integer: \"" + text + "\"");
    }
  }

  // --- validate -----------------------------------------------------------

  int cmd_validate (const Common& c, const std::string& path) {
    const auto inst = read_instance (path);
    auto violations = validate (inst.game);
    if (violations.empty ()) violations = validate (inst.game, inst.objective);
    Json doc {{"valid", violations.empty ()}, {"violations", violations}};
    std::ostringstream text;
    if (violations.empty ())
      text << "valid: " << inst.game.states.size () << " states, " << inst.game.edges.size ()
           << " edges, " << describe (inst.objective) << '\n';
    for (const auto& v : violations) text << "invalid: " << v << '\n';
    emit (c, doc, text.str ());
    return violations.empty () ? exit_ok : exit_input;
  }

  // --- solve --------------------------------------------------------------

  struct SolveArgs {
      std::string game;
      std::string initial;
      std::string max = "4096";
      unsigned growth = 2;
      std::int64_t time_limit_ms = 0;
      bool sequential = false;
      std::string emit_dot;
      std::string emit_arena;
  };

  int cmd_solve (const Common& c, const SolveArgs& a) {
    const auto inst = read_instance (a.game);
    const IndexedGame game (inst.game);
    SolveBudget budget;
    if (!a.initial.empty ()) budget.initial_half_width = big_option (a.initial, "--initial-halfwidth");
    budget.max_half_width = big_option (a.max, "--max-halfwidth");
    budget.growth_factor = a.growth;
    if (a.time_limit_ms > 0) budget.time_limit = std::chrono::milliseconds (a.time_limit_ms);
    budget.concurrent = !a.sequential;

    const auto verdict = solve (game, inst.objective, budget);
    log (1, "solve: " + std::string (to_string (verdict.outcome)) + " after "
                + std::to_string (verdict.windows_tried) + " window(s)");

    if (!a.emit_dot.empty () || !a.emit_arena.empty ()) {
      const auto boundary = verdict.outcome == Outcome::AdamWins ? Boundary::Optimistic : Boundary::Pessimistic;
      const auto arena = expand (game, inst.objective, verdict.window, boundary);
      if (!a.emit_dot.empty ()) {
        std::ofstream os (a.emit_dot);
        write_dot (os, game, arena);
      }
      if (!a.emit_arena.empty ()) write_json_file (a.emit_arena, to_json (game, arena));
    }

    std::ostringstream text;
    text << "verdict: " << to_string (verdict.outcome) << "\nwindow: [" << verdict.window.lo << ", "
         << verdict.window.hi << "]\nwindows tried: " << verdict.windows_tried << '\n';
    if (verdict.winner ()) text << "strategy entries: " << verdict.strategy.entries ().size () << '\n';
    emit (c, to_json (game, verdict), text.str ());
    return outcome_code (verdict.outcome);
  }

  // --- transform ----------------------------------------------------------

  int cmd_transform (const Common& c, const std::string& path, const std::vector<std::string>& passes,
                     const std::string& report_path) {
    const auto inst = read_instance (path);
    const auto result = run_pipeline (inst, passes);
    Json reports = Json::array ();
    std::ostringstream text;
    for (const auto& r : result.reports) {
      reports.push_back (to_json (r));
      text << r.pass << ": +" << r.states_added << " states, +" << r.edges_added << " / -"
           << r.edges_removed << " edges, " << r.edges_rewritten << " rewritten; "
           << r.objective_before << " -> " << r.objective_after << '\n';
    }
    if (!report_path.empty ()) write_json_file (report_path, reports);
    emit (c, to_json (result.instance), text.str ());
    return exit_ok;
  }

  // --- generate / analyze -------------------------------------------------

  int cmd_generate_gn (const Common& c, unsigned n, const std::string& manifest_path) {
    const auto gn = gen_gn (n);
    if (!manifest_path.empty ()) write_json_file (manifest_path, to_json (gn.manifest));
    std::ostringstream text;
    text << "G_" << n << ": " << gn.manifest.states << " states, " << gn.manifest.edges << " edges\n";
    emit (c, to_json (gn.instance), text.str ());
    return exit_ok;
  }

  int cmd_generate_random (const Common& c, RandomGameParams p, const std::string& objective) {
    const auto kind = parse_objective_kind (objective);
    if (!kind) throw FormatError ("--objective: unknown objective \"" + objective + "\"");
    p.objective = *kind;
    const auto inst = gen_random (p);
    std::ostringstream text;
    text << "seed " << p.seed << ": " << inst.game.states.size () << " states, " << inst.game.edges.size ()
         << " edges, " << describe (inst.objective) << '\n';
    emit (c, to_json (inst), text.str ());
    return exit_ok;
  }

  std::string render_analysis (const GnAnalysis& a) {
    std::ostringstream text;
    text << "n=" << a.n << " lcm_odd=" << a.lcm_odd << " pi=" << a.prime_count << " prime_bound=2^"
         << a.prime_exponent << " chebyshev_bound=2^" << a.chebyshev_exponent;
    if (a.minimal_peak) text << " minimal_peak=" << *a.minimal_peak;
    text << '\n';
    return text.str ();
  }

  int cmd_analyze_gn (const Common& c, unsigned n, bool peak, const std::string& limit) {
    auto a = analyze_gn (n);
    if (peak) a.minimal_peak = gn_minimal_peak (n, big_option (limit, "--peak-limit"));
    emit (c, to_json (a), render_analysis (a));
    return peak && !a.minimal_peak ? exit_unknown : exit_ok;
  }

  // --- simulate / certify -------------------------------------------------

  // Fills every undefined (state, counter) of `player` with the lowest
  // enabled edge.
  void fill_default (const IndexedGame& game, Strategy& s, Player player) {
    const auto& w = s.window ();
    for (StateIndex q = 0; q < game.num_states (); ++q) {
      if (game.owner (q) != player) continue;
      for (BigInt v = w.lo; v <= w.hi; ++v) {
        if (s.choice (q, v)) continue;
        const auto moves = successors (game, {q, v});
        if (!moves.empty ()) s.set (q, v, moves.front ().edge);
      }
    }
  }

  Strategy load_strategy (const IndexedGame& game, const std::string& path, Player player,
                          const CounterWindow& fallback) {
    Strategy s;
    if (!path.empty ()) {
      const auto v = verdict_from_json (game, read_json_file (path));
      s = v.strategy;
    }
    else
      s = Strategy (fallback, game.num_states ());
    fill_default (game, s, player);
    return s;
  }

  int cmd_simulate (const Common& c, const std::string& path, const std::string& eve_path,
                    const std::string& adam_path, const std::string& half_width, std::size_t steps) {
    const auto inst = read_instance (path);
    const IndexedGame game (inst.game);
    const auto window = CounterWindow::symmetric (big_option (half_width, "--window"));
    const auto eve = load_strategy (game, eve_path, Player::Eve, window);
    const auto adam = load_strategy (game, adam_path, Player::Adam, window);
    PlayResult play;
    try {
      play = simulate (game, inst.objective, eve, adam, steps);
    }
    catch (const StrategyError& e) {
      throw FormatError (std::string ("simulate: ") + e.what ());
    }
    std::ostringstream text;
    for (const auto& p : play.trace) text << game.name (p.state) << ' ' << p.counter << '\n';
    text << "moves: " << play.trace.size () - 1 << ", target hit: " << (play.target_hit ? "yes" : "no")
         << ", accepting visits: " << play.accepting_visits << '\n';
    emit (c, to_json (play, game), text.str ());
    return exit_ok;
  }

  int cmd_certify (const Common& c, const std::string& path, const std::string& verdict_path) {
    const auto inst = read_instance (path);
    const IndexedGame game (inst.game);
    const auto verdict = verdict_from_json (game, read_json_file (verdict_path));
    if (verdict.outcome == Outcome::Unknown) throw FormatError ("certify: the verdict is unknown");
    const auto cert = certify (game, inst.objective, verdict);
    Json doc {{"certified", cert.ok}, {"detail", cert.detail}};
    emit (c, doc, std::string (cert.ok ? "certified" : "rejected") + ": " + cert.detail + "\n");
    return cert.ok ? exit_ok : exit_adam;
  }

  // --- check-equiv / experiment -------------------------------------------

  int cmd_check_equiv (const Common& c, EquivConfig config, const std::string& half_width) {
    config.budget = EquivConfig::fixed_budget (big_option (half_width, "--half-width"));
    const auto r = check_equivalence (config);
    std::ostringstream text;
    text << "pass " << config.pass << " on " << r.objective << ", " << config.count << " instances from seed "
         << config.seed << "\n  native decisive: " << r.native_decisive << "\n  decisive on both sides: "
         << r.decisive_both << "\n  agreements: " << r.agreements << "\n  unknown: " << r.unknown.size ()
         << "\n  disagreements: " << r.disagreements.size () << '\n';
    emit (c, to_json (r), text.str ());
    return r.disagreements.empty () ? exit_ok : exit_disagree;
  }

  int cmd_experiment_gn (const Common& c, unsigned from, unsigned to, unsigned peak_max_n,
                         const std::string& limit) {
    if (from < 1 || from > to) throw FormatError ("experiment: need 1 <= --from <= --to");
    const auto rows = gn_table (from, to, peak_max_n, big_option (limit, "--peak-limit"));
    std::ostringstream text;
    text << std::setw (3) << "n" << std::setw (24) << "lcm_odd" << std::setw (10) << "2^(pi-1)" << std::setw (12)
         << "2^(2^n/n-1)" << std::setw (10) << "peak" << '\n';
    for (const auto& r : rows) {
      const auto& a = r.analysis;
      std::ostringstream lcm;
      lcm << a.lcm_odd;
      auto lcm_text = lcm.str ();
      if (lcm_text.size () > 22) lcm_text = lcm_text.substr (0, 8) + "..(" + std::to_string (lcm_text.size ()) + "d)";
      text << std::setw (3) << a.n << std::setw (24) << lcm_text << std::setw (10)
           << ("2^" + std::to_string (a.prime_exponent)) << std::setw (12)
           << ("2^" + std::to_string (a.chebyshev_exponent)) << std::setw (10)
           << (a.minimal_peak ? a.minimal_peak->get_str () : std::string ("-")) << '\n';
    }
    emit (c, to_json (rows), text.str ());
    return exit_ok;
  }

}

int main (int argc, char** argv) {
  CLI::App app {"Two-player games on succinct one-counter graphs"};
  app.require_subcommand (1);
  app.fallthrough ();
  Common common;
  app.add_flag ("--pretty", common.pretty, "Human-readable output instead of JSON");

  auto add_out = [&] (CLI::App* sub) {
    sub->add_option ("-o,--out", common.out, "Write the JSON result to this file");
  };

  std::string game_path;
  int code = exit_ok;

  auto* validate_cmd = app.add_subcommand ("validate", "Check a game file");
  validate_cmd->add_option ("game,--game", game_path, "Game JSON")->required ();
  add_out (validate_cmd);
  validate_cmd->callback ([&] { code = cmd_validate (common, game_path); });

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand ("solve", "Decide the winner by windowed expansion");
  solve_cmd->add_option ("game,--game", solve_args.game, "Game JSON")->required ();
  solve_cmd->add_option ("--initial-halfwidth", solve_args.initial, "First window half-width");
  solve_cmd->add_option ("--max-halfwidth", solve_args.max, "Largest window half-width")->capture_default_str ();
  solve_cmd->add_option ("--growth", solve_args.growth, "Window growth factor")->capture_default_str ();
  solve_cmd->add_option ("--time-limit-ms", solve_args.time_limit_ms, "Wall-clock budget");
  solve_cmd->add_flag ("--sequential", solve_args.sequential, "Solve the two boundary semantics in turn");
  solve_cmd->add_option ("--emit-dot", solve_args.emit_dot, "Write the deciding arena as Graphviz");
  solve_cmd->add_option ("--emit-arena", solve_args.emit_arena, "Write the deciding arena as JSON");
  add_out (solve_cmd);
  solve_cmd->callback ([&] { code = cmd_solve (common, solve_args); });

  std::vector<std::string> passes;
  std::string report_path;
  auto* transform_cmd = app.add_subcommand ("transform", "Apply rewriting passes left to right");
  transform_cmd->add_option ("game,--game", game_path, "Game JSON")->required ();
  transform_cmd->add_option ("--passes", passes, "normalize,dezero,buchi2reach,reach2global,shift")
      ->delimiter (',')
      ->required ();
  transform_cmd->add_option ("--emit-report", report_path, "Write the pass reports as JSON");
  add_out (transform_cmd);
  transform_cmd->callback ([&] { code = cmd_transform (common, game_path, passes, report_path); });

  auto* generate_cmd = app.add_subcommand ("generate", "Emit generated games");
  generate_cmd->require_subcommand (1);
  unsigned gn_n = 2;
  std::string manifest_path;
  auto* gen_gn_cmd = generate_cmd->add_subcommand ("gn", "The G_n family");
  gen_gn_cmd->add_option ("--n", gn_n, "Bit width")->required ();
  gen_gn_cmd->add_option ("--emit-manifest", manifest_path, "Write the size manifest as JSON");
  add_out (gen_gn_cmd);
  gen_gn_cmd->callback ([&] { code = cmd_generate_gn (common, gn_n, manifest_path); });

  RandomGameParams random_params;
  random_params.seed = default_seed;
  std::string objective = "reach";
  auto* gen_random_cmd = generate_cmd->add_subcommand ("random", "Seeded random game");
  gen_random_cmd->add_option ("--seed", random_params.seed)->capture_default_str ();
  gen_random_cmd->add_option ("--states", random_params.states)->capture_default_str ();
  gen_random_cmd->add_option ("--max-weight", random_params.max_abs_weight)->capture_default_str ();
  gen_random_cmd->add_option ("--zero-density", random_params.zero_test_density)->capture_default_str ();
  gen_random_cmd->add_option ("--objective", objective, "global-reach, reach, buchi or parity")
      ->capture_default_str ();
  gen_random_cmd->add_option ("--target", random_params.target)->capture_default_str ();
  add_out (gen_random_cmd);
  gen_random_cmd->callback ([&] { code = cmd_generate_random (common, random_params, objective); });

  auto* analyze_cmd = app.add_subcommand ("analyze", "Exact bounds for generated families");
  analyze_cmd->require_subcommand (1);
  bool with_peak = false;
  std::string peak_limit = "4096";
  auto* analyze_gn_cmd = analyze_cmd->add_subcommand ("gn", "Bounds for G_n");
  analyze_gn_cmd->add_option ("--n", gn_n, "Bit width")->required ();
  analyze_gn_cmd->add_flag ("--peak", with_peak, "Also search the minimal deciding window");
  analyze_gn_cmd->add_option ("--peak-limit", peak_limit)->capture_default_str ();
  add_out (analyze_gn_cmd);
  analyze_gn_cmd->callback ([&] { code = cmd_analyze_gn (common, gn_n, with_peak, peak_limit); });

  std::string eve_path, adam_path, sim_window = "64";
  std::size_t steps = 1000;
  auto* simulate_cmd = app.add_subcommand ("simulate", "Play two strategies against each other");
  simulate_cmd->add_option ("game,--game", game_path, "Game JSON")->required ();
  simulate_cmd->add_option ("--eve", eve_path, "Verdict file holding Eve's strategy");
  simulate_cmd->add_option ("--adam", adam_path, "Verdict file holding Adam's strategy");
  simulate_cmd->add_option ("--window", sim_window, "Half-width for default strategies")->capture_default_str ();
  simulate_cmd->add_option ("--steps", steps)->capture_default_str ();
  add_out (simulate_cmd);
  simulate_cmd->callback ([&] { code = cmd_simulate (common, game_path, eve_path, adam_path, sim_window, steps); });

  std::string verdict_path;
  auto* certify_cmd = app.add_subcommand ("certify", "Check a verdict's strategy");
  certify_cmd->add_option ("game,--game", game_path, "Game JSON")->required ();
  certify_cmd->add_option ("--verdict", verdict_path, "Verdict JSON")->required ();
  add_out (certify_cmd);
  certify_cmd->callback ([&] { code = cmd_certify (common, game_path, verdict_path); });

  EquivConfig equiv;
  std::string equiv_half_width = "64";
  auto* equiv_cmd = app.add_subcommand ("check-equiv", "Differential solving over a random corpus");
  equiv_cmd->add_option ("--pass", equiv.pass)->capture_default_str ();
  equiv_cmd->add_option ("--count", equiv.count)->capture_default_str ();
  equiv_cmd->add_option ("--seed", equiv.seed)->capture_default_str ();
  equiv_cmd->add_option ("--states", equiv.states)->capture_default_str ();
  equiv_cmd->add_option ("--max-weight", equiv.max_abs_weight)->capture_default_str ();
  equiv_cmd->add_option ("--zero-density", equiv.zero_test_density)->capture_default_str ();
  equiv_cmd->add_option ("--half-width", equiv_half_width)->capture_default_str ();
  equiv_cmd->add_option ("--jobs", equiv.jobs, "Worker threads, 0 for all cores")->capture_default_str ();
  add_out (equiv_cmd);
  equiv_cmd->callback ([&] { code = cmd_check_equiv (common, equiv, equiv_half_width); });

  auto* experiment_cmd = app.add_subcommand ("experiment", "Scripted experiments");
  experiment_cmd->require_subcommand (1);
  unsigned from = 1, to = 16, peak_max_n = 3;
  auto* experiment_gn_cmd = experiment_cmd->add_subcommand ("gn", "Bound table for G_n");
  experiment_gn_cmd->add_option ("--from", from)->capture_default_str ();
  experiment_gn_cmd->add_option ("--to", to)->capture_default_str ();
  experiment_gn_cmd->add_option ("--peak-max-n", peak_max_n, "Solve for the peak up to this n")
      ->capture_default_str ();
  experiment_gn_cmd->add_option ("--peak-limit", peak_limit)->capture_default_str ();
  add_out (experiment_gn_cmd);
  experiment_gn_cmd->callback ([&] { code = cmd_experiment_gn (common, from, to, peak_max_n, peak_limit); });

  try {
    app.parse (argc, argv);
  }
  catch (const CLI::ParseError& e) {
    const int rc = app.exit (e);
    return rc == 0 ? exit_ok : exit_input;
  }
  catch (const PreconditionError& e) {
    std::cerr << "ocg: precondition violated in pass " << e.pass << ": " << e.what () << '\n';
    return exit_precondition;
  }
  catch (const InvalidGame& e) {
    std::cerr << "ocg: invalid game\n";
    for (const auto& v : e.report) std::cerr << "  " << v << '\n';
    return exit_input;
  }
  catch (const std::exception& e) {
    std::cerr << "ocg: " << e.what () << '\n';
    return exit_input;
  }
  return code;
}

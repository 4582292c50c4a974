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

#include "ocg/play.hpp"

#include <algorithm>
#include <deque>
#include <future>

namespace ocg {

  std::string_view to_string (Outcome o) {
    switch (o) {
      case Outcome::EveWins: return "eve";
      case Outcome::AdamWins: return "adam";
      case Outcome::Unknown: return "unknown";
    }
    return "?";
  }

  Strategy::Strategy (CounterWindow window, std::size_t num_states) :
    window_ (std::move (window)), states_ (num_states) {
    const auto width = to_int64 (BigInt (window_.hi - window_.lo + 1));
    if (!width || *width <= 0)
      throw std::invalid_argument ("strategy window is empty or too large");
    width_ = static_cast<std::uint64_t> (*width);
    table_.assign (states_ * width_, no_choice);
  }

  std::optional<std::size_t> Strategy::slot (StateIndex s, const BigInt& counter) const {
    if (s >= states_ || !window_.contains (counter)) return std::nullopt;
    return s * width_ + static_cast<std::uint64_t> (*to_int64 (BigInt (counter - window_.lo)));
  }

  std::optional<std::size_t> Strategy::choice (StateIndex s, const BigInt& counter) const {
    auto i = slot (s, counter);
    if (!i || table_[*i] == no_choice) return std::nullopt;
    return static_cast<std::size_t> (table_[*i]);
  }

  void Strategy::set (StateIndex s, const BigInt& counter, std::size_t edge) {
    auto i = slot (s, counter);
    if (!i)
      throw std::out_of_range ("strategy position outside its window: counter "
                               + to_decimal (counter));
    table_[*i] = static_cast<std::int64_t> (edge);
  }

  void Strategy::erase (StateIndex s, const BigInt& counter) {
    if (auto i = slot (s, counter)) table_[*i] = no_choice;
  }

  std::vector<Strategy::Entry> Strategy::entries () const {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < table_.size (); ++i)
      if (table_[i] != no_choice)
        out.push_back ({static_cast<StateIndex> (i / width_),
                        window_.lo + BigInt (static_cast<unsigned long> (i % width_)),
                        static_cast<std::size_t> (table_[i])});
    return out;
  }

  bool Strategy::empty () const {
    return std::all_of (table_.begin (), table_.end (), [] (auto c) { return c == no_choice; });
  }

  Strategy extract_strategy (const ExpandedArena& a, const ArenaSolution& sol,
                             Player player, bool winning_only) {
    Strategy out (a.window (), a.num_states ());
    auto record = [&] (Vertex v, const Position& at) {
      if (a.owner (v) != player || (winning_only && sol.winner[v] != player)) return;
      const auto origin = a.origin (static_cast<ArenaEdge> (sol.choice[v]));
      if (origin == no_game_edge)
        out.erase (at.state, at.counter);
      else
        out.set (at.state, at.counter, static_cast<std::size_t> (origin));
    };
    const auto grid = a.num_states () * a.width ();
    for (Vertex v = 0; v < grid; ++v) record (v, *a.position (v));
    // The entry copy shares its position with the initial vertex. Once that
    // vertex is a target its own move is irrelevant, so the entry's move wins.
    if (auto entry = a.entry (); entry && a.targets ()[a.grid_initial ()])
      record (*entry, *a.position (*entry));
    return out;
  }

  namespace {

    struct WindowResult {
        ExpandedArena arena;
        ArenaSolution solution;
    };

    WindowResult solve_window (const IndexedGame& game, const ResolvedObjective& obj,
                               const CounterWindow& w, Boundary b) {
      auto arena = expand (game, obj, w, b);
      auto solution = solve_arena (arena);
      return {std::move (arena), std::move (solution)};
    }

  }

  Verdict solve (const IndexedGame& game, const Objective& obj, const SolveBudget& budget) {
    if (budget.growth_factor < 2)
      throw std::invalid_argument ("growth factor must be at least 2");
    if (budget.max_half_width < 0)
      throw std::invalid_argument ("maximum half-width must be non-negative");
    if (budget.initial_half_width
        && (*budget.initial_half_width < 0 || *budget.initial_half_width > budget.max_half_width))
      throw std::invalid_argument ("initial half-width must lie in [0, max half-width]");

    const auto resolved = resolve (game, obj);
    const bool reach_type = resolved.type == ResolvedObjective::Type::Reach
                            || resolved.type == ResolvedObjective::Type::GlobalReach;
    const BigInt need = reach_type ? BigInt (abs (resolved.target)) : BigInt (0);

    BigInt h;
    if (budget.initial_half_width)
      h = *budget.initial_half_width;
    else {
      h = std::max (BigInt (64), BigInt (2 * need));
      if (h > budget.max_half_width) h = budget.max_half_width;
    }

    const auto start = std::chrono::steady_clock::now ();
    Verdict verdict;
    while (true) {
      if (h >= need) {
        const auto w = CounterWindow::symmetric (h);
        verdict.window = w;
        ++verdict.windows_tried;
        std::future<WindowResult> pending;
        if (budget.concurrent)
          pending = std::async (std::launch::async, solve_window, std::cref (game),
                                std::cref (resolved), std::cref (w), Boundary::Optimistic);
        const auto pess = solve_window (game, resolved, w, Boundary::Pessimistic);
        const auto opt = budget.concurrent ? pending.get ()
                                           : solve_window (game, resolved, w, Boundary::Optimistic);

        if (pess.solution.eve_wins (pess.arena.initial ())) {
          verdict.outcome = Outcome::EveWins;
          verdict.strategy = extract_strategy (pess.arena, pess.solution, Player::Eve, true);
          verdict.opponent = extract_strategy (pess.arena, pess.solution, Player::Adam, false);
          return verdict;
        }
        if (!opt.solution.eve_wins (opt.arena.initial ())) {
          verdict.outcome = Outcome::AdamWins;
          verdict.strategy = extract_strategy (opt.arena, opt.solution, Player::Adam, true);
          verdict.opponent = extract_strategy (opt.arena, opt.solution, Player::Eve, false);
          return verdict;
        }
      }
      if (h >= budget.max_half_width) break;
      if (budget.time_limit && std::chrono::steady_clock::now () - start >= *budget.time_limit) break;
      h = std::min (std::max (BigInt (h * budget.growth_factor), BigInt (h + 1)), budget.max_half_width);
    }
    verdict.outcome = Outcome::Unknown;
    return verdict;
  }

  namespace {

    std::string describe_position (const IndexedGame& game, const Position& p) {
      return "(" + game.name (p.state) + ", " + to_decimal (p.counter) + ")";
    }

  }

  PlayResult simulate (const IndexedGame& game, const Objective& obj, const Strategy& eve,
                       const Strategy& adam, std::size_t max_steps) {
    using Type = ResolvedObjective::Type;
    const auto resolved = resolve (game, obj);
    PlayResult result;
    Position pos {game.initial (), 0};
    result.trace.push_back (pos);

    auto observe = [&] (const Position& p, std::size_t time) {
      switch (resolved.type) {
        case Type::Reach:
          result.target_hit = resolved.states[p.state] && p.counter == resolved.target;
          break;
        case Type::GlobalReach:
          result.target_hit = time >= 1 && p.counter == resolved.target;
          break;
        case Type::Buchi:
          if (resolved.states[p.state] && p.counter == 0) ++result.accepting_visits;
          break;
        case Type::Parity:
          break;
      }
    };

    observe (pos, 0);
    for (std::size_t step = 1; step <= max_steps && !result.target_hit; ++step) {
      const auto moves = successors (game, pos);
      const auto owner = game.owner (pos.state);
      if (moves.empty ()) {
        result.stuck = owner;
        break;
      }
      const auto& strategy = owner == Player::Eve ? eve : adam;
      const auto pick = strategy.choice (pos.state, pos.counter);
      if (!pick)
        throw StrategyError (std::string (to_string (owner)) + "'s strategy is undefined at "
                             + describe_position (game, pos));
      auto it = std::find_if (moves.begin (), moves.end (),
                              [&] (const Move& m) { return m.edge == *pick; });
      if (it == moves.end ())
        throw StrategyError (std::string (to_string (owner)) + "'s strategy picks edge "
                             + std::to_string (*pick) + ", not enabled at "
                             + describe_position (game, pos));
      pos = it->to;
      result.trace.push_back (pos);
      observe (pos, step);
    }
    return result;
  }

  Certificate certify (const IndexedGame& game, const Objective& obj, const Verdict& verdict) {
    const auto winner = verdict.winner ();
    if (!winner)
      throw std::invalid_argument ("nothing to certify: verdict is unknown");
    const auto boundary = *winner == Player::Eve ? Boundary::Pessimistic : Boundary::Optimistic;
    const auto arena = expand (game, obj, verdict.window, boundary);
    const auto n = arena.num_vertices ();

    std::vector<std::int64_t> choice (n, no_choice);
    for (Vertex v = 0; v < n; ++v) {
      if (arena.is_sink (v) || arena.owner (v) != *winner) continue;
      const auto p = arena.position (v);
      if (auto c = verdict.strategy.choice (p->state, p->counter))
        choice[v] = static_cast<std::int64_t> (*c);
    }

    // Walk the positions the winner's strategy can be driven to and check
    // every consulted move before re-solving.
    std::vector<bool> seen (n, false);
    std::deque<Vertex> queue {arena.initial ()};
    seen[arena.initial ()] = true;
    while (!queue.empty ()) {
      const auto v = queue.front ();
      queue.pop_front ();
      if (arena.is_sink (v) || (arena.targets ().size () == n && arena.targets ()[v]
                                && arena.objective_type () != ResolvedObjective::Type::Buchi))
        continue;
      const bool dead_end = arena.edges_end (v) - arena.edges_begin (v) == 1
                            && arena.origin (arena.edges_begin (v)) == no_game_edge;
      for (auto e = arena.edges_begin (v); e < arena.edges_end (v); ++e) {
        if (arena.owner (v) == *winner && !dead_end) {
          if (arena.origin (e) != choice[v]) continue;
          // A game edge only reaches a sink by leaving the window.
          if (arena.is_sink (arena.head (e)))
            return {false, "strategy leaves its window at " + describe_position (game, *arena.position (v))};
        }
        const auto h = arena.head (e);
        if (!seen[h]) {
          seen[h] = true;
          queue.push_back (h);
        }
      }
      if (arena.owner (v) == *winner && !dead_end) {
        bool legal = false;
        for (auto e = arena.edges_begin (v); e < arena.edges_end (v); ++e)
          legal = legal || arena.origin (e) == choice[v];
        if (choice[v] == no_choice)
          return {false, "strategy undefined at " + describe_position (game, *arena.position (v))};
        if (!legal)
          return {false, "strategy picks a disabled edge at " + describe_position (game, *arena.position (v))};
      }
    }

    const auto fixed = arena.with_choices (*winner, choice);
    const auto sol = solve_arena (fixed);
    if (sol.winner[fixed.initial ()] != *winner)
      return {false, "opponent escapes the fixed strategy within window ["
                       + to_decimal (verdict.window.lo) + ", " + to_decimal (verdict.window.hi) + "]"};
    return {true, "certified"};
  }

}

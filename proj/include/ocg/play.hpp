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

#pragma once

#include "ocg/arena.hpp"
#include "ocg/solver.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocg {

  /// Positional strategy on (state, counter) pairs inside a window, i.e. a
  /// finite-memory strategy of the one-counter game. Values are game edge
  /// indices.
  class Strategy {
    public:
      struct Entry {
          StateIndex state;
          BigInt counter;
          std::size_t edge;
          bool operator== (const Entry&) const = default;
      };

      Strategy () = default;
      Strategy (CounterWindow window, std::size_t num_states);

      const CounterWindow& window () const { return window_; }
      std::size_t num_states () const { return states_; }

      std::optional<std::size_t> choice (StateIndex s, const BigInt& counter) const;
      /// Throws std::out_of_range outside the window.
      void set (StateIndex s, const BigInt& counter, std::size_t edge);
      void erase (StateIndex s, const BigInt& counter);

      /// Defined entries, ordered by state then counter.
      std::vector<Entry> entries () const;
      bool empty () const;

      bool operator== (const Strategy&) const = default;

    private:
      std::optional<std::size_t> slot (StateIndex s, const BigInt& counter) const;

      CounterWindow window_;
      std::size_t states_ = 0;
      std::uint64_t width_ = 0;
      std::vector<std::int64_t> table_;
  };

  /// Projects an arena solution onto the game: `player`'s choices at its grid
  /// vertices, restricted to where it wins when `winning_only` is set.
  Strategy extract_strategy (const ExpandedArena& arena, const ArenaSolution& sol,
                             Player player, bool winning_only);

  struct SolveBudget {
      /// Unset: max(64, 2|t|), clamped to max_half_width.
      std::optional<BigInt> initial_half_width;
      unsigned growth_factor = 2;
      BigInt max_half_width = 4096;
      std::optional<std::chrono::milliseconds> time_limit;
      bool concurrent = true;
  };

  enum class Outcome : std::uint8_t { EveWins, AdamWins, Unknown };

  std::string_view to_string (Outcome o);

  struct Verdict {
      Outcome outcome = Outcome::Unknown;
      /// Deciding window, or the last window tried for Unknown.
      CounterWindow window;
      /// Winner's strategy on its winning region inside the window.
      Strategy strategy;
      /// Loser's positional strategy on the same arena (not winning).
      Strategy opponent;
      std::size_t windows_tried = 0;

      std::optional<Player> winner () const {
        if (outcome == Outcome::EveWins) return Player::Eve;
        if (outcome == Outcome::AdamWins) return Player::Adam;
        return std::nullopt;
      }
  };

  /// Solves each window of the growth schedule under both boundary
  /// semantics. Eve winning pessimistically or Adam winning optimistically
  /// decides the infinite game; otherwise the window grows until the budget
  /// is exhausted. Throws std::invalid_argument on an invalid budget.
  Verdict solve (const IndexedGame& game, const Objective& obj, const SolveBudget& budget = {});

  struct PlayResult {
      std::vector<Position> trace;
      bool target_hit = false;
      std::size_t accepting_visits = 0;
      /// Owner of the dead end that ended the play, if any.
      std::optional<Player> stuck;
  };

  struct StrategyError : std::runtime_error {
      using std::runtime_error::runtime_error;
  };

  /// Plays both strategies for at most max_steps moves. Reach-type plays stop
  /// at the first target hit (after at least one move for global reachability).
  PlayResult simulate (const IndexedGame& game, const Objective& obj, const Strategy& eve,
                       const Strategy& adam, std::size_t max_steps);

  struct Certificate {
      bool ok = false;
      std::string detail;
      explicit operator bool () const { return ok; }
  };

  /// Fixes the winner's moves, re-solves the window (pessimistic for Eve,
  /// optimistic for Adam) and checks that the loser cannot escape. Throws
  /// std::invalid_argument for an Unknown verdict.
  Certificate certify (const IndexedGame& game, const Objective& obj, const Verdict& verdict);

}

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

#include "ocg/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace ocg {

  enum class Player : std::uint8_t { Eve, Adam };

  constexpr Player opponent (Player p) {
    return p == Player::Eve ? Player::Adam : Player::Eve;
  }

  std::string_view to_string (Player p);

  /// Always edges shift the counter by their weight; ZeroOnly edges are
  /// enabled only at counter 0 and NonZeroOnly edges only away from 0.
  enum class EdgeKind : std::uint8_t { Always, ZeroOnly, NonZeroOnly };

  std::string_view to_string (EdgeKind k);

  struct StateDecl {
      std::string name;
      Player owner = Player::Eve;

      bool operator== (const StateDecl&) const = default;
  };

  struct Edge {
      std::string from;
      std::string to;
      BigInt weight = 0;
      EdgeKind kind = EdgeKind::Always;

      bool operator== (const Edge&) const = default;
  };

  /// Finite description of a one-counter game graph. Plain data: it may be
  /// malformed, see validate(). Parallel edges are allowed.
  struct OneCounterGame {
      std::vector<StateDecl> states;
      std::string initial;
      std::vector<Edge> edges;

      bool operator== (const OneCounterGame&) const = default;
  };

  // Objectives. Reach and Buchi count the initial position; GlobalReach only
  // counts positions reached after at least one move.
  struct GlobalReach {
      BigInt target = 0;
      bool operator== (const GlobalReach&) const = default;
  };

  struct Reach {
      BigInt target = 0;
      std::vector<std::string> states;
      bool operator== (const Reach&) const = default;
  };

  /// Visit (f, 0) for some f in `states` infinitely often.
  struct Buchi {
      std::vector<std::string> states;
      bool operator== (const Buchi&) const = default;
  };

  /// Max-parity: Eve wins iff the largest priority seen infinitely often is even.
  struct Parity {
      std::map<std::string, std::uint64_t> priorities;
      bool operator== (const Parity&) const = default;
  };

  using Objective = std::variant<GlobalReach, Reach, Buchi, Parity>;

  std::string describe (const Objective& obj);

  /// Target counter value of a reach-type objective, if any.
  std::optional<BigInt> target_value (const Objective& obj);

  struct Instance {
      OneCounterGame game;
      Objective objective;

      bool operator== (const Instance&) const = default;
  };

  using ValidationReport = std::vector<std::string>;

  ValidationReport validate (const OneCounterGame& game);

  /// Checks the objective against a (well-formed) game.
  ValidationReport validate (const OneCounterGame& game, const Objective& obj);

  struct InvalidGame : std::invalid_argument {
      explicit InvalidGame (const ValidationReport& report);
      ValidationReport report;
  };

  using StateIndex = std::uint32_t;

  struct ResolvedEdge {
      StateIndex from;
      StateIndex to;
      BigInt weight;
      EdgeKind kind;
  };

  /// Index-resolved view of a validated game. Edge indices are positions in
  /// the source edge list.
  class IndexedGame {
    public:
      explicit IndexedGame (OneCounterGame game);

      const OneCounterGame& source () const { return game_; }
      std::size_t num_states () const { return game_.states.size (); }
      std::size_t num_edges () const { return edges_.size (); }

      std::optional<StateIndex> find (std::string_view name) const;
      StateIndex index_of (std::string_view name) const;
      const std::string& name (StateIndex s) const { return game_.states[s].name; }
      Player owner (StateIndex s) const { return game_.states[s].owner; }
      StateIndex initial () const { return initial_; }

      const ResolvedEdge& edge (std::size_t e) const { return edges_[e]; }
      std::span<const std::size_t> out_edges (StateIndex s) const {
        return {out_.data () + offsets_[s], out_.data () + offsets_[s + 1]};
      }
      bool has_zero_tests () const;

    private:
      OneCounterGame game_;
      std::unordered_map<std::string, StateIndex> by_name_;
      std::vector<ResolvedEdge> edges_;
      std::vector<std::size_t> offsets_;
      std::vector<std::size_t> out_;
      StateIndex initial_ = 0;
  };

  /// Objective with state names resolved against an IndexedGame.
  struct ResolvedObjective {
      enum class Type : std::uint8_t { GlobalReach, Reach, Buchi, Parity };
      Type type;
      BigInt target = 0;
      std::vector<bool> states;              // F for Reach/Buchi
      std::vector<std::uint64_t> priorities; // Parity
  };

  ResolvedObjective resolve (const IndexedGame& game, const Objective& obj);

  struct Position {
      StateIndex state;
      BigInt counter;

      bool operator== (const Position&) const = default;
  };

  struct Move {
      std::size_t edge;
      Position to;
  };

  /// Arena successors of a position, in edge-index order.
  std::vector<Move> successors (const IndexedGame& game, const Position& p);

  /// True iff edge e is enabled at counter value c.
  bool enabled (const ResolvedEdge& e, const BigInt& c);

}

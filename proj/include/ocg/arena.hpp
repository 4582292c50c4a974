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

#include "ocg/game.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace ocg {

  struct CounterWindow {
      BigInt lo = 0;
      BigInt hi = 0;

      static CounterWindow symmetric (const BigInt& half_width) { return {-half_width, half_width}; }
      bool contains (const BigInt& c) const { return lo <= c && c <= hi; }
      bool operator== (const CounterWindow&) const = default;
  };

  /// What happens to a move whose target counter leaves the window.
  enum class Boundary : std::uint8_t {
    Pessimistic, ///< absorbing Adam-win vertex
    Optimistic   ///< absorbing Eve-win vertex
  };

  std::string_view to_string (Boundary b);

  using Vertex = std::uint32_t;
  using ArenaEdge = std::uint64_t;

  /// Marks an arena edge that does not come from an edge of the game: sink
  /// self-loops and dead-end redirections.
  inline constexpr std::int64_t no_game_edge = -1;

  /// Finite game over (state, counter) pairs inside a counter window, plus an
  /// Eve-winning and an Adam-winning absorbing sink. Vertex (s, c) has index
  /// s * width + (c - lo); the sinks follow, then (for global reachability)
  /// a non-target entry copy of the initial vertex.
  class ExpandedArena {
    public:
      std::size_t num_vertices () const { return owner_.size (); }
      std::size_t num_edges () const { return heads_.size (); }

      Player owner (Vertex v) const { return owner_[v]; }

      ArenaEdge edges_begin (Vertex v) const { return offsets_[v]; }
      ArenaEdge edges_end (Vertex v) const { return offsets_[v + 1]; }
      Vertex head (ArenaEdge e) const { return heads_[e]; }
      std::int64_t origin (ArenaEdge e) const { return origin_[e]; }
      std::span<const Vertex> predecessors (Vertex v) const {
        return {preds_.data () + pred_offsets_[v], preds_.data () + pred_offsets_[v + 1]};
      }

      Vertex eve_sink () const { return eve_sink_; }
      Vertex adam_sink () const { return adam_sink_; }
      Vertex initial () const { return initial_; }
      /// The (initial state, 0) grid vertex; differs from initial() only when
      /// an entry copy exists.
      Vertex grid_initial () const { return grid_initial_; }
      std::optional<Vertex> entry () const { return entry_; }
      bool is_sink (Vertex v) const { return v == eve_sink_ || v == adam_sink_; }

      ResolvedObjective::Type objective_type () const { return type_; }
      /// Reach targets, or Buchi accepting vertices.
      const std::vector<bool>& targets () const { return targets_; }
      std::uint64_t priority (Vertex v) const { return priorities_.empty () ? 0 : priorities_[v]; }

      const CounterWindow& window () const { return window_; }
      Boundary boundary () const { return boundary_; }
      std::size_t num_states () const { return num_states_; }
      std::uint64_t width () const { return width_; }

      /// (state, counter) of a vertex; the entry copy maps to the initial
      /// position; sinks have none.
      std::optional<Position> position (Vertex v) const;
      std::optional<Vertex> vertex_at (StateIndex s, const BigInt& counter) const;

      /// Copy in which every vertex of `player` keeps only the arena edge whose
      /// game edge is choice[v]. A vertex with real moves but no matching
      /// choice is sent to the sink that loses for its owner.
      ExpandedArena with_choices (Player player, const std::vector<std::int64_t>& choice) const;

      bool operator== (const ExpandedArena&) const = default;

    private:
      friend ExpandedArena expand (const IndexedGame&, const ResolvedObjective&,
                                   const CounterWindow&, Boundary);
      void build_predecessors ();

      std::vector<Player> owner_;
      std::vector<ArenaEdge> offsets_;
      std::vector<Vertex> heads_;
      std::vector<std::int64_t> origin_;
      std::vector<ArenaEdge> pred_offsets_;
      std::vector<Vertex> preds_;
      std::vector<bool> targets_;
      std::vector<std::uint64_t> priorities_;
      Vertex eve_sink_ = 0, adam_sink_ = 0, initial_ = 0, grid_initial_ = 0;
      std::optional<Vertex> entry_;
      ResolvedObjective::Type type_ = ResolvedObjective::Type::Reach;
      CounterWindow window_;
      Boundary boundary_ = Boundary::Pessimistic;
      std::size_t num_states_ = 0;
      std::uint64_t width_ = 0;
  };

  /// Throws std::invalid_argument if the window excludes 0 or the target
  /// value, or is too large to materialize.
  ExpandedArena expand (const IndexedGame& game, const ResolvedObjective& obj,
                        const CounterWindow& window, Boundary boundary);

  ExpandedArena expand (const IndexedGame& game, const Objective& obj,
                        const CounterWindow& window, Boundary boundary);

  /// Graphviz rendering, meant for small arenas.
  void write_dot (std::ostream& os, const IndexedGame& game, const ExpandedArena& arena);

}

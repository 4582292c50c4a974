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

#include "ocg/arena.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace ocg {

  std::string_view to_string (Boundary b) {
    return b == Boundary::Pessimistic ? "pessimistic" : "optimistic";
  }

  namespace {
    constexpr std::uint64_t max_vertices = std::uint64_t {1} << 31;
  }

  ExpandedArena expand (const IndexedGame& game, const ResolvedObjective& obj,
                        const CounterWindow& window, Boundary boundary) {
    using Type = ResolvedObjective::Type;
    if (!window.contains (0))
      throw std::invalid_argument ("counter window must contain 0");
    const bool reach_type = obj.type == Type::Reach || obj.type == Type::GlobalReach;
    if (reach_type && !window.contains (obj.target))
      throw std::invalid_argument ("counter window must contain the target value "
                                   + to_decimal (obj.target));

    const auto width_big = BigInt (window.hi - window.lo + 1);
    const auto width_opt = to_int64 (width_big);
    const std::uint64_t states = game.num_states ();
    if (!width_opt || static_cast<std::uint64_t> (*width_opt) > max_vertices / (states + 1))
      throw std::invalid_argument ("counter window too large to expand");
    const auto width = static_cast<std::uint64_t> (*width_opt);
    const auto zero_offset = static_cast<std::uint64_t> (*to_int64 (BigInt (-window.lo)));

    ExpandedArena a;
    a.window_ = window;
    a.boundary_ = boundary;
    a.type_ = obj.type;
    a.num_states_ = states;
    a.width_ = width;

    const auto grid = static_cast<Vertex> (states * width);
    a.eve_sink_ = grid;
    a.adam_sink_ = grid + 1;
    const Vertex count = grid + 2 + (obj.type == Type::GlobalReach ? 1 : 0);
    const Vertex out_sink = boundary == Boundary::Pessimistic ? a.adam_sink_ : a.eve_sink_;

    // Per-edge counter delta, or nullopt when the weight alone overshoots the window.
    std::vector<std::optional<std::int64_t>> delta (game.num_edges ());
    for (std::size_t e = 0; e < game.num_edges (); ++e) {
      const auto& w = game.edge (e).weight;
      if (BigInt (abs (w)) < width_big)
        delta[e] = *to_int64 (w);
    }

    a.owner_.resize (count);
    a.offsets_.reserve (count + 1);
    a.offsets_.push_back (0);
    auto emit = [&] (Vertex to, std::int64_t origin) {
      a.heads_.push_back (to);
      a.origin_.push_back (origin);
    };

    for (StateIndex s = 0; s < states; ++s) {
      const auto owner = game.owner (s);
      const auto out = game.out_edges (s);
      for (std::uint64_t off = 0; off < width; ++off) {
        a.owner_[s * width + off] = owner;
        bool any = false;
        for (auto e : out) {
          const auto& edge = game.edge (e);
          if (edge.kind == EdgeKind::ZeroOnly && off != zero_offset) continue;
          if (edge.kind == EdgeKind::NonZeroOnly && off == zero_offset) continue;
          any = true;
          const auto& d = delta[e];
          const auto next = d ? static_cast<std::int64_t> (off) + *d : -1;
          if (d && next >= 0 && static_cast<std::uint64_t> (next) < width)
            emit (static_cast<Vertex> (edge.to * width + static_cast<std::uint64_t> (next)),
                  static_cast<std::int64_t> (e));
          else
            emit (out_sink, static_cast<std::int64_t> (e));
        }
        if (!any)
          emit (owner == Player::Eve ? a.adam_sink_ : a.eve_sink_, no_game_edge);
        a.offsets_.push_back (a.heads_.size ());
      }
    }

    a.owner_[a.eve_sink_] = Player::Eve;
    emit (a.eve_sink_, no_game_edge);
    a.offsets_.push_back (a.heads_.size ());
    a.owner_[a.adam_sink_] = Player::Adam;
    emit (a.adam_sink_, no_game_edge);
    a.offsets_.push_back (a.heads_.size ());

    const auto initial = static_cast<Vertex> (game.initial () * width + zero_offset);
    a.initial_ = initial;
    a.grid_initial_ = initial;
    if (obj.type == Type::GlobalReach) {
      const Vertex entry = grid + 2;
      a.entry_ = entry;
      a.initial_ = entry;
      a.owner_[entry] = a.owner_[initial];
      for (auto e = a.offsets_[initial]; e < a.offsets_[initial + 1]; ++e)
        emit (a.heads_[e], a.origin_[e]);
      a.offsets_.push_back (a.heads_.size ());
    }

    switch (obj.type) {
      case Type::GlobalReach:
      case Type::Reach:
      case Type::Buchi: {
        a.targets_.assign (count, false);
        a.targets_[a.eve_sink_] = true;
        const auto t_off = static_cast<std::uint64_t> (
            *to_int64 (BigInt ((obj.type == Type::Buchi ? BigInt (0) : obj.target) - window.lo)));
        for (StateIndex s = 0; s < states; ++s)
          if (obj.type == Type::GlobalReach || obj.states[s])
            a.targets_[s * width + t_off] = true;
        break;
      }
      case Type::Parity:
        a.priorities_.resize (count);
        for (StateIndex s = 0; s < states; ++s)
          for (std::uint64_t off = 0; off < width; ++off)
            a.priorities_[s * width + off] = obj.priorities[s];
        a.priorities_[a.eve_sink_] = 0;
        a.priorities_[a.adam_sink_] = 1;
        if (a.entry_) a.priorities_[*a.entry_] = obj.priorities[game.initial ()];
        break;
    }

    a.build_predecessors ();
    return a;
  }

  ExpandedArena expand (const IndexedGame& game, const Objective& obj,
                        const CounterWindow& window, Boundary boundary) {
    return expand (game, resolve (game, obj), window, boundary);
  }

  void ExpandedArena::build_predecessors () {
    const auto n = num_vertices ();
    pred_offsets_.assign (n + 1, 0);
    for (auto h : heads_) ++pred_offsets_[h + 1];
    for (std::size_t v = 0; v < n; ++v) pred_offsets_[v + 1] += pred_offsets_[v];
    preds_.resize (heads_.size ());
    auto fill = pred_offsets_;
    for (Vertex v = 0; v < n; ++v)
      for (auto e = offsets_[v]; e < offsets_[v + 1]; ++e)
        preds_[fill[heads_[e]]++] = v;
  }

  std::optional<Position> ExpandedArena::position (Vertex v) const {
    if (entry_ && v == *entry_)
      v = grid_initial_;
    if (v >= num_states_ * width_) return std::nullopt;
    return Position {static_cast<StateIndex> (v / width_), window_.lo + BigInt (static_cast<unsigned long> (v % width_))};
  }

  std::optional<Vertex> ExpandedArena::vertex_at (StateIndex s, const BigInt& counter) const {
    if (s >= num_states_ || !window_.contains (counter)) return std::nullopt;
    const auto off = *to_int64 (BigInt (counter - window_.lo));
    return static_cast<Vertex> (s * width_ + static_cast<std::uint64_t> (off));
  }

  ExpandedArena ExpandedArena::with_choices (Player player, const std::vector<std::int64_t>& choice) const {
    ExpandedArena out = *this;
    out.offsets_.assign (1, 0);
    out.heads_.clear ();
    out.origin_.clear ();
    for (Vertex v = 0; v < num_vertices (); ++v) {
      const bool fixed = owner_[v] == player && !is_sink (v)
                         && !(offsets_[v + 1] - offsets_[v] == 1 && origin_[offsets_[v]] == no_game_edge);
      if (!fixed) {
        for (auto e = offsets_[v]; e < offsets_[v + 1]; ++e) {
          out.heads_.push_back (heads_[e]);
          out.origin_.push_back (origin_[e]);
        }
      }
      else {
        bool kept = false;
        for (auto e = offsets_[v]; e < offsets_[v + 1] && !kept; ++e)
          if (origin_[e] == choice[v]) {
            out.heads_.push_back (heads_[e]);
            out.origin_.push_back (origin_[e]);
            kept = true;
          }
        if (!kept) {
          out.heads_.push_back (player == Player::Eve ? adam_sink_ : eve_sink_);
          out.origin_.push_back (no_game_edge);
        }
      }
      out.offsets_.push_back (out.heads_.size ());
    }
    out.build_predecessors ();
    return out;
  }

  void write_dot (std::ostream& os, const IndexedGame& game, const ExpandedArena& a) {
    os << "digraph arena {\n";
    for (Vertex v = 0; v < a.num_vertices (); ++v) {
      std::string label;
      if (v == a.eve_sink ()) label = "EVE_SINK";
      else if (v == a.adam_sink ()) label = "ADAM_SINK";
      else {
        auto p = a.position (v);
        label = game.name (p->state) + "," + to_decimal (p->counter);
        if (a.entry () && v == *a.entry ()) label = "entry:" + label;
      }
      const bool target = !a.targets ().empty () && a.targets ()[v];
      os << "  v" << v << " [label=\"" << label << "\" shape="
         << (a.owner (v) == Player::Eve ? "box" : "circle")
         << (target ? " peripheries=2" : "") << "];\n";
    }
    for (Vertex v = 0; v < a.num_vertices (); ++v)
      for (auto e = a.edges_begin (v); e < a.edges_end (v); ++e)
        os << "  v" << v << " -> v" << a.head (e) << ";\n";
    os << "}\n";
  }

}

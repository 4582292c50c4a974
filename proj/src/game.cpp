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

#include "ocg/game.hpp"

#include <set>
#include <sstream>

namespace ocg {

  std::string_view to_string (Player p) {
    return p == Player::Eve ? "eve" : "adam";
  }

  std::string_view to_string (EdgeKind k) {
    switch (k) {
      case EdgeKind::Always: return "always";
      case EdgeKind::ZeroOnly: return "zero";
      case EdgeKind::NonZeroOnly: return "nonzero";
    }
    return "?";
  }

  namespace {
    std::string join (const std::vector<std::string>& names) {
      std::string out;
      for (const auto& n : names) {
        if (!out.empty ()) out += ",";
        out += n;
      }
      return out;
    }

    template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
  }

  std::string describe (const Objective& obj) {
    return std::visit (overloaded {
        [] (const GlobalReach& o) { return "global-reach(" + to_decimal (o.target) + ")"; },
        [] (const Reach& o) {
          return "reach(" + to_decimal (o.target) + ",{" + join (o.states) + "})";
        },
        [] (const Buchi& o) { return "buchi({" + join (o.states) + "})"; },
        [] (const Parity& o) { return "parity(" + std::to_string (o.priorities.size ()) + " priorities)"; },
      }, obj);
  }

  std::optional<BigInt> target_value (const Objective& obj) {
    if (auto* g = std::get_if<GlobalReach> (&obj)) return g->target;
    if (auto* r = std::get_if<Reach> (&obj)) return r->target;
    return std::nullopt;
  }

  ValidationReport validate (const OneCounterGame& game) {
    ValidationReport report;
    std::set<std::string> names;
    for (const auto& s : game.states) {
      if (s.name.empty ())
        report.push_back ("state with empty name");
      else if (!names.insert (s.name).second)
        report.push_back ("duplicate state \"" + s.name + "\"");
    }
    if (game.states.empty ())
      report.push_back ("game has no states");
    if (!names.contains (game.initial))
      report.push_back ("initial state \"" + game.initial + "\" is not a state");
    for (std::size_t i = 0; i < game.edges.size (); ++i) {
      const auto& e = game.edges[i];
      const auto where = "edge " + std::to_string (i) + " (" + e.from + " -> " + e.to + ")";
      if (!names.contains (e.from))
        report.push_back (where + ": unknown source state");
      if (!names.contains (e.to))
        report.push_back (where + ": unknown target state");
      if (e.kind != EdgeKind::Always && e.weight != 0)
        report.push_back (where + ": zero-test edge must have weight 0");
    }
    return report;
  }

  ValidationReport validate (const OneCounterGame& game, const Objective& obj) {
    ValidationReport report;
    std::set<std::string> names;
    for (const auto& s : game.states) names.insert (s.name);
    auto check_set = [&] (const std::vector<std::string>& set) {
      std::set<std::string> seen;
      for (const auto& n : set) {
        if (!names.contains (n))
          report.push_back ("objective names unknown state \"" + n + "\"");
        if (!seen.insert (n).second)
          report.push_back ("objective lists state \"" + n + "\" twice");
      }
    };
    std::visit (overloaded {
        [] (const GlobalReach&) {},
        [&] (const Reach& o) { check_set (o.states); },
        [&] (const Buchi& o) { check_set (o.states); },
        [&] (const Parity& o) {
          for (const auto& [n, _] : o.priorities)
            if (!names.contains (n))
              report.push_back ("priority given for unknown state \"" + n + "\"");
          for (const auto& n : names)
            if (!o.priorities.contains (n))
              report.push_back ("no priority for state \"" + n + "\"");
        },
      }, obj);
    return report;
  }

  namespace {
    std::string summarize (const ValidationReport& report) {
      std::ostringstream os;
      os << "invalid game";
      for (const auto& r : report) os << "; " << r;
      return os.str ();
    }
  }

  InvalidGame::InvalidGame (const ValidationReport& r) :
    std::invalid_argument (summarize (r)), report (r) { }

  IndexedGame::IndexedGame (OneCounterGame game) : game_ (std::move (game)) {
    if (auto report = validate (game_); !report.empty ())
      throw InvalidGame (report);

    for (StateIndex i = 0; i < game_.states.size (); ++i)
      by_name_.emplace (game_.states[i].name, i);
    initial_ = by_name_.at (game_.initial);

    edges_.reserve (game_.edges.size ());
    std::vector<std::size_t> degree (game_.states.size () + 1, 0);
    for (const auto& e : game_.edges) {
      edges_.push_back ({by_name_.at (e.from), by_name_.at (e.to), e.weight, e.kind});
      ++degree[edges_.back ().from];
    }
    offsets_.assign (game_.states.size () + 1, 0);
    for (std::size_t s = 0; s < game_.states.size (); ++s)
      offsets_[s + 1] = offsets_[s] + degree[s];
    out_.resize (edges_.size ());
    auto fill = offsets_;
    for (std::size_t e = 0; e < edges_.size (); ++e)
      out_[fill[edges_[e].from]++] = e;
  }

  std::optional<StateIndex> IndexedGame::find (std::string_view name) const {
    auto it = by_name_.find (std::string (name));
    if (it == by_name_.end ()) return std::nullopt;
    return it->second;
  }

  StateIndex IndexedGame::index_of (std::string_view name) const {
    if (auto s = find (name)) return *s;
    throw std::invalid_argument ("unknown state \"" + std::string (name) + "\"");
  }

  bool IndexedGame::has_zero_tests () const {
    for (const auto& e : edges_)
      if (e.kind != EdgeKind::Always) return true;
    return false;
  }

  ResolvedObjective resolve (const IndexedGame& game, const Objective& obj) {
    if (auto report = validate (game.source (), obj); !report.empty ())
      throw InvalidGame (report);
    ResolvedObjective out;
    auto mark = [&] (const std::vector<std::string>& names) {
      out.states.assign (game.num_states (), false);
      for (const auto& n : names) out.states[game.index_of (n)] = true;
    };
    std::visit (overloaded {
        [&] (const GlobalReach& o) {
          out.type = ResolvedObjective::Type::GlobalReach;
          out.target = o.target;
        },
        [&] (const Reach& o) {
          out.type = ResolvedObjective::Type::Reach;
          out.target = o.target;
          mark (o.states);
        },
        [&] (const Buchi& o) {
          out.type = ResolvedObjective::Type::Buchi;
          mark (o.states);
        },
        [&] (const Parity& o) {
          out.type = ResolvedObjective::Type::Parity;
          out.priorities.resize (game.num_states ());
          for (const auto& [n, p] : o.priorities) out.priorities[game.index_of (n)] = p;
        },
      }, obj);
    return out;
  }

  bool enabled (const ResolvedEdge& e, const BigInt& c) {
    switch (e.kind) {
      case EdgeKind::Always: return true;
      case EdgeKind::ZeroOnly: return c == 0;
      case EdgeKind::NonZeroOnly: return c != 0;
    }
    return false;
  }

  std::vector<Move> successors (const IndexedGame& game, const Position& p) {
    if (p.state >= game.num_states ())
      throw std::out_of_range ("position refers to unknown state index "
                               + std::to_string (p.state));
    std::vector<Move> out;
    for (auto e : game.out_edges (p.state)) {
      const auto& edge = game.edge (e);
      if (enabled (edge, p.counter))
        out.push_back ({e, {edge.to, p.counter + edge.weight}});
    }
    return out;
  }

}

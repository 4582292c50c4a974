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

#include "ocg/transforms.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace ocg {

  PreconditionError::PreconditionError (std::string p, const std::string& what) :
    std::invalid_argument (p + ": " + what), pass (std::move (p)) { }

  namespace {

    void require_valid (const Instance& in) {
      auto report = validate (in.game);
      if (report.empty ()) report = validate (in.game, in.objective);
      if (!report.empty ()) throw InvalidGame (report);
    }

    std::unordered_map<std::string, Player> owners (const OneCounterGame& g) {
      std::unordered_map<std::string, Player> out;
      for (const auto& s : g.states) out.emplace (s.name, s.owner);
      return out;
    }

    class NameSet {
      public:
        explicit NameSet (const OneCounterGame& g) {
          for (const auto& s : g.states) used_.insert (s.name);
        }

        std::string fresh (const std::string& base) {
          auto name = base;
          for (std::size_t k = 2; used_.contains (name); ++k) name = base + "_" + std::to_string (k);
          used_.insert (name);
          return name;
        }

        /// A prefix p such that p + "__" + s is unused for every suffix s.
        std::string fresh_prefix (const std::string& base, std::span<const char* const> suffixes) {
          auto clash = [&] (const std::string& p) {
            return std::any_of (suffixes.begin (), suffixes.end (),
                                [&] (const char* s) { return used_.contains (p + "__" + s); });
          };
          auto prefix = base;
          for (std::size_t k = 2; clash (prefix); ++k) prefix = base + "_" + std::to_string (k);
          for (auto s : suffixes) used_.insert (prefix + "__" + s);
          return prefix;
        }

      private:
        std::unordered_set<std::string> used_;
    };

    void require_eve_targets (const std::string& pass, const OneCounterGame& g,
                              const std::vector<std::string>& targets, PassReport& report) {
      const auto own = owners (g);
      for (const auto& f : targets)
        if (own.at (f) != Player::Eve)
          throw PreconditionError (pass, "target state \"" + f + "\" is not owned by Eve (run normalize first)");
      report.checks.push_back ("target states owned by Eve");
    }

    void require_no_zero_tests (const std::string& pass, const OneCounterGame& g, PassReport& report) {
      std::string offending;
      for (std::size_t i = 0; i < g.edges.size (); ++i) {
        const auto& e = g.edges[i];
        if (e.kind == EdgeKind::Always) continue;
        if (!offending.empty ()) offending += ", ";
        offending += "edge " + std::to_string (i) + " (" + e.from + " -> " + e.to + ", "
                     + std::string (to_string (e.kind)) + ")";
      }
      if (!offending.empty ())
        throw PreconditionError (pass, "zero-test edges present: " + offending);
      report.checks.push_back ("no zero-test edges");
    }

    const Reach& require_reach_zero (const std::string& pass, const Instance& in, PassReport& report) {
      const auto* r = std::get_if<Reach> (&in.objective);
      if (r == nullptr)
        throw PreconditionError (pass, "objective must be reach, got " + describe (in.objective));
      if (r->target != 0)
        throw PreconditionError (pass, "target value must be 0, got " + to_decimal (r->target)
                                       + " (shift the target before introducing zero tests)");
      report.checks.push_back ("objective is reach with target value 0");
      return *r;
    }

    PassReport start (std::string pass, const Instance& in) {
      require_valid (in);
      PassReport report;
      report.pass = std::move (pass);
      report.objective_before = describe (in.objective);
      return report;
    }

    PassResult finish (Instance out, PassReport report) {
      report.objective_after = describe (out.objective);
      return {std::move (out), std::move (report)};
    }

  }

  PassResult normalize_target_states (const Instance& in) {
    auto report = start ("normalize", in);
    std::vector<std::string> targets;
    if (auto* r = std::get_if<Reach> (&in.objective)) targets = r->states;
    else if (auto* b = std::get_if<Buchi> (&in.objective)) targets = b->states;
    else throw PreconditionError ("normalize", "objective carries no target set: " + describe (in.objective));
    report.checks.push_back ("objective carries a target set");

    Instance out = in;
    auto& g = out.game;
    const auto own = owners (in.game);
    NameSet names (in.game);
    std::vector<Edge> added;
    for (auto& f : targets) {
      if (own.at (f) == Player::Eve) continue;
      const auto original = f;
      const auto companion = names.fresh (original + "'");
      g.states.push_back ({companion, Player::Eve});
      ++report.states_added;
      for (auto& e : g.edges)
        if (e.to == original) {
          e.to = companion;
          ++report.edges_rewritten;
        }
      added.push_back ({companion, original, 0, EdgeKind::Always});
      if (g.initial == original) g.initial = companion;
      f = companion;
    }
    report.edges_added = added.size ();
    g.edges.insert (g.edges.end (), added.begin (), added.end ());

    if (auto* r = std::get_if<Reach> (&out.objective)) r->states = targets;
    else std::get<Buchi> (out.objective).states = targets;
    return finish (std::move (out), std::move (report));
  }

  PassResult eliminate_zero_tests (const Instance& in) {
    auto report = start ("dezero", in);
    const auto& reach = require_reach_zero ("dezero", in, report);
    require_eve_targets ("dezero", in.game, reach.states, report);

    Instance out;
    out.game.states = in.game.states;
    out.game.initial = in.game.initial;
    auto targets = reach.states;
    const auto own = owners (in.game);
    NameSet names (in.game);
    std::vector<Edge> gadgets;

    auto state = [&] (const std::string& name, Player p) {
      out.game.states.push_back ({name, p});
      ++report.states_added;
    };
    auto edge = [&] (const std::string& a, const std::string& b, long w = 0) {
      gadgets.push_back ({a, b, w, EdgeKind::Always});
    };

    for (const auto& e : in.game.edges) {
      if (e.kind == EdgeKind::Always) {
        out.game.edges.push_back (e);
        continue;
      }
      ++report.edges_removed;
      const auto base = e.from + "__" + e.to + "__" + std::string (to_string (e.kind));
      const bool eve_source = own.at (e.from) == Player::Eve;

      if (e.kind == EdgeKind::ZeroOnly) {
        // The opponent of v's owner sits at B and punishes a nonzero counter
        // by entering a sink from which 0 is unreachable.
        static constexpr std::array<const char*, 3> parts {"B", "X", "Y"};
        const auto p = names.fresh_prefix (base, parts);
        const auto b = p + "__B", x = p + "__X", y = p + "__Y";
        state (b, eve_source ? Player::Adam : Player::Eve);
        state (x, Player::Eve);
        state (y, Player::Eve);
        edge (e.from, b);
        edge (b, e.to);
        if (eve_source) {
          edge (b, x);
          edge (x, x, -1);
          edge (x, x);
          edge (b, y);
          edge (y, y, 1);
          edge (y, y);
        }
        else {
          edge (b, x, 1);
          edge (x, x, 1);
          edge (x, x);
          edge (b, y, -1);
          edge (y, y, -1);
          edge (y, y);
        }
        targets.push_back (x);
        targets.push_back (y);
      }
      else if (eve_source) {
        static constexpr std::array<const char*, 4> parts {"B", "X", "Y", "Z"};
        const auto p = names.fresh_prefix (base, parts);
        const auto b = p + "__B", x = p + "__X", y = p + "__Y", z = p + "__Z";
        state (b, Player::Adam);
        state (x, Player::Eve);
        state (y, Player::Eve);
        state (z, Player::Eve);
        edge (e.from, b);
        edge (b, e.to);
        edge (b, x);
        edge (x, y, 1);
        edge (y, y, 1);
        edge (y, y);
        edge (x, z, -1);
        edge (z, z, -1);
        edge (z, z);
        targets.push_back (y);
        targets.push_back (z);
      }
      else {
        static constexpr std::array<const char*, 2> parts {"B", "X"};
        const auto p = names.fresh_prefix (base, parts);
        const auto b = p + "__B", x = p + "__X";
        state (b, Player::Eve);
        state (x, Player::Eve);
        edge (e.from, b);
        edge (b, e.to);
        edge (b, x);
        edge (x, x);
        targets.push_back (x);
      }
    }
    report.edges_added = gadgets.size ();
    out.game.edges.insert (out.game.edges.end (), gadgets.begin (), gadgets.end ());
    out.objective = Reach {0, std::move (targets)};
    return finish (std::move (out), std::move (report));
  }

  PassResult buchi_to_reachability (const Instance& in) {
    auto report = start ("buchi2reach", in);
    const auto* buchi = std::get_if<Buchi> (&in.objective);
    if (buchi == nullptr)
      throw PreconditionError ("buchi2reach", "objective must be buchi, got " + describe (in.objective));
    report.checks.push_back ("objective is buchi");
    require_eve_targets ("buchi2reach", in.game, buchi->states, report);

    const auto& g = in.game;
    const std::size_t copies = buchi->states.size () + 1;
    NameSet names (OneCounterGame {});
    std::vector<std::map<std::string, std::string>> copy_name (copies + 1);
    for (std::size_t i = 1; i <= copies; ++i)
      for (const auto& s : g.states)
        copy_name[i][s.name] = names.fresh (s.name + "@" + std::to_string (i));

    Instance out;
    for (std::size_t i = 1; i <= copies; ++i) {
      for (const auto& s : g.states) out.game.states.push_back ({copy_name[i][s.name], s.owner});
      for (const auto& e : g.edges)
        out.game.edges.push_back ({copy_name[i][e.from], copy_name[i][e.to], e.weight, e.kind});
    }

    // Advancing from (v, i) lands on a shadow of v in copy i+1: same moves as
    // v, but neither a target nor a source of further advances, so each copy
    // change consumes a distinct visit.
    for (const auto& f : buchi->states)
      for (std::size_t i = 1; i < copies; ++i) {
        const auto shadow = names.fresh (copy_name[i + 1][f] + "^");
        out.game.states.push_back ({shadow, Player::Eve});
        out.game.edges.push_back ({copy_name[i][f], shadow, 0, EdgeKind::ZeroOnly});
        for (const auto& e : g.edges)
          if (e.from == f)
            out.game.edges.push_back ({shadow, copy_name[i + 1][e.to], e.weight, e.kind});
      }

    out.game.initial = copy_name[1][g.initial];
    Reach reach {0, {}};
    for (const auto& f : buchi->states) reach.states.push_back (copy_name[copies][f]);
    out.objective = std::move (reach);

    report.states_added = out.game.states.size () - g.states.size ();
    report.edges_added = out.game.edges.size () - g.edges.size ();
    return finish (std::move (out), std::move (report));
  }

  PassResult reachability_to_global (const Instance& in) {
    auto report = start ("reach2global", in);
    const auto& reach = require_reach_zero ("reach2global", in, report);
    require_eve_targets ("reach2global", in.game, reach.states, report);
    require_no_zero_tests ("reach2global", in.game, report);

    Instance out = in;
    auto& g = out.game;
    for (auto& e : g.edges) e.weight *= 2;
    report.edges_rewritten = g.edges.size ();

    NameSet names (in.game);
    const auto entry = names.fresh ("v0");
    const auto sink = names.fresh ("vf");
    g.states.push_back ({entry, Player::Eve});
    g.states.push_back ({sink, Player::Eve});
    g.edges.push_back ({entry, in.game.initial, 1, EdgeKind::Always});
    g.edges.push_back ({sink, sink, 0, EdgeKind::Always});
    for (const auto& f : reach.states) g.edges.push_back ({f, sink, -1, EdgeKind::Always});
    g.initial = entry;
    out.objective = GlobalReach {0};

    report.states_added = 2;
    report.edges_added = 2 + reach.states.size ();
    return finish (std::move (out), std::move (report));
  }

  PassResult shift_target_to_zero (const Instance& in) {
    auto report = start ("shift", in);
    const auto target = target_value (in.objective);
    if (!target)
      throw PreconditionError ("shift", "objective has no target value: " + describe (in.objective));
    report.checks.push_back ("objective has a target value");
    require_no_zero_tests ("shift", in.game, report);

    Instance out = in;
    // Global reachability ignores the initial position, so a weight-0 entry
    // edge would turn (q0, 0) into a target visit.
    if (std::holds_alternative<GlobalReach> (in.objective) && *target == 0) {
      report.checks.push_back ("target already 0: no-op");
      return finish (std::move (out), std::move (report));
    }

    NameSet names (in.game);
    const auto entry = names.fresh ("entry");
    out.game.states.push_back ({entry, Player::Eve});
    out.game.edges.push_back ({entry, in.game.initial, BigInt (-*target), EdgeKind::Always});
    out.game.initial = entry;
    if (auto* r = std::get_if<Reach> (&out.objective)) r->target = 0;
    else std::get<GlobalReach> (out.objective).target = 0;
    report.states_added = 1;
    report.edges_added = 1;
    return finish (std::move (out), std::move (report));
  }

  std::span<const std::string_view> pass_names () {
    static constexpr std::array<std::string_view, 5> names {
      "normalize", "dezero", "buchi2reach", "reach2global", "shift"};
    return names;
  }

  PassResult apply_pass (std::string_view name, const Instance& in) {
    if (name == "normalize") return normalize_target_states (in);
    if (name == "dezero") return eliminate_zero_tests (in);
    if (name == "buchi2reach") return buchi_to_reachability (in);
    if (name == "reach2global") return reachability_to_global (in);
    if (name == "shift") return shift_target_to_zero (in);
    throw std::invalid_argument ("unknown pass \"" + std::string (name) + "\"");
  }

  PipelineResult run_pipeline (const Instance& in, std::span<const std::string> passes) {
    PipelineResult out {in, {}};
    for (const auto& p : passes) {
      auto step = apply_pass (p, out.instance);
      out.instance = std::move (step.instance);
      out.reports.push_back (std::move (step.report));
    }
    return out;
  }

}

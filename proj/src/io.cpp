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

#include "ocg/io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace ocg {

  namespace {

    void require_object (const Json& j, const std::string& where) {
      if (!j.is_object ()) throw FormatError (where + ": expected an object");
    }

    void only_fields (const Json& j, std::initializer_list<std::string_view> allowed,
                      const std::string& where) {
      for (const auto& [key, _] : j.items ()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) throw FormatError (where + ": unknown field \"" + key + "\"");
      }
    }

    const Json& field (const Json& j, const std::string& key, const std::string& where) {
      auto it = j.find (key);
      if (it == j.end ()) throw FormatError (where + ": missing field \"" + key + "\"");
      return *it;
    }

    std::string string_field (const Json& j, const std::string& key, const std::string& where) {
      const auto& v = field (j, key, where);
      if (!v.is_string ()) throw FormatError (where + ": field \"" + key + "\" must be a string");
      return v.get<std::string> ();
    }

    BigInt big_field (const Json& j, const std::string& key, const std::string& where) {
      const auto text = string_field (j, key, where);
      try {
        return parse_bigint (text);
      }
      catch (const std::invalid_argument& e) {
        throw FormatError (where + ": field \"" + key + "\": " + e.what ());
      }
    }

    std::vector<std::string> name_list (const Json& j, const std::string& key, const std::string& where) {
      const auto& v = field (j, key, where);
      if (!v.is_array ()) throw FormatError (where + ": field \"" + key + "\" must be an array");
      std::vector<std::string> out;
      for (const auto& n : v) {
        if (!n.is_string ()) throw FormatError (where + ": field \"" + key + "\" must hold strings");
        out.push_back (n.get<std::string> ());
      }
      return out;
    }

    Objective objective_from_json (const Json& j) {
      const std::string where = "objective";
      require_object (j, where);
      const auto type = string_field (j, "type", where);
      if (type == "global-reach") {
        only_fields (j, {"type", "target_value"}, where);
        return GlobalReach {big_field (j, "target_value", where)};
      }
      if (type == "reach") {
        only_fields (j, {"type", "target_value", "target_states"}, where);
        return Reach {big_field (j, "target_value", where), name_list (j, "target_states", where)};
      }
      if (type == "buchi") {
        only_fields (j, {"type", "target_states"}, where);
        return Buchi {name_list (j, "target_states", where)};
      }
      if (type == "parity") {
        only_fields (j, {"type", "priorities"}, where);
        const auto& pr = field (j, "priorities", where);
        require_object (pr, "objective.priorities");
        Parity out;
        for (const auto& [name, value] : pr.items ()) {
          if (!value.is_number_unsigned ())
            throw FormatError ("objective.priorities: priority of \"" + name
                               + "\" must be a non-negative integer");
          out.priorities[name] = value.get<std::uint64_t> ();
        }
        return out;
      }
      throw FormatError (where + ": unknown type \"" + type + "\"");
    }

    Player owner_from (const std::string& s, const std::string& where) {
      if (s == "eve") return Player::Eve;
      if (s == "adam") return Player::Adam;
      throw FormatError (where + ": owner must be \"eve\" or \"adam\"");
    }

    EdgeKind kind_from (const std::string& s, const std::string& where) {
      if (s == "always") return EdgeKind::Always;
      if (s == "zero") return EdgeKind::ZeroOnly;
      if (s == "nonzero") return EdgeKind::NonZeroOnly;
      throw FormatError (where + ": kind must be \"always\", \"zero\" or \"nonzero\"");
    }

  }

  Instance instance_from_json (const Json& doc) {
    require_object (doc, "game");
    only_fields (doc, {"states", "initial", "edges", "objective"}, "game");
    Instance inst;

    const auto& states = field (doc, "states", "game");
    if (!states.is_array ()) throw FormatError ("game: \"states\" must be an array");
    for (std::size_t i = 0; i < states.size (); ++i) {
      const auto where = "states[" + std::to_string (i) + "]";
      require_object (states[i], where);
      only_fields (states[i], {"name", "owner"}, where);
      inst.game.states.push_back ({string_field (states[i], "name", where),
                                   owner_from (string_field (states[i], "owner", where), where)});
    }
    inst.game.initial = string_field (doc, "initial", "game");

    const auto& edges = field (doc, "edges", "game");
    if (!edges.is_array ()) throw FormatError ("game: \"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size (); ++i) {
      const auto where = "edges[" + std::to_string (i) + "]";
      require_object (edges[i], where);
      only_fields (edges[i], {"from", "to", "weight", "kind"}, where);
      inst.game.edges.push_back ({string_field (edges[i], "from", where),
                                  string_field (edges[i], "to", where),
                                  big_field (edges[i], "weight", where),
                                  kind_from (string_field (edges[i], "kind", where), where)});
    }
    inst.objective = objective_from_json (field (doc, "objective", "game"));
    return inst;
  }

  Json to_json (const Objective& obj) {
    Json j;
    if (auto* g = std::get_if<GlobalReach> (&obj)) {
      j["type"] = "global-reach";
      j["target_value"] = to_decimal (g->target);
    }
    else if (auto* r = std::get_if<Reach> (&obj)) {
      j["type"] = "reach";
      j["target_value"] = to_decimal (r->target);
      j["target_states"] = r->states;
    }
    else if (auto* b = std::get_if<Buchi> (&obj)) {
      j["type"] = "buchi";
      j["target_states"] = b->states;
    }
    else {
      j["type"] = "parity";
      j["priorities"] = Json::object ();
      for (const auto& [n, p] : std::get<Parity> (obj).priorities) j["priorities"][n] = p;
    }
    return j;
  }

  Json to_json (const Instance& inst) {
    Json doc;
    doc["states"] = Json::array ();
    for (const auto& s : inst.game.states)
      doc["states"].push_back ({{"name", s.name}, {"owner", std::string (to_string (s.owner))}});
    doc["initial"] = inst.game.initial;
    doc["edges"] = Json::array ();
    for (const auto& e : inst.game.edges)
      doc["edges"].push_back ({{"from", e.from},
                               {"to", e.to},
                               {"weight", to_decimal (e.weight)},
                               {"kind", std::string (to_string (e.kind))}});
    doc["objective"] = to_json (inst.objective);
    return doc;
  }

  Json parse_json (const std::string& text) {
    try {
      return Json::parse (text);
    }
    catch (const nlohmann::json::parse_error& e) {
      throw FormatError (std::string ("JSON syntax: ") + e.what ());
    }
  }

  Json read_json_file (const std::filesystem::path& path) {
    std::ifstream in (path);
    if (!in) throw FormatError ("cannot read " + path.string ());
    std::ostringstream text;
    text << in.rdbuf ();
    return parse_json (text.str ());
  }

  std::string dump (const Json& doc) {
    return doc.dump (2) + "\n";
  }

  void write_json_file (const std::filesystem::path& path, const Json& doc) {
    std::ofstream out (path);
    if (!out) throw std::runtime_error ("cannot write " + path.string ());
    out << dump (doc);
  }

  Instance read_instance (const std::filesystem::path& path) {
    return instance_from_json (read_json_file (path));
  }

  Json to_json (const CounterWindow& w) {
    return {{"lo", to_decimal (w.lo)}, {"hi", to_decimal (w.hi)}};
  }

  Json to_json (const IndexedGame& game, const Strategy& strategy) {
    Json out = Json::array ();
    for (const auto& e : strategy.entries ())
      out.push_back ({{"state", game.name (e.state)},
                      {"counter", to_decimal (e.counter)},
                      {"edge_index", e.edge}});
    return out;
  }

  Strategy strategy_from_json (const IndexedGame& game, const CounterWindow& window, const Json& entries) {
    if (!entries.is_array ()) throw FormatError ("strategy must be an array");
    Strategy s (window, game.num_states ());
    for (std::size_t i = 0; i < entries.size (); ++i) {
      const auto where = "strategy[" + std::to_string (i) + "]";
      const auto& e = entries[i];
      require_object (e, where);
      only_fields (e, {"state", "counter", "edge_index"}, where);
      const auto name = string_field (e, "state", where);
      const auto state = game.find (name);
      if (!state) throw FormatError (where + ": unknown state \"" + name + "\"");
      const auto& idx = field (e, "edge_index", where);
      if (!idx.is_number_unsigned () || idx.get<std::uint64_t> () >= game.num_edges ())
        throw FormatError (where + ": edge_index out of range");
      const auto edge = idx.get<std::size_t> ();
      if (game.edge (edge).from != *state)
        throw FormatError (where + ": edge " + std::to_string (edge) + " does not leave \"" + name + "\"");
      const auto counter = big_field (e, "counter", where);
      if (!window.contains (counter)) throw FormatError (where + ": counter outside the window");
      s.set (*state, counter, edge);
    }
    return s;
  }

  Json to_json (const IndexedGame& game, const Verdict& verdict) {
    Json doc;
    doc["verdict"] = std::string (to_string (verdict.outcome));
    doc["window"] = to_json (verdict.window);
    doc["strategy"] = verdict.outcome == Outcome::Unknown ? Json::array ()
                                                          : to_json (game, verdict.strategy);
    return doc;
  }

  Verdict verdict_from_json (const IndexedGame& game, const Json& doc) {
    require_object (doc, "verdict");
    only_fields (doc, {"verdict", "window", "strategy"}, "verdict");
    Verdict v;
    const auto outcome = string_field (doc, "verdict", "verdict");
    if (outcome == "eve") v.outcome = Outcome::EveWins;
    else if (outcome == "adam") v.outcome = Outcome::AdamWins;
    else if (outcome == "unknown") v.outcome = Outcome::Unknown;
    else throw FormatError ("verdict: must be \"eve\", \"adam\" or \"unknown\"");
    const auto& w = field (doc, "window", "verdict");
    require_object (w, "verdict.window");
    only_fields (w, {"lo", "hi"}, "verdict.window");
    v.window = {big_field (w, "lo", "verdict.window"), big_field (w, "hi", "verdict.window")};
    if (v.window.lo > v.window.hi) throw FormatError ("verdict.window: lo exceeds hi");
    v.strategy = strategy_from_json (game, v.window, field (doc, "strategy", "verdict"));
    return v;
  }

  Json to_json (const PassReport& r) {
    return {{"pass", r.pass},
            {"states_added", r.states_added},
            {"edges_added", r.edges_added},
            {"edges_removed", r.edges_removed},
            {"edges_rewritten", r.edges_rewritten},
            {"objective_before", r.objective_before},
            {"objective_after", r.objective_after},
            {"checks", r.checks}};
  }

  Json to_json (const GnManifest& m) {
    return {{"n", m.n},
            {"pump", m.pump},
            {"adam_chain", m.adam_chain},
            {"rounds", m.rounds},
            {"declarations", m.declarations},
            {"pass_end", m.pass_end},
            {"clearing", m.clearing},
            {"eve_chain", m.eve_chain},
            {"sinks", m.sinks},
            {"states", m.states},
            {"edges", m.edges}};
  }

  Json to_json (const GnAnalysis& a) {
    Json j {{"n", a.n},
            {"lcm_odd", to_decimal (a.lcm_odd)},
            {"prime_count", a.prime_count},
            {"prime_exponent", a.prime_exponent},
            {"prime_bound", to_decimal (a.prime_bound)},
            {"chebyshev_exponent", a.chebyshev_exponent},
            {"chebyshev_bound", to_decimal (a.chebyshev_bound)}};
    j["minimal_peak"] = a.minimal_peak ? Json (to_decimal (*a.minimal_peak)) : Json (nullptr);
    return j;
  }

  Json to_json (const PlayResult& play, const IndexedGame& game) {
    Json trace = Json::array ();
    for (const auto& p : play.trace)
      trace.push_back ({{"state", game.name (p.state)}, {"counter", to_decimal (p.counter)}});
    Json j {{"trace", trace},
            {"target_hit", play.target_hit},
            {"accepting_visits", play.accepting_visits}};
    j["stuck"] = play.stuck ? Json (std::string (to_string (*play.stuck))) : Json (nullptr);
    return j;
  }

  Json to_json (const IndexedGame& game, const ExpandedArena& a) {
    Json vertices = Json::array ();
    Json edges = Json::array ();
    for (Vertex v = 0; v < a.num_vertices (); ++v) {
      Json entry {{"id", v}, {"owner", std::string (to_string (a.owner (v)))}};
      if (v == a.eve_sink ()) entry["sink"] = "eve";
      else if (v == a.adam_sink ()) entry["sink"] = "adam";
      else {
        const auto p = a.position (v);
        entry["state"] = game.name (p->state);
        entry["counter"] = to_decimal (p->counter);
        if (a.entry () && v == *a.entry ()) entry["entry"] = true;
      }
      if (!a.targets ().empty ()) entry["target"] = static_cast<bool> (a.targets ()[v]);
      if (a.objective_type () == ResolvedObjective::Type::Parity) entry["priority"] = a.priority (v);
      vertices.push_back (std::move (entry));
      for (auto e = a.edges_begin (v); e < a.edges_end (v); ++e) {
        Json edge {{"from", v}, {"to", a.head (e)}};
        edge["edge_index"] = a.origin (e) == no_game_edge ? Json (nullptr) : Json (a.origin (e));
        edges.push_back (std::move (edge));
      }
    }
    return {{"window", to_json (a.window ())},
            {"boundary", std::string (to_string (a.boundary ()))},
            {"initial", a.initial ()},
            {"vertices", vertices},
            {"edges", edges}};
  }

  Json to_json (const EquivReport& r) {
    Json cases = Json::array ();
    for (const auto& c : r.cases)
      cases.push_back ({{"seed", c.seed},
                        {"native", std::string (to_string (c.native))},
                        {"before", std::string (to_string (c.before))},
                        {"after", std::string (to_string (c.after))}});
    const auto& b = r.config.budget;
    return {{"pass", r.config.pass},
            {"prefix", r.prefix},
            {"objective", r.objective},
            {"seed", r.config.seed},
            {"count", r.config.count},
            {"states", r.config.states},
            {"max_abs_weight", r.config.max_abs_weight},
            {"zero_test_density", r.config.zero_test_density},
            {"max_half_width", to_decimal (b.max_half_width)},
            {"native_decisive", r.native_decisive},
            {"decisive_both", r.decisive_both},
            {"agreements", r.agreements},
            {"unknown", r.unknown},
            {"disagreements", r.disagreements},
            {"cases", cases}};
  }

  Json to_json (const std::vector<GnRow>& table) {
    Json rows = Json::array ();
    for (const auto& row : table) {
      auto j = to_json (row.analysis);
      j["verdict"] = row.verdict ? Json (std::string (to_string (*row.verdict))) : Json (nullptr);
      rows.push_back (std::move (j));
    }
    return rows;
  }

}

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

// Thin JSON-text bindings; ocgames/__init__.py converts to and from dicts.

#include "ocg/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

namespace py = pybind11;
using namespace ocg;

namespace {

  Instance load (const std::string& game) { return instance_from_json (parse_json (game)); }

  BigInt big (const std::string& s, const char* what) {
    try {
      return parse_bigint (s);
    }
    catch (const std::invalid_argument&) {
      throw FormatError (std::string (what) + ": not an integer: " + s);
    }
  }

  std::string validate_game (const std::string& game) {
    const auto inst = load (game);
    auto violations = validate (inst.game);
    if (violations.empty ()) violations = validate (inst.game, inst.objective);
    return dump (Json (violations));
  }

  std::string solve_game (const std::string& game, std::optional<std::string> initial_half_width,
                          const std::string& max_half_width, unsigned growth, std::optional<long> time_limit_ms,
                          bool concurrent) {
    const auto inst = load (game);
    const IndexedGame g (inst.game);
    SolveBudget b;
    if (initial_half_width) b.initial_half_width = big (*initial_half_width, "initial_half_width");
    b.max_half_width = big (max_half_width, "max_half_width");
    b.growth_factor = growth;
    if (time_limit_ms) b.time_limit = std::chrono::milliseconds (*time_limit_ms);
    b.concurrent = concurrent;
    Verdict v;
    {
      py::gil_scoped_release release;
      v = solve (g, inst.objective, b);
    }
    return dump (to_json (g, v));
  }

  std::pair<bool, std::string> certify_verdict (const std::string& game, const std::string& verdict) {
    const auto inst = load (game);
    const IndexedGame g (inst.game);
    const auto v = verdict_from_json (g, parse_json (verdict));
    if (v.outcome == Outcome::Unknown) throw FormatError ("certify: the verdict is unknown");
    const auto cert = certify (g, inst.objective, v);
    return {cert.ok, cert.detail};
  }

  std::pair<std::string, std::string> transform (const std::string& game, const std::vector<std::string>& passes) {
    const auto r = run_pipeline (load (game), passes);
    Json reports = Json::array ();
    for (const auto& rep : r.reports) reports.push_back (to_json (rep));
    return {dump (to_json (r.instance)), dump (reports)};
  }

  std::string generate_random (std::uint64_t seed, std::size_t states, std::int64_t max_weight, double zero_density,
                               const std::string& objective, std::int64_t target) {
    RandomGameParams p;
    p.seed = seed;
    p.states = states;
    p.max_abs_weight = max_weight;
    p.zero_test_density = zero_density;
    const auto kind = parse_objective_kind (objective);
    if (!kind) throw FormatError ("unknown objective: " + objective);
    p.objective = *kind;
    p.target = target;
    return dump (to_json (gen_random (p)));
  }

  std::string analyze (unsigned n, bool peak, const std::string& peak_limit) {
    auto a = analyze_gn (n);
    if (peak) {
      py::gil_scoped_release release;
      a.minimal_peak = gn_minimal_peak (n, big (peak_limit, "peak_limit"));
    }
    return dump (to_json (a));
  }

  std::string check_equiv (const std::string& pass, std::size_t count, std::uint64_t seed, std::size_t states,
                           std::int64_t max_weight, double zero_density, const std::string& half_width,
                           unsigned jobs) {
    EquivConfig cfg;
    cfg.pass = pass;
    cfg.count = count;
    cfg.seed = seed;
    cfg.states = states;
    cfg.max_abs_weight = max_weight;
    cfg.zero_test_density = zero_density;
    cfg.budget = EquivConfig::fixed_budget (big (half_width, "half_width"));
    cfg.jobs = jobs;
    EquivReport r;
    {
      py::gil_scoped_release release;
      r = check_equivalence (cfg);
    }
    return dump (to_json (r));
  }

  std::string experiment_gn (unsigned from, unsigned to, unsigned peak_max_n, const std::string& peak_limit) {
    std::vector<GnRow> rows;
    {
      py::gil_scoped_release release;
      rows = gn_table (from, to, peak_max_n, big (peak_limit, "peak_limit"));
    }
    return dump (to_json (rows));
  }

}

PYBIND11_MODULE (_core, m) {
  m.doc () = "Two-player games on succinct one-counter graphs (JSON-text interface)";

  py::register_exception<PreconditionError> (m, "PreconditionError", PyExc_ValueError);
  py::register_exception<FormatError> (m, "FormatError", PyExc_ValueError);

  m.def ("validate", &validate_game, py::arg ("game"));
  m.def ("solve", &solve_game, py::arg ("game"), py::arg ("initial_half_width") = py::none (),
         py::arg ("max_half_width") = "4096", py::arg ("growth") = 2u, py::arg ("time_limit_ms") = py::none (),
         py::arg ("concurrent") = true);
  m.def ("certify", &certify_verdict, py::arg ("game"), py::arg ("verdict"));
  m.def ("transform", &transform, py::arg ("game"), py::arg ("passes"));
  m.def ("gen_gn", [] (unsigned n) { return dump (to_json (gen_gn (n).instance)); }, py::arg ("n"));
  m.def ("gn_manifest", [] (unsigned n) { return dump (to_json (gen_gn (n).manifest)); }, py::arg ("n"));
  m.def ("gen_random", &generate_random, py::arg ("seed") = default_seed, py::arg ("states") = 4,
         py::arg ("max_weight") = 4, py::arg ("zero_density") = 0.3, py::arg ("objective") = "reach",
         py::arg ("target") = 0);
  m.def ("analyze_gn", &analyze, py::arg ("n"), py::arg ("peak") = false, py::arg ("peak_limit") = "4096");
  m.def ("check_equiv", &check_equiv, py::arg ("pass_name") = "dezero", py::arg ("count") = 200,
         py::arg ("seed") = default_seed, py::arg ("states") = 4, py::arg ("max_weight") = 4,
         py::arg ("zero_density") = 0.3, py::arg ("half_width") = "64", py::arg ("jobs") = 0u);
  m.def ("experiment_gn", &experiment_gn, py::arg ("start") = 1u, py::arg ("stop") = 16u,
         py::arg ("peak_max_n") = 3u, py::arg ("peak_limit") = "4096");
  m.attr ("default_seed") = default_seed;
}

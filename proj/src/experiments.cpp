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

#include "ocg/experiments.hpp"

#include "ocg/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <future>
#include <stdexcept>
#include <thread>

namespace ocg {

  namespace {

    struct Protocol {
        ObjectiveKind objective;
        std::int64_t target;
        bool zero_tests;
        std::vector<std::string> prefix;
    };

    Protocol protocol_for (const std::string& pass) {
      if (pass == "normalize") return {ObjectiveKind::Reach, 0, true, {}};
      if (pass == "dezero") return {ObjectiveKind::Reach, 0, true, {"normalize"}};
      if (pass == "buchi2reach") return {ObjectiveKind::Buchi, 0, true, {"normalize"}};
      if (pass == "reach2global") return {ObjectiveKind::Reach, 0, true, {"normalize", "dezero"}};
      // The only pass with a non-trivial target value to move.
      if (pass == "shift") return {ObjectiveKind::Reach, 2, false, {}};
      throw std::invalid_argument ("unknown pass \"" + pass + "\"");
    }

    Outcome verdict_of (const Instance& inst, const SolveBudget& budget) {
      SolveBudget b = budget;
      b.concurrent = false;  // parallelism lives at the corpus level
      return solve (IndexedGame (inst.game), inst.objective, b).outcome;
    }

    bool decided (Outcome o) { return o != Outcome::Unknown; }

  }

  Instance corpus_instance (const EquivConfig& config, std::uint64_t seed) {
    const auto proto = protocol_for (config.pass);
    RandomGameParams p;
    p.seed = seed;
    p.states = config.states;
    p.max_abs_weight = config.max_abs_weight;
    p.zero_test_density = proto.zero_tests ? config.zero_test_density : 0.0;
    p.objective = proto.objective;
    p.target = proto.target;
    return gen_random (p);
  }

  EquivReport check_equivalence (const EquivConfig& config) {
    const auto proto = protocol_for (config.pass);
    EquivReport report;
    report.config = config;
    report.prefix = proto.prefix;
    switch (proto.objective) {
      case ObjectiveKind::Buchi: report.objective = "buchi"; break;
      default: report.objective = "reach(" + std::to_string (proto.target) + ")"; break;
    }
    report.cases.resize (config.count);

    auto run = [&] (std::size_t i) {
      EquivCase c;
      c.seed = config.seed + i;
      const auto native = corpus_instance (config, c.seed);
      const auto input = run_pipeline (native, proto.prefix).instance;
      const auto output = apply_pass (config.pass, input).instance;
      c.native = verdict_of (native, config.budget);
      c.before = proto.prefix.empty () ? c.native : verdict_of (input, config.budget);
      c.after = verdict_of (output, config.budget);
      report.cases[i] = c;
    };

    unsigned jobs = config.jobs ? config.jobs : std::max (1u, std::thread::hardware_concurrency ());
    jobs = static_cast<unsigned> (std::min<std::size_t> (jobs, std::max<std::size_t> (config.count, 1)));
    std::atomic<std::size_t> next {0};
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.push_back (std::async (std::launch::async, [&] {
        for (std::size_t i; (i = next++) < config.count;) run (i);
      }));
    for (auto& w : workers) w.get ();

    for (const auto& c : report.cases) {
      report.native_decisive += decided (c.native);
      if (!decided (c.before) || !decided (c.after)) {
        report.unknown.push_back (c.seed);
        continue;
      }
      ++report.decisive_both;
      if (c.before == c.after) ++report.agreements;
      else report.disagreements.push_back (c.seed);
    }
    return report;
  }

  std::vector<Position> reachable_after_first_move (const IndexedGame& game, const CounterWindow& window) {
    const BigInt width = window.hi - window.lo + 1;
    const auto w = width.get_ui ();
    std::vector<bool> seen (game.num_states () * w, false);
    std::deque<Position> queue;
    auto push_successors = [&] (const Position& p) {
      for (const auto& m : successors (game, p)) {
        if (!window.contains (m.to.counter)) continue;
        const BigInt offset = m.to.counter - window.lo;
        const auto slot = m.to.state * w + offset.get_ui ();
        if (seen[slot]) continue;
        seen[slot] = true;
        queue.push_back (m.to);
      }
    };
    push_successors ({game.initial (), 0});
    while (!queue.empty ()) {
      const auto p = queue.front ();
      queue.pop_front ();
      push_successors (p);
    }
    std::vector<Position> out;
    for (StateIndex s = 0; s < game.num_states (); ++s)
      for (std::uint64_t k = 0; k < w; ++k)
        if (seen[s * w + k]) out.push_back ({s, window.lo + BigInt (static_cast<unsigned long> (k))});
    return out;
  }

  std::vector<GnRow> gn_table (unsigned from, unsigned to, unsigned peak_max_n, const BigInt& peak_limit) {
    std::vector<GnRow> rows;
    for (unsigned n = from; n <= to; ++n) {
      GnRow row {analyze_gn (n), std::nullopt};
      if (n <= peak_max_n) {
        row.analysis.minimal_peak = gn_minimal_peak (n, peak_limit);
        row.verdict = row.analysis.minimal_peak ? Outcome::EveWins : Outcome::Unknown;
      }
      rows.push_back (std::move (row));
    }
    return rows;
  }

}

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

#include "ocg/generators.hpp"
#include "ocg/play.hpp"

#include <string>
#include <vector>

namespace ocg {

  /// Default corpus seed, shared by the CLI and the test suite.
  inline constexpr std::uint64_t default_seed = 20260101;

  struct EquivConfig {
      std::string pass = "dezero";
      std::size_t count = 200;
      std::uint64_t seed = default_seed;   ///< instance i uses seed + i
      std::size_t states = 4;
      std::int64_t max_abs_weight = 4;
      double zero_test_density = 0.3;
      SolveBudget budget = fixed_budget (64);
      unsigned jobs = 0;                   ///< 0: hardware concurrency

      static SolveBudget fixed_budget (const BigInt& half_width) {
        SolveBudget b;
        b.initial_half_width = half_width;
        b.max_half_width = half_width;
        return b;
      }
  };

  struct EquivCase {
      std::uint64_t seed = 0;
      Outcome before = Outcome::Unknown;  ///< verdict on the pass input
      Outcome after = Outcome::Unknown;   ///< verdict on the pass output
      Outcome native = Outcome::Unknown;  ///< verdict on the generated game
  };

  struct EquivReport {
      EquivConfig config;
      /// Passes run before the pass under test, and the corpus objective.
      std::vector<std::string> prefix;
      std::string objective;
      std::vector<EquivCase> cases;
      std::size_t native_decisive = 0;
      std::size_t decisive_both = 0;
      std::size_t agreements = 0;
      std::vector<std::uint64_t> unknown;        ///< seeds undecided on either side
      std::vector<std::uint64_t> disagreements;  ///< seeds with opposite verdicts
  };

  /// Generates config.count random games (objective and prefix passes chosen
  /// to satisfy the preconditions of config.pass), runs the pass and solves
  /// both sides under config.budget. Results are ordered by seed whatever the
  /// number of jobs. Throws std::invalid_argument for an unknown pass.
  EquivReport check_equivalence (const EquivConfig& config);

  /// Corpus instance `seed` as used by check_equivalence for `pass`, before
  /// the prefix passes.
  Instance corpus_instance (const EquivConfig& config, std::uint64_t seed);

  /// Every position reachable in one or more moves from (initial, 0) without
  /// leaving `window`, sorted by state then counter.
  std::vector<Position> reachable_after_first_move (const IndexedGame& game, const CounterWindow& window);

  struct GnRow {
      GnAnalysis analysis;
      std::optional<Outcome> verdict;  ///< solver verdict, when the peak was searched
  };

  /// One row per n in [from, to]; rows with n <= peak_max_n also get the
  /// minimal pessimistic half-width deciding gen_gn(n), searched up to
  /// peak_limit.
  std::vector<GnRow> gn_table (unsigned from, unsigned to, unsigned peak_max_n, const BigInt& peak_limit);

}

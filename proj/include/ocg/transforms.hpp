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

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ocg {

  /// Structural summary of one rewriting pass. The counts satisfy
  /// |V'| = |V| + states_added and |E'| = |E| + edges_added - edges_removed;
  /// edges_rewritten counts edges kept in place with a new endpoint or weight.
  struct PassReport {
      std::string pass;
      std::size_t states_added = 0;
      std::size_t edges_added = 0;
      std::size_t edges_removed = 0;
      std::size_t edges_rewritten = 0;
      std::string objective_before;
      std::string objective_after;
      std::vector<std::string> checks;

      bool operator== (const PassReport&) const = default;
  };

  struct PreconditionError : std::invalid_argument {
      PreconditionError (std::string pass, const std::string& what);
      std::string pass;
  };

  struct PassResult {
      Instance instance;
      PassReport report;
  };

  /// Moves every Adam-owned target state v behind a fresh Eve state v' that
  /// takes over v's incoming edges. Needs a Reach or Buchi objective.
  PassResult normalize_target_states (const Instance& in);

  /// Replaces every zero-test edge by the punishment gadget matching its kind
  /// and source owner, leaving only Always edges. Needs Reach(0, F), F owned
  /// by Eve.
  PassResult eliminate_zero_tests (const Instance& in);

  /// |F|+1 copies of the game; visiting (v, 0), v in F, in copy i lets Eve move
  /// to copy i+1. Needs Buchi(F), F owned by Eve. Produces Reach(0, F').
  PassResult buchi_to_reachability (const Instance& in);

  /// Doubles all weights, enters through a +1 edge and exits from F through
  /// -1 edges into a fresh sink. Needs Reach(0, F), F owned by Eve, no zero
  /// tests. Produces GlobalReach(0).
  PassResult reachability_to_global (const Instance& in);

  /// Prepends an entry edge of weight -t so the target value becomes 0.
  /// Needs Reach or GlobalReach and no zero tests.
  PassResult shift_target_to_zero (const Instance& in);

  /// Pass names accepted by apply_pass: normalize, dezero, buchi2reach,
  /// reach2global, shift.
  std::span<const std::string_view> pass_names ();

  PassResult apply_pass (std::string_view name, const Instance& in);

  struct PipelineResult {
      Instance instance;
      std::vector<PassReport> reports;
  };

  /// Applies passes left to right; a failing precondition surfaces as
  /// PreconditionError naming the pass.
  PipelineResult run_pipeline (const Instance& in, std::span<const std::string> passes);

}

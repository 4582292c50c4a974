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

#include "ocg/arena.hpp"

#include <cstdint>
#include <vector>

namespace ocg {

  inline constexpr std::int64_t no_choice = -1;

  struct AttractorResult {
      std::vector<bool> region;
      /// Arena edge chosen by `player` at its vertices in region \ target,
      /// no_choice elsewhere.
      std::vector<std::int64_t> strategy;
  };

  /// Vertices from which `player` forces a visit to `target`, by backward
  /// saturation with opponent out-degree counting. When `subgame` is given,
  /// only vertices inside it are considered and edges leaving it are
  /// ignored. Strategy ties go to the lowest arena edge that makes progress.
  AttractorResult attractor (const ExpandedArena& arena, const std::vector<bool>& target,
                             Player player, const std::vector<bool>* subgame = nullptr);

  struct ArenaSolution {
      std::vector<Player> winner;
      /// For every non-sink vertex, the arena edge its owner takes: winning
      /// where the owner wins, the lowest legal edge otherwise.
      std::vector<std::int64_t> choice;

      bool eve_wins (Vertex v) const { return winner[v] == Player::Eve; }
  };

  /// Reach types by attractor, Buchi by the repeated-attractor fixpoint,
  /// parity by Zielonka's recursion.
  ArenaSolution solve_arena (const ExpandedArena& arena);

}

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

#include "ocg/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace ocg {

  AttractorResult attractor (const ExpandedArena& a, const std::vector<bool>& target,
                             Player player, const std::vector<bool>* subgame) {
    const auto n = a.num_vertices ();
    auto inside = [&] (Vertex v) { return subgame == nullptr || (*subgame)[v]; };
    constexpr auto unranked = std::numeric_limits<std::uint32_t>::max ();

    AttractorResult res {std::vector<bool> (n, false), std::vector<std::int64_t> (n, no_choice)};
    std::vector<std::uint32_t> rank (n, unranked);
    std::vector<std::uint32_t> count (n, 0);
    std::deque<Vertex> queue;

    for (Vertex v = 0; v < n; ++v) {
      if (!inside (v)) continue;
      if (target[v]) {
        res.region[v] = true;
        rank[v] = 0;
        queue.push_back (v);
      }
      else if (a.owner (v) != player) {
        for (auto e = a.edges_begin (v); e < a.edges_end (v); ++e)
          if (inside (a.head (e))) ++count[v];
      }
    }

    while (!queue.empty ()) {
      const auto u = queue.front ();
      queue.pop_front ();
      for (auto p : a.predecessors (u)) {
        if (!inside (p) || res.region[p]) continue;
        if (a.owner (p) == player || --count[p] == 0) {
          res.region[p] = true;
          rank[p] = rank[u] + 1;
          queue.push_back (p);
        }
      }
    }

    for (Vertex v = 0; v < n; ++v) {
      if (!res.region[v] || rank[v] == 0 || a.owner (v) != player) continue;
      for (auto e = a.edges_begin (v); e < a.edges_end (v); ++e) {
        const auto h = a.head (e);
        if (inside (h) && res.region[h] && rank[h] < rank[v]) {
          res.strategy[v] = static_cast<std::int64_t> (e);
          break;
        }
      }
    }
    return res;
  }

  namespace {

    std::int64_t first_edge_into (const ExpandedArena& a, Vertex v, const std::vector<bool>& set) {
      for (auto e = a.edges_begin (v); e < a.edges_end (v); ++e)
        if (set[a.head (e)]) return static_cast<std::int64_t> (e);
      return no_choice;
    }

    void solve_reach (const ExpandedArena& a, ArenaSolution& sol) {
      const auto attr = attractor (a, a.targets (), Player::Eve);
      std::vector<bool> outside (a.num_vertices ());
      for (Vertex v = 0; v < a.num_vertices (); ++v) outside[v] = !attr.region[v];
      for (Vertex v = 0; v < a.num_vertices (); ++v) {
        sol.winner[v] = attr.region[v] ? Player::Eve : Player::Adam;
        if (a.owner (v) == Player::Eve && attr.region[v])
          // Targets are won already; stay inside the region when possible.
          sol.choice[v] = a.targets ()[v] ? first_edge_into (a, v, attr.region) : attr.strategy[v];
        else if (a.owner (v) == Player::Adam && !attr.region[v])
          sol.choice[v] = first_edge_into (a, v, outside);
      }
    }

    void solve_buchi (const ExpandedArena& a, ArenaSolution& sol) {
      const auto n = a.num_vertices ();
      std::vector<bool> alive (n, true);
      std::vector<bool> accepting (n);
      while (true) {
        for (Vertex v = 0; v < n; ++v) accepting[v] = alive[v] && a.targets ()[v];
        const auto reach = attractor (a, accepting, Player::Eve, &alive);

        std::vector<bool> trap (n, false);
        bool any = false;
        for (Vertex v = 0; v < n; ++v) {
          trap[v] = alive[v] && !reach.region[v];
          any = any || trap[v];
        }
        if (!any) {
          for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            sol.winner[v] = Player::Eve;
            if (a.owner (v) == Player::Eve)
              sol.choice[v] = accepting[v] ? first_edge_into (a, v, alive) : reach.strategy[v];
          }
          return;
        }

        // Adam keeps the play inside the trap, where no accepting vertex is
        // reachable, and attracts towards it from the rest of the subgame.
        for (Vertex v = 0; v < n; ++v)
          if (trap[v] && a.owner (v) == Player::Adam)
            sol.choice[v] = first_edge_into (a, v, trap);
        const auto lose = attractor (a, trap, Player::Adam, &alive);
        for (Vertex v = 0; v < n; ++v) {
          if (!lose.region[v]) continue;
          sol.winner[v] = Player::Adam;
          if (!trap[v] && a.owner (v) == Player::Adam) sol.choice[v] = lose.strategy[v];
          alive[v] = false;
        }
      }
    }

    void zielonka (const ExpandedArena& a, const std::vector<bool>& sub, ArenaSolution& sol) {
      const auto n = a.num_vertices ();
      bool empty = true;
      std::uint64_t top = 0;
      for (Vertex v = 0; v < n; ++v)
        if (sub[v]) {
          empty = false;
          top = std::max (top, a.priority (v));
        }
      if (empty) return;

      const auto alpha = top % 2 == 0 ? Player::Eve : Player::Adam;
      std::vector<bool> top_set (n, false);
      for (Vertex v = 0; v < n; ++v) top_set[v] = sub[v] && a.priority (v) == top;
      const auto attr = attractor (a, top_set, alpha, &sub);

      std::vector<bool> rest (n);
      for (Vertex v = 0; v < n; ++v) rest[v] = sub[v] && !attr.region[v];
      zielonka (a, rest, sol);

      std::vector<bool> opp_region (n, false);
      bool opp_wins_some = false;
      for (Vertex v = 0; v < n; ++v)
        if (rest[v] && sol.winner[v] != alpha) {
          opp_region[v] = true;
          opp_wins_some = true;
        }

      if (!opp_wins_some) {
        for (Vertex v = 0; v < n; ++v) {
          if (!attr.region[v]) continue;
          sol.winner[v] = alpha;
          if (a.owner (v) == alpha)
            sol.choice[v] = top_set[v] ? first_edge_into (a, v, sub) : attr.strategy[v];
        }
        return;
      }

      const auto beta = opponent (alpha);
      const auto back = attractor (a, opp_region, beta, &sub);
      std::vector<bool> remaining (n);
      for (Vertex v = 0; v < n; ++v) {
        remaining[v] = sub[v] && !back.region[v];
        if (back.region[v] && !opp_region[v]) {
          sol.winner[v] = beta;
          if (a.owner (v) == beta) sol.choice[v] = back.strategy[v];
        }
      }
      zielonka (a, remaining, sol);
    }

  }

  ArenaSolution solve_arena (const ExpandedArena& a) {
    using Type = ResolvedObjective::Type;
    const auto n = a.num_vertices ();
    ArenaSolution sol {std::vector<Player> (n, Player::Adam), std::vector<std::int64_t> (n, no_choice)};
    switch (a.objective_type ()) {
      case Type::GlobalReach:
      case Type::Reach:
        solve_reach (a, sol);
        break;
      case Type::Buchi:
        solve_buchi (a, sol);
        break;
      case Type::Parity:
        zielonka (a, std::vector<bool> (n, true), sol);
        break;
    }
    for (Vertex v = 0; v < n; ++v)
      if (sol.choice[v] == no_choice)
        sol.choice[v] = static_cast<std::int64_t> (a.edges_begin (v));
    return sol;
  }

}

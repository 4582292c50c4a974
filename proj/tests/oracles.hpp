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

// Reference implementations for the test suite. Deliberately naive and
// self-contained: they read the plain game description, use machine
// integers, and never touch the arena, the solver or the generators.

#pragma once

#include "ocg/game.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

  using ocg::EdgeKind;
  using ocg::Player;

  struct Game {
      struct Arc {
          int to;
          std::int64_t weight;
          EdgeKind kind;
      };
      std::vector<std::string> names;
      std::vector<Player> owner;
      std::vector<std::vector<Arc>> out;
      int initial = 0;

      explicit Game (const ocg::OneCounterGame& g) {
        std::map<std::string, int> id;
        for (const auto& s : g.states) {
          id[s.name] = static_cast<int> (names.size ());
          names.push_back (s.name);
          owner.push_back (s.owner);
        }
        out.resize (names.size ());
        for (const auto& e : g.edges) {
          if (!e.weight.fits_slong_p ()) throw std::range_error ("oracle: weight too large");
          out[id.at (e.from)].push_back ({id.at (e.to), e.weight.get_si (), e.kind});
        }
        initial = id.at (g.initial);
      }

      int index (const std::string& name) const {
        for (std::size_t i = 0; i < names.size (); ++i)
          if (names[i] == name) return static_cast<int> (i);
        throw std::out_of_range ("oracle: no state " + name);
      }

      static bool enabled (const Arc& a, std::int64_t c) {
        if (a.kind == EdgeKind::ZeroOnly) return c == 0;
        if (a.kind == EdgeKind::NonZeroOnly) return c != 0;
        return true;
      }

      /// Successor positions of (s, c) in edge order.
      std::vector<std::pair<int, std::int64_t>> moves (int s, std::int64_t c) const {
        std::vector<std::pair<int, std::int64_t>> r;
        for (const auto& a : out[s])
          if (enabled (a, c)) r.emplace_back (a.to, c + a.weight);
        return r;
      }
  };

  /// Win table over the window [lo, hi]; index s * width + (c - lo).
  struct WinTable {
      std::int64_t lo = 0, hi = 0;
      std::size_t states = 0;
      std::vector<char> eve;
      bool operator() (int s, std::int64_t c) const {
        return eve[static_cast<std::size_t> (s) * (hi - lo + 1) + (c - lo)];
      }
  };

  /// One-step controllable predecessor over the window, by plain iteration
  /// over all positions. Moves leaving the window count as `escape`. A dead
  /// end loses for its owner.
  inline std::vector<char> cpre (const Game& g, std::int64_t lo, std::int64_t hi,
                                 const std::vector<char>& set, bool escape) {
    const auto w = hi - lo + 1;
    std::vector<char> r (set.size (), 0);
    for (std::size_t s = 0; s < g.names.size (); ++s)
      for (auto c = lo; c <= hi; ++c) {
        const auto ms = g.moves (static_cast<int> (s), c);
        const bool eve = g.owner[s] == Player::Eve;
        bool any = false, all = true;
        for (auto [t, d] : ms) {
          const bool in = d < lo || d > hi ? escape : set[t * w + (d - lo)];
          any = any || in;
          all = all && in;
        }
        r[s * w + (c - lo)] = eve ? any : all;
      }
    return r;
  }

  /// Eve's winning positions for reaching `target` (a predicate on
  /// positions), by Kleene iteration of  Y = target | cpre(Y).
  template <class Target>
  WinTable reach (const Game& g, std::int64_t lo, std::int64_t hi, bool optimistic, Target target) {
    const auto w = hi - lo + 1;
    const auto n = g.names.size () * w;
    std::vector<char> tgt (n, 0);
    for (std::size_t s = 0; s < g.names.size (); ++s)
      for (auto c = lo; c <= hi; ++c) tgt[s * w + (c - lo)] = target (static_cast<int> (s), c);
    std::vector<char> y = tgt;
    for (;;) {
      auto step = cpre (g, lo, hi, y, optimistic);
      for (std::size_t i = 0; i < n; ++i) step[i] = step[i] || tgt[i];
      if (step == y) break;
      y = std::move (step);
    }
    return {lo, hi, g.names.size (), std::move (y)};
  }

  /// Eve's winning positions for visiting accepting positions infinitely
  /// often:  nu Z. mu Y. (acc & cpre(Z)) | cpre(Y).
  template <class Accepting>
  WinTable buchi (const Game& g, std::int64_t lo, std::int64_t hi, bool optimistic, Accepting accepting) {
    const auto w = hi - lo + 1;
    const auto n = g.names.size () * w;
    std::vector<char> acc (n, 0);
    for (std::size_t s = 0; s < g.names.size (); ++s)
      for (auto c = lo; c <= hi; ++c) acc[s * w + (c - lo)] = accepting (static_cast<int> (s), c);
    std::vector<char> z (n, 1);
    for (;;) {
      const auto pz = cpre (g, lo, hi, z, optimistic);
      std::vector<char> y (n, 0);
      for (;;) {
        auto py = cpre (g, lo, hi, y, optimistic);
        for (std::size_t i = 0; i < n; ++i) py[i] = (acc[i] && pz[i]) || py[i];
        if (py == y) break;
        y = std::move (py);
      }
      if (y == z) break;
      z = std::move (y);
    }
    return {lo, hi, g.names.size (), std::move (z)};
  }

  /// Whether Eve wins from the initial position, for each objective type;
  /// global reachability needs at least one move before the target counts.
  inline bool initial_wins (const Game& g, const ocg::Instance& inst, std::int64_t lo, std::int64_t hi,
                            bool optimistic) {
    if (auto* r = std::get_if<ocg::Reach> (&inst.objective)) {
      std::set<int> f;
      for (const auto& s : r->states) f.insert (g.index (s));
      const auto t = r->target.get_si ();
      return reach (g, lo, hi, optimistic, [&] (int s, std::int64_t c) { return c == t && f.count (s); }) (
          g.initial, 0);
    }
    if (auto* gr = std::get_if<ocg::GlobalReach> (&inst.objective)) {
      const auto t = gr->target.get_si ();
      const auto win = reach (g, lo, hi, optimistic, [&] (int, std::int64_t c) { return c == t; });
      const auto ms = g.moves (g.initial, 0);
      const bool eve = g.owner[g.initial] == Player::Eve;
      bool any = false, all = true;
      for (auto [s, d] : ms) {
        const bool in = d < lo || d > hi ? optimistic : win (s, d);
        any = any || in;
        all = all && in;
      }
      return eve ? any : all;
    }
    if (auto* b = std::get_if<ocg::Buchi> (&inst.objective)) {
      std::set<int> f;
      for (const auto& s : b->states) f.insert (g.index (s));
      return buchi (g, lo, hi, optimistic, [&] (int s, std::int64_t c) { return c == 0 && f.count (s); }) (
          g.initial, 0);
    }
    throw std::invalid_argument ("oracle: unsupported objective");
  }

  // --- number theory ------------------------------------------------------

  /// lcm of the odd integers in (0, 2^n) by gcd folding.
  inline ocg::BigInt lcm_odd (unsigned n) {
    ocg::BigInt acc = 1;
    const std::uint64_t bound = std::uint64_t {1} << n;
    for (std::uint64_t m = 1; m < bound; m += 2) {
      const ocg::BigInt v (static_cast<unsigned long> (m));
      acc = acc / gcd (acc, v) * v;
    }
    return acc;
  }

  /// pi(bound): primes strictly below `bound`, by trial division.
  inline std::uint64_t prime_count (std::uint64_t bound) {
    std::uint64_t count = 0;
    for (std::uint64_t p = 2; p < bound; ++p) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
      count += prime;
    }
    return count;
  }

  // --- G_n ------------------------------------------------------------------

  /// Whether Eve, alone in the clearing gadget entered at state `entry` with
  /// counter v >= 0, can reach counter 0 at state `sink`. Explicit search
  /// over positions; every gadget weight is <= 0, so negative counters are
  /// dead and the search is finite.
  inline bool gadget_reaches_zero (const Game& g, int entry, int sink, std::int64_t v) {
    std::set<std::pair<int, std::int64_t>> seen {{entry, v}};
    std::deque<std::pair<int, std::int64_t>> queue {{entry, v}};
    while (!queue.empty ()) {
      auto [s, c] = queue.front ();
      queue.pop_front ();
      if (s == sink && c == 0) return true;
      for (auto [t, d] : g.moves (s, c)) {
        if (d < 0 || !seen.insert ({t, d}).second) continue;
        queue.emplace_back (t, d);
      }
    }
    return false;
  }

}

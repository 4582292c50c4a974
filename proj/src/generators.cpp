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

#include "ocg/generators.hpp"

#include "ocg/arena.hpp"
#include "ocg/solver.hpp"

#include <algorithm>
#include <random>
#include <vector>
#include <stdexcept>

namespace ocg {

  GnGame gen_gn (unsigned n) {
    if (n < 1) throw std::invalid_argument ("gen_gn: n must be at least 1");

    GnGame out;
    auto& g = out.instance.game;
    auto& m = out.manifest;
    m.n = n;
    auto state = [&] (std::string name, Player p, std::size_t& bucket) {
      g.states.push_back ({std::move (name), p});
      ++bucket;
    };
    auto edge = [&] (const std::string& a, const std::string& b, BigInt w) {
      g.edges.push_back ({a, b, std::move (w), EdgeKind::Always});
    };
    auto idx = [] (const char* prefix, unsigned i) { return prefix + std::to_string (i); };
    const auto block = pow2 (n);

    // Pump: M * 2^n.
    state ("pump", Player::Eve, m.pump);
    edge ("pump", "pump", block);
    edge ("pump", "a0", 0);

    // Adam adds an odd m: bit 0 forced, bits 1..n-1 chosen.
    for (unsigned i = 0; i < n; ++i) state (idx ("a", i), Player::Adam, m.adam_chain);
    for (unsigned i = 0; i < n; ++i) {
      const auto next = i + 1 < n ? idx ("a", i + 1) : std::string ("r0");
      if (i == 0)
        edge ("a0", next, 1);
      else {
        edge (idx ("a", i), next, 0);
        edge (idx ("a", i), next, pow2 (i));
      }
    }

    // Subgame: round i, Adam declares bit b of m. Continuing removes b * 2^(i+n);
    // exiting removes (1 - b) * 2^i, which clears bit i exactly when b was a lie.
    for (unsigned i = 0; i < n; ++i) state (idx ("r", i), Player::Adam, m.rounds);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned b = 0; b < 2; ++b)
        state ("d" + std::to_string (i) + "_" + std::to_string (b), Player::Eve, m.declarations);
    state ("L", Player::Eve, m.pass_end);
    for (unsigned i = 0; i < n; ++i) {
      const auto round = idx ("r", i);
      const auto next = i + 1 < n ? idx ("r", i + 1) : std::string ("L");
      for (unsigned b = 0; b < 2; ++b) {
        const auto d = "d" + std::to_string (i) + "_" + std::to_string (b);
        edge (round, d, 0);
        edge (d, next, b == 1 ? BigInt (-pow2 (i + n)) : BigInt (0));
        edge (d, idx ("h", i), b == 0 ? BigInt (-pow2 (i)) : BigInt (0));
      }
    }
    edge ("L", "r0", 0);
    edge ("L", "e0", 0);

    // Clearing gadget C_i: drop multiples of 2^n, then every bit except i.
    for (unsigned i = 0; i < n; ++i) {
      const auto h = idx ("h", i);
      state (h, Player::Eve, m.clearing);
      std::vector<unsigned> bits;
      for (unsigned j = n; j-- > 0;)
        if (j != i) bits.push_back (j);
      auto node = [&] (unsigned j) { return "c" + std::to_string (i) + "_" + std::to_string (j); };
      for (auto j : bits) state (node (j), Player::Eve, m.clearing);
      edge (h, h, BigInt (-block));
      edge (h, bits.empty () ? std::string ("T") : node (bits.front ()), 0);
      for (std::size_t k = 0; k < bits.size (); ++k) {
        const auto next = k + 1 < bits.size () ? node (bits[k + 1]) : std::string ("T");
        edge (node (bits[k]), next, 0);
        edge (node (bits[k]), next, BigInt (-pow2 (bits[k])));
      }
    }

    // Final subtraction of m'.
    for (unsigned i = 0; i < n; ++i) state (idx ("e", i), Player::Eve, m.eve_chain);
    state ("T", Player::Eve, m.sinks);
    for (unsigned i = 0; i < n; ++i) {
      const auto next = i + 1 < n ? idx ("e", i + 1) : std::string ("T");
      edge (idx ("e", i), next, 0);
      edge (idx ("e", i), next, BigInt (-pow2 (i)));
    }
    edge ("T", "T", 0);

    g.initial = "pump";
    out.instance.objective = Reach {0, {"T"}};
    m.states = g.states.size ();
    m.edges = g.edges.size ();
    return out;
  }

  namespace {

    std::vector<bool> sieve (std::uint64_t bound) {
      std::vector<bool> prime (bound, true);
      for (std::uint64_t i = 0; i < std::min<std::uint64_t> (bound, 2); ++i) prime[i] = false;
      for (std::uint64_t p = 2; p * p < bound; ++p)
        if (prime[p])
          for (auto q = p * p; q < bound; q += p) prime[q] = false;
      return prime;
    }

    BigInt product (std::vector<BigInt> factors) {
      if (factors.empty ()) return 1;
      while (factors.size () > 1) {
        std::vector<BigInt> next;
        next.reserve (factors.size () / 2 + 1);
        for (std::size_t i = 0; i + 1 < factors.size (); i += 2) next.push_back (factors[i] * factors[i + 1]);
        if (factors.size () % 2 == 1) next.push_back (factors.back ());
        factors = std::move (next);
      }
      return factors.front ();
    }

  }

  std::uint64_t count_primes_below (std::uint64_t bound) {
    const auto prime = sieve (bound);
    return static_cast<std::uint64_t> (std::count (prime.begin (), prime.end (), true));
  }

  GnAnalysis analyze_gn (unsigned n) {
    if (n < 1 || n > max_analysis_bits)
      throw std::invalid_argument ("analyze_gn: n must lie in [1, "
                                   + std::to_string (max_analysis_bits) + "]");
    const std::uint64_t bound = std::uint64_t {1} << n;
    const auto prime = sieve (bound);

    GnAnalysis a;
    a.n = n;
    // lcm of the odd numbers below 2^n: each odd prime at its largest power below 2^n.
    std::vector<BigInt> powers;
    for (std::uint64_t p = 2; p < bound; ++p) {
      if (!prime[p]) continue;
      ++a.prime_count;
      if (p == 2) continue;
      std::uint64_t q = p;
      while (q <= (bound - 1) / p) q *= p;
      powers.emplace_back (static_cast<unsigned long> (q));
    }
    a.lcm_odd = product (std::move (powers));
    a.prime_exponent = a.prime_count > 0 ? a.prime_count - 1 : 0;
    a.prime_bound = pow2 (a.prime_exponent);
    a.chebyshev_exponent = bound / n - 1;
    a.chebyshev_bound = pow2 (a.chebyshev_exponent);
    return a;
  }

  std::optional<BigInt> gn_minimal_peak (unsigned n, const BigInt& limit) {
    const auto gn = gen_gn (n);
    const IndexedGame game (gn.instance.game);
    const auto obj = resolve (game, gn.instance.objective);
    auto eve_wins = [&] (const BigInt& h) {
      const auto arena = expand (game, obj, CounterWindow::symmetric (h), Boundary::Pessimistic);
      return solve_arena (arena).eve_wins (arena.initial ());
    };

    // Eve's pessimistic region only grows with the window, so the predicate
    // is monotone in h.
    BigInt lo = 0, hi = 1;
    while (!eve_wins (hi)) {
      if (hi >= limit) return std::nullopt;
      lo = hi;
      hi = std::min (BigInt (hi * 2), limit);
    }
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (eve_wins (mid)) hi = mid;
      else lo = mid;
    }
    if (eve_wins (lo)) return lo;
    return hi;
  }

  std::optional<ObjectiveKind> parse_objective_kind (std::string_view s) {
    if (s == "global-reach") return ObjectiveKind::GlobalReach;
    if (s == "reach") return ObjectiveKind::Reach;
    if (s == "buchi") return ObjectiveKind::Buchi;
    if (s == "parity") return ObjectiveKind::Parity;
    return std::nullopt;
  }

  Instance gen_random (const RandomGameParams& p) {
    if (p.states < 1) throw std::invalid_argument ("gen_random: need at least one state");
    if (p.max_abs_weight < 0) throw std::invalid_argument ("gen_random: max_abs_weight must be non-negative");
    if (!(p.zero_test_density >= 0.0 && p.zero_test_density <= 1.0))
      throw std::invalid_argument ("gen_random: zero_test_density must lie in [0, 1]");

    // Draws use the raw engine output only, so corpora are identical across
    // standard library implementations.
    std::mt19937_64 rng (p.seed);
    auto draw = [&] (std::uint64_t k) { return rng () % k; };
    auto unit = [&] { return static_cast<double> (rng () >> 11) * 0x1.0p-53; };
    auto name = [] (std::size_t i) { return "s" + std::to_string (i); };

    Instance out;
    auto& g = out.game;
    for (std::size_t s = 0; s < p.states; ++s)
      g.states.push_back ({name (s), draw (2) == 0 ? Player::Eve : Player::Adam});
    const auto span = static_cast<std::uint64_t> (2 * p.max_abs_weight + 1);
    for (std::size_t s = 0; s < p.states; ++s) {
      const auto degree = 1 + draw (3);
      for (std::uint64_t k = 0; k < degree; ++k) {
        Edge e {name (s), name (draw (p.states)), 0, EdgeKind::Always};
        if (unit () < p.zero_test_density)
          e.kind = draw (2) == 0 ? EdgeKind::ZeroOnly : EdgeKind::NonZeroOnly;
        else
          e.weight = static_cast<long> (static_cast<std::int64_t> (draw (span)) - p.max_abs_weight);
        g.edges.push_back (std::move (e));
      }
    }
    g.initial = name (0);

    auto pick_set = [&] {
      std::vector<std::string> set;
      for (std::size_t s = 0; s < p.states; ++s)
        if (unit () < 0.35) set.push_back (name (s));
      if (set.empty ()) set.push_back (name (draw (p.states)));
      return set;
    };
    switch (p.objective) {
      case ObjectiveKind::GlobalReach:
        out.objective = GlobalReach {p.target};
        break;
      case ObjectiveKind::Reach:
        out.objective = Reach {p.target, pick_set ()};
        break;
      case ObjectiveKind::Buchi:
        out.objective = Buchi {pick_set ()};
        break;
      case ObjectiveKind::Parity: {
        Parity par;
        for (std::size_t s = 0; s < p.states; ++s) par.priorities[name (s)] = draw (4);
        out.objective = std::move (par);
        break;
      }
    }
    return out;
  }

}

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

#include <cstdint>
#include <optional>
#include <string>

namespace ocg {

  /// Per-component sizes of a generated G_n game.
  struct GnManifest {
      unsigned n = 0;
      std::size_t pump = 0;          ///< Eve pump vertex
      std::size_t adam_chain = 0;    ///< a_0 .. a_{n-1}
      std::size_t rounds = 0;        ///< Adam round vertices r_i
      std::size_t declarations = 0;  ///< Eve vertices d_{i,b}
      std::size_t pass_end = 0;      ///< Eve vertex L
      std::size_t clearing = 0;      ///< all C_i: h_i plus n-1 chain nodes each
      std::size_t eve_chain = 0;     ///< e_0 .. e_{n-1}
      std::size_t sinks = 0;         ///< target sink T
      std::size_t states = 0;
      std::size_t edges = 0;

      bool operator== (const GnManifest&) const = default;
  };

  struct GnGame {
      Instance instance;
      GnManifest manifest;
  };

  /// The game where Eve pumps the counter to M * 2^n, Adam adds an odd
  /// m < 2^n bit by bit, Eve removes m * 2^n once per pass of an n-round
  /// subgame in which Adam re-declares the bits of m (a wrong declaration
  /// lets Eve exit into a clearing gadget and win), and Eve finally removes
  /// some m' < 2^n. Eve reaches counter 0 at the sink "T" iff m | M, M > 0
  /// and m' = m. Throws std::invalid_argument for n < 1.
  ///
  /// State names: "pump", "a<i>", "r<i>", "d<i>_<b>", "L", "h<i>",
  /// "c<i>_<j>", "e<i>", "T".
  GnGame gen_gn (unsigned n);

  struct GnAnalysis {
      unsigned n = 0;
      BigInt lcm_odd;                 ///< lcm of the odd integers in (0, 2^n)
      std::uint64_t prime_count = 0;  ///< pi(2^n): primes below 2^n
      std::uint64_t prime_exponent = 0;
      BigInt prime_bound;             ///< 2^prime_exponent, one factor 2 per odd prime
      std::uint64_t chebyshev_exponent = 0;
      BigInt chebyshev_bound;         ///< 2^(floor(2^n / n) - 1)
      std::optional<BigInt> minimal_peak;
  };

  inline constexpr unsigned max_analysis_bits = 24;

  /// Exact bounds for 1 <= n <= 24; throws std::invalid_argument otherwise.
  /// minimal_peak is left empty, see gn_minimal_peak.
  GnAnalysis analyze_gn (unsigned n);

  /// Number of primes strictly below `bound`.
  std::uint64_t count_primes_below (std::uint64_t bound);

  /// Smallest half-width h such that Eve wins gen_gn(n) on the pessimistic
  /// window [-h, h], searched up to `limit`.
  std::optional<BigInt> gn_minimal_peak (unsigned n, const BigInt& limit);

  enum class ObjectiveKind : std::uint8_t { GlobalReach, Reach, Buchi, Parity };

  std::optional<ObjectiveKind> parse_objective_kind (std::string_view s);

  struct RandomGameParams {
      std::uint64_t seed = 0;
      std::size_t states = 4;
      std::int64_t max_abs_weight = 4;
      double zero_test_density = 0.3;
      ObjectiveKind objective = ObjectiveKind::Reach;
      std::int64_t target = 0;
  };

  /// Deterministic in the parameters. Every state gets at least one outgoing
  /// edge; zero-test edges have weight 0. States are named s0, s1, ...
  Instance gen_random (const RandomGameParams& params);

}

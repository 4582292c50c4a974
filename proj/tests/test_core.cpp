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

#include <doctest.h>

#include <algorithm>

using namespace ocg;

namespace {

  OneCounterGame two_states () {
    return {{{"u", Player::Eve}, {"v", Player::Adam}},
            "u",
            {{"u", "v", 5, EdgeKind::Always},
             {"u", "v", 0, EdgeKind::ZeroOnly},
             {"u", "v", 0, EdgeKind::NonZeroOnly},
             {"v", "u", -1, EdgeKind::Always}}};
  }

  bool mentions (const ValidationReport& r, std::string_view needle) {
    return std::any_of (r.begin (), r.end (), [&] (const std::string& s) {
      return s.find (needle) != std::string::npos;
    });
  }

}

TEST_CASE ("bigint parsing is strict decimal") {
  CHECK (parse_bigint ("0") == 0);
  CHECK (parse_bigint ("-17") == -17);
  CHECK (to_decimal (parse_bigint ("123456789012345678901234567890")) == "123456789012345678901234567890");
  for (auto bad : {"", "-", "+3", "0x10", " 1", "1 ", "1e3", "--1"})
    CHECK_THROWS_AS (parse_bigint (bad), std::invalid_argument);
  CHECK (pow2 (70) == parse_bigint ("1180591620717411303424"));
  CHECK (to_int64 (pow2 (62)).value () == (std::int64_t {1} << 62));
  CHECK_FALSE (to_int64 (pow2 (64)).has_value ());
}

TEST_CASE ("validate reports malformed games") {
  CHECK (validate (two_states ()).empty ());

  auto g = two_states ();
  g.edges.push_back ({"u", "v", 2, EdgeKind::ZeroOnly});
  CHECK (mentions (validate (g), "zero-test edge must have weight 0"));

  g = two_states ();
  g.initial = "w";
  CHECK (mentions (validate (g), "initial"));

  g = two_states ();
  g.edges.push_back ({"u", "nowhere", 0, EdgeKind::Always});
  CHECK_FALSE (validate (g).empty ());

  g = two_states ();
  g.states.push_back ({"u", Player::Adam});
  CHECK_FALSE (validate (g).empty ());

  g = two_states ();
  g.states.push_back ({"", Player::Adam});
  CHECK_FALSE (validate (g).empty ());

  CHECK_THROWS_AS (IndexedGame (OneCounterGame {{}, "x", {}}), InvalidGame);
}

TEST_CASE ("validate checks objectives against the game") {
  const auto g = two_states ();
  CHECK (validate (g, Reach {0, {"u"}}).empty ());
  CHECK_FALSE (validate (g, Reach {0, {"w"}}).empty ());
  CHECK_FALSE (validate (g, Buchi {{"w"}}).empty ());
  CHECK_FALSE (validate (g, Parity {{{"u", 0}}}).empty ());  // not total
  CHECK (validate (g, Parity {{{"u", 0}, {"v", 3}}}).empty ());
}

TEST_CASE ("successors follow the arena rules") {
  const IndexedGame game (two_states ());
  const auto u = game.index_of ("u"), v = game.index_of ("v");

  auto at = [&] (StateIndex s, long c) { return successors (game, {s, c}); };

  // Always edge: counter shifts by the weight.
  auto m = at (u, 3);
  REQUIRE (m.size () == 2);
  CHECK (m[0].edge == 0);
  CHECK (m[0].to == Position {v, 8});
  // At 3 the nonzero edge is enabled, the zero edge is not.
  CHECK (m[1].edge == 2);
  CHECK (m[1].to == Position {v, 3});

  m = at (u, 0);
  REQUIRE (m.size () == 2);
  CHECK (m[1].edge == 1);
  CHECK (m[1].to == Position {v, 0});

  m = at (u, -2);
  CHECK (std::any_of (m.begin (), m.end (), [&] (const Move& x) { return x.to == Position {v, -2}; }));

  CHECK_THROWS_AS (at (7, 0), std::out_of_range);
}

TEST_CASE ("successors shift exactly by the taken weight, big counters included") {
  const IndexedGame game (two_states ());
  const BigInt huge = pow2 (200) - 3;
  for (const BigInt& c : {BigInt (0), BigInt (1), BigInt (-1), huge, BigInt (-huge)})
    for (StateIndex s = 0; s < game.num_states (); ++s)
      for (const auto& m : successors (game, {s, c})) {
        const auto& e = game.edge (m.edge);
        CHECK (e.from == s);
        CHECK (m.to.counter == c + e.weight);
        CHECK (enabled (e, c));
      }
}

TEST_CASE ("kind filtering equals deleting the disabled kind") {
  auto base = two_states ();
  auto without = [&] (EdgeKind k) {
    auto g = base;
    std::erase_if (g.edges, [&] (const Edge& e) { return e.kind == k; });
    return IndexedGame (g);
  };
  const IndexedGame full (base);
  const auto no_zero = without (EdgeKind::ZeroOnly), no_nonzero = without (EdgeKind::NonZeroOnly);
  auto targets = [] (const std::vector<Move>& ms) {
    std::vector<Position> out;
    for (const auto& m : ms) out.push_back (m.to);
    return out;
  };
  for (StateIndex s = 0; s < 2; ++s) {
    for (long c : {-3L, -1L, 1L, 4L})
      CHECK (targets (successors (full, {s, c})) == targets (successors (no_zero, {s, c})));
    CHECK (targets (successors (full, {s, 0})) == targets (successors (no_nonzero, {s, 0})));
  }
}

TEST_CASE ("instance JSON round-trips") {
  const Instance inst {two_states (), Reach {parse_bigint ("-98765432109876543210"), {"v"}}};
  const auto doc = to_json (inst);
  CHECK (doc["edges"][0]["weight"] == "5");
  CHECK (doc["edges"][1]["kind"] == "zero");
  CHECK (instance_from_json (doc) == inst);
  CHECK (instance_from_json (parse_json (dump (doc))) == inst);

  for (const Objective& obj : {Objective {GlobalReach {7}}, Objective {Buchi {{"u"}}},
                               Objective {Parity {{{"u", 2}, {"v", 5}}}}}) {
    const Instance i2 {two_states (), obj};
    CHECK (instance_from_json (to_json (i2)) == i2);
  }
}

TEST_CASE ("instance JSON rejects unknown fields and bad values") {
  auto doc = to_json (Instance {two_states (), Reach {0, {"u"}}});
  auto expect_reject = [] (Json d) { CHECK_THROWS_AS (instance_from_json (d), FormatError); };

  auto d = doc;
  d["extra"] = 1;
  expect_reject (d);
  d = doc;
  d["states"][0]["color"] = "red";
  expect_reject (d);
  d = doc;
  d["edges"][0]["weight"] = 5;  // numbers must be decimal strings
  expect_reject (d);
  d = doc;
  d["edges"][0]["weight"] = "5.0";
  expect_reject (d);
  d = doc;
  d["edges"][0]["kind"] = "sometimes";
  expect_reject (d);
  d = doc;
  d["objective"]["priorities"] = Json::object ();
  expect_reject (d);
  d = doc;
  d["objective"]["type"] = "safety";
  expect_reject (d);
  d = doc;
  d["states"][1]["owner"] = "nobody";
  expect_reject (d);
  d = doc;
  d.erase ("initial");
  expect_reject (d);
  CHECK_THROWS_AS (parse_json ("{\"states\": ["), FormatError);
}

TEST_CASE ("describe and target_value") {
  CHECK (target_value (Reach {3, {}}) == 3);
  CHECK (target_value (GlobalReach {-2}) == -2);
  CHECK_FALSE (target_value (Buchi {}).has_value ());
  CHECK_FALSE (describe (Reach {0, {"a"}}).empty ());
}

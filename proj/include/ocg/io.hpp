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
#include "ocg/experiments.hpp"
#include "ocg/generators.hpp"
#include "ocg/play.hpp"
#include "ocg/transforms.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace ocg {

  using Json = nlohmann::ordered_json;

  /// Malformed JSON document: syntax, schema, or unknown field.
  struct FormatError : std::runtime_error {
      using std::runtime_error::runtime_error;
  };

  // Game interchange format. Big integers travel as decimal strings.
  Instance instance_from_json (const Json& doc);
  Json to_json (const Instance& inst);
  Json to_json (const Objective& obj);

  Json parse_json (const std::string& text);
  Json read_json_file (const std::filesystem::path& path);
  void write_json_file (const std::filesystem::path& path, const Json& doc);
  /// Canonical text: two-space indent and a trailing newline.
  std::string dump (const Json& doc);

  Instance read_instance (const std::filesystem::path& path);

  Json to_json (const IndexedGame& game, const Strategy& strategy);
  Strategy strategy_from_json (const IndexedGame& game, const CounterWindow& window, const Json& entries);

  /// {"verdict", "window": {"lo", "hi"}, "strategy": [{"state", "counter", "edge_index"}]}
  Json to_json (const IndexedGame& game, const Verdict& verdict);
  /// Verdict plus window; the opponent strategy is not part of the format.
  Verdict verdict_from_json (const IndexedGame& game, const Json& doc);

  Json to_json (const CounterWindow& w);
  Json to_json (const PassReport& report);
  Json to_json (const GnManifest& manifest);
  Json to_json (const GnAnalysis& analysis);
  Json to_json (const PlayResult& play, const IndexedGame& game);

  Json to_json (const EquivReport& report);
  Json to_json (const std::vector<GnRow>& table);

  /// Debug dump of an expanded arena in edge-list style.
  Json to_json (const IndexedGame& game, const ExpandedArena& arena);

}

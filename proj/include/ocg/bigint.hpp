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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ocg {

  /// Arbitrary-precision signed integer used for weights and counter values.
  using BigInt = mpz_class;

  /// Parses an optionally negative decimal integer. Throws std::invalid_argument
  /// on anything else (no leading '+', no whitespace, no empty string).
  BigInt parse_bigint (std::string_view text);

  std::string to_decimal (const BigInt& value);

  std::optional<std::int64_t> to_int64 (const BigInt& value);

  BigInt pow2 (unsigned long exponent);

}

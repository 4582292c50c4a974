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

#include "ocg/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace ocg {

  BigInt parse_bigint (std::string_view text) {
    auto digits = text;
    if (!digits.empty () && digits.front () == '-')
      digits.remove_prefix (1);
    if (digits.empty ()
        || !std::all_of (digits.begin (), digits.end (),
                         [] (char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument ("not a decimal integer: \"" + std::string (text) + "\"");
    return BigInt (std::string (text), 10);
  }

  std::string to_decimal (const BigInt& value) {
    return value.get_str (10);
  }

  std::optional<std::int64_t> to_int64 (const BigInt& value) {
    static_assert (sizeof (long) == sizeof (std::int64_t), "LP64 platform required");
    if (!value.fits_slong_p ())
      return std::nullopt;
    return static_cast<std::int64_t> (value.get_si ());
  }

  BigInt pow2 (unsigned long exponent) {
    BigInt result;
    mpz_ui_pow_ui (result.get_mpz_t (), 2, exponent);
    return result;
  }

}

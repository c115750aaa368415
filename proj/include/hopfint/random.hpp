/* Copyright 2026 The hopfint Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#ifndef HOPFINT_RANDOM_HPP
#define HOPFINT_RANDOM_HPP

#include <cstdint>
#include <random>

#include "hopfint/rational.hpp"

namespace hopfint {

using Rng = std::mt19937_64;

// Bounded draws done by hand: std::uniform_int_distribution is not specified
// bit-for-bit across standard libraries, and reports must be reproducible.
inline int uniform_int(Rng& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

// Nonzero rational p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_rational(Rng& rng, int max_num = 5, int max_den = 3) {
  int p = uniform_int(rng, 1, max_num);
  if (uniform_int(rng, 0, 1) == 1) p = -p;
  return Rational(p, uniform_int(rng, 1, max_den));
}

}  // namespace hopfint

#endif  // HOPFINT_RANDOM_HPP

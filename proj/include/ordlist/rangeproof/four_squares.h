// Copyright 2026 The ordlist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <array>

#include "ordlist/common/rng.h"

namespace ordlist::rangeproof {

// x = w[0]^2 + w[1]^2 + w[2]^2 + w[3]^2, all w[i] >= 0.
struct FourSquares {
  std::array<mpz_class, 4> w;
  mpz_class sum() const;
};

// Depth-first search over a >= b >= c >= d. Meant for small x.
FourSquares four_squares_exhaustive(const mpz_class& x);

// Randomized: pick a, b so that x - a^2 - b^2 is a prime p = 1 mod 4, then
// split p into two squares via a square root of -1 and a truncated Euclid
// run. Works on x / 4^v and scales back at the end.
FourSquares four_squares_rabin_shallit(const mpz_class& x, Rng& rng);

// Exhaustive below 10^6, randomized above. Throws kNegativeInput for x < 0.
FourSquares four_square_decompose(const mpz_class& x, Rng& rng);

}  // namespace ordlist::rangeproof

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

#include <cstddef>

#include "ordlist/common/bytes.h"
#include "ordlist/common/rng.h"

namespace ordlist {

// Uniform in [0, 2^bits).
mpz_class random_bits(Rng& rng, size_t bits);
// Uniform in [0, bound); bound > 0.
mpz_class random_below(Rng& rng, const mpz_class& bound);

mpz_class pow2(size_t exponent);
// floor(sqrt(x)) for x >= 0.
mpz_class isqrt(const mpz_class& x);
// ceil(sqrt(x)) for x >= 0.
mpz_class ceil_sqrt(const mpz_class& x);
size_t bit_length(const mpz_class& x);

// Magnitude only, big-endian, minimal length (zero encodes as empty).
Bytes to_bytes(const mpz_class& x);
// Left-padded to width bytes; throws if |x| does not fit.
Bytes to_fixed_bytes(const mpz_class& x, size_t width);
mpz_class from_bytes(ByteSpan be);

// Length-prefixed big-endian encodings. The signed form adds a sign byte
// (0 = non-negative, 1 = negative).
void write_unsigned(ByteWriter& w, const mpz_class& x);
mpz_class read_unsigned(ByteReader& r, size_t max_bytes);
void write_signed(ByteWriter& w, const mpz_class& x);
mpz_class read_signed(ByteReader& r, size_t max_bytes);

}  // namespace ordlist

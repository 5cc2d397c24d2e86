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
#include <utility>

#include "ordlist/common/bytes.h"
#include "ordlist/common/rng.h"

// Homomorphic integer commitments in the subgroup of quadratic residues
// modulo an RSA modulus built from safe primes. A commitment to x is
// g^x h^r mod N; openings carry a unit b with b^2 = 1 that honest committers
// set to 1.
namespace ordlist::intcom {

struct SetupOptions {
  size_t modulus_bits = 2048;
  // Statistical hiding parameter, independent of the modulus size.
  size_t statistical_bits = 128;
  size_t message_bound_bits = 64;    // M = 2^64
  size_t challenge_bits = 128;       // F = 2^128, used by the range proof
};

struct Params {
  mpz_class modulus;  // N
  mpz_class g;
  mpz_class h;
  size_t order_bits = 0;        // B, with 2^B > |QR_N|
  size_t statistical_bits = 0;  // k
  mpz_class message_bound;      // M
  mpz_class challenge_bound;    // F

  bool operator==(const Params&) const = default;
};

struct Trapdoor {
  mpz_class group_order;  // p'q'
  mpz_class dlog;         // s with g = h^s
};

struct Commitment {
  mpz_class value;
  bool operator==(const Commitment&) const = default;
};

struct Opening {
  mpz_class x;
  mpz_class r;
  mpz_class b = 1;
  bool operator==(const Opening&) const = default;
};

std::pair<Params, Trapdoor> setup(const SetupOptions& options, Rng& rng);

// Random safe prime p = 2q + 1 of exactly `bits` bits.
mpz_class random_safe_prime(size_t bits, Rng& rng);

// base^exponent mod N for any signed exponent. Throws kDegenerateElement
// when a negative power of a non-unit is requested.
mpz_class power(const Params& params, const mpz_class& base,
                const mpz_class& exponent);

// Throws kMessageTooLarge when |x| > M.
std::pair<Commitment, Opening> commit(const Params& params, const mpz_class& x,
                                      Rng& rng);
// Deterministic variant with caller-chosen randomness (no bound on x).
Commitment commit_with(const Params& params, const mpz_class& x,
                       const mpz_class& r);

bool verify_open(const Params& params, const Commitment& c,
                 const Opening& opening);

Commitment combine(const Params& params, const Commitment& a,
                   const Commitment& b);
// Throws kDegenerateElement when b is not invertible mod N.
Commitment divide(const Params& params, const Commitment& a,
                  const Commitment& b);

Opening combine(const Params& params, const Opening& a, const Opening& b);
Opening divide(const Params& params, const Opening& a, const Opening& b);

// Reopens c (known opening for x) to target, using the trapdoor. The unit b
// of the input opening is carried over unchanged.
Opening equivocate(const Params& params, const Trapdoor& trapdoor,
                   const Opening& opening, const mpz_class& target);

void write(ByteWriter& w, const Params& params);
Params read_params(ByteReader& r);
void write(ByteWriter& w, const Commitment& c);
Commitment read_commitment(ByteReader& r, const Params& params);
void write(ByteWriter& w, const Opening& o);
Opening read_opening(ByteReader& r);

}  // namespace ordlist::intcom

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

#include "ordlist/common/bytes.h"
#include "ordlist/common/rng.h"
#include "ordlist/intcom/intcom.h"
#include "ordlist/rangeproof/four_squares.h"

// Non-interactive proof that a committed integer is non-negative, using a
// four-squares representation and a Fiat-Shamir challenge in [0, F).
namespace ordlist::rangeproof {

struct NnProof {
  std::array<intcom::Commitment, 4> c1;  // commitments to the four roots
  std::array<intcom::Commitment, 4> c2;  // one mask commitment per root
  intcom::Commitment c3;
  std::array<mpz_class, 4> m2;
  std::array<mpz_class, 4> r4;
  mpz_class r5;

  bool operator==(const NnProof&) const = default;
};

// The optional context is hashed into the challenge, binding the proof to
// whatever the caller wants (for example a list commitment and an element
// pair).
NnProof nn_prove(const intcom::Params& params, const intcom::Commitment& c,
                 const intcom::Opening& opening, Rng& rng,
                 ByteSpan context = {});

// Test hook: runs the prover with caller-supplied roots and no checks on the
// witness, so soundness tests can try to prove false statements.
NnProof nn_prove_unchecked(const intcom::Params& params,
                           const intcom::Commitment& c, const mpz_class& rho,
                           const FourSquares& roots, Rng& rng,
                           ByteSpan context = {});

bool nn_verify(const intcom::Params& params, const intcom::Commitment& c,
               const NnProof& proof, ByteSpan context = {});

// Proves x > 0 by proving x - 1 >= 0 for c / g.
NnProof positive_prove(const intcom::Params& params,
                       const intcom::Commitment& c,
                       const intcom::Opening& opening, Rng& rng,
                       ByteSpan context = {});
bool positive_verify(const intcom::Params& params, const intcom::Commitment& c,
                     const NnProof& proof, ByteSpan context = {});

// The recomputed challenge, exposed for tests.
mpz_class nn_challenge(const intcom::Params& params, const intcom::Commitment& c,
                       const NnProof& proof, ByteSpan context);

void write(ByteWriter& w, const NnProof& proof);
NnProof read_nn_proof(ByteReader& r, const intcom::Params& params);

}  // namespace ordlist::rangeproof

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

#include <span>

#include "ordlist/bilinear/context.h"
#include "ordlist/common/bytes.h"

// Single-signer bilinear aggregate signatures: sign H(M)^v, aggregate by
// multiplication, verify the aggregate with one pairing equation.
namespace ordlist::bilinear {

struct KeyPair {
  Scalar secret;
  G2 public_key;  // g2^v
};

KeyPair generate_keypair(const BilinearContext& ctx, Rng& rng);

// H(message)^v. Deterministic in (v, message).
G1 sign_element(const BilinearContext& ctx, const Scalar& v, ByteSpan message);

// e(sigma, g2) == e(H(message), pk).
bool verify_signature(const BilinearContext& ctx, const G2& public_key,
                      ByteSpan message, const G1& sigma);

// Product of the signatures. Throws kEmptyAggregate on empty input.
G1 aggregate(std::span<const G1> signatures);

// Rejects repeated messages, then checks e(sigma, g2) == e(prod H(M_i), pk).
bool aggregate_verify(const BilinearContext& ctx, const G2& public_key,
                      std::span<const Bytes> messages, const G1& sigma);

}  // namespace ordlist::bilinear

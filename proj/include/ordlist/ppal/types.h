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

#include <array>
#include <string>
#include <vector>

#include "ordlist/bilinear/group.h"

namespace ordlist::ppal {

using bilinear::G1;
using bilinear::G2;
using bilinear::Scalar;

// Owner's long-term secrets: the accumulator trapdoor s and signing key v.
// Neither digest carries them.
struct OwnerSecret {
  Scalar s;
  Scalar v;
};

// Per-list nonce. Only H(omega) reaches the server; the salt H(omega)^v is
// folded into the list signature.
struct ListNonce {
  static constexpr size_t kBytes = 32;
  std::array<uint8_t, kBytes> omega{};
  G1 salt;
};

// What the client keeps: constant size regardless of the list length.
struct ClientDigest {
  G1 public_key_g1;  // g1^v
  G2 public_key;     // g2^v, used by verification
  G1 list_signature; // sigma_L = salt * prod sigma_i
};

struct MemberAuth {
  G1 witness;    // t_i = g1^(s^i * r_i)
  G1 signature;  // sigma_i = H(t_i || x_i)^v
};

struct ServerDigest {
  G1 public_key_g1;
  G2 public_key;
  G1 list_signature;
  std::vector<G2> powers;          // g2^(s^i), i = 0..n
  std::vector<MemberAuth> members; // index i-1 holds rank i
  G1 nonce_hash;                   // H(omega)
  std::vector<Scalar> order_auth;  // r_i, pairwise distinct, nonzero

  size_t size() const { return members.size(); }
  ClientDigest client_digest() const {
    return {public_key_g1, public_key, list_signature};
  }
};

struct QueryProof {
  std::vector<std::string> order;   // queried elements in list order
  G1 sigma_order;                   // prod of their signatures
  std::vector<G1> member_witnesses; // aligned with order
  G1 lambda;                        // H(omega) * prod over the complement
  std::vector<G2> order_witnesses;  // one per adjacent pair in order
};

enum class Verdict { kAccept, kReject };

}  // namespace ordlist::ppal

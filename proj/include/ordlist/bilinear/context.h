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

#include <string>

#include "ordlist/bilinear/group.h"

namespace ordlist::bilinear {

// System parameters shared by owner, server and client: the asymmetric
// BLS12-381 pairing e: G1 x G2 -> GT, fixed generators, and the two hash
// domains. Signatures and accumulator values live in G1; public keys,
// accumulator powers and order witnesses live in G2.
struct BilinearContext {
  std::string signature_dst = "PPAL-SIG";
  std::string salt_dst = "PPAL-SALT";

  G1 g1() const { return G1::generator(); }
  G2 g2() const { return G2::generator(); }

  G1 hash_message(ByteSpan msg) const { return G1::hash(msg, signature_dst); }
  G1 hash_nonce(ByteSpan nonce) const { return G1::hash(nonce, salt_dst); }
};

}  // namespace ordlist::bilinear

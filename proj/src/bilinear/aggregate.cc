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

#include "ordlist/bilinear/aggregate.h"

#include <algorithm>
#include <vector>

#include "ordlist/common/error.h"

namespace ordlist::bilinear {

KeyPair generate_keypair(const BilinearContext& ctx, Rng& rng) {
  Scalar v = Scalar::random_nonzero(rng);
  return {v, ctx.g2().pow(v)};
}

G1 sign_element(const BilinearContext& ctx, const Scalar& v, ByteSpan message) {
  return ctx.hash_message(message).pow(v);
}

bool verify_signature(const BilinearContext& ctx, const G2& public_key,
                      ByteSpan message, const G1& sigma) {
  return pairings_equal(sigma, ctx.g2(), ctx.hash_message(message), public_key);
}

G1 aggregate(std::span<const G1> signatures) {
  ORDLIST_ENFORCE(!signatures.empty(), ErrorCode::kEmptyAggregate,
                  "nothing to aggregate");
  G1 acc = signatures.front();
  for (size_t i = 1; i < signatures.size(); ++i) acc *= signatures[i];
  return acc;
}

bool aggregate_verify(const BilinearContext& ctx, const G2& public_key,
                      std::span<const Bytes> messages, const G1& sigma) {
  if (messages.empty()) return false;
  std::vector<const Bytes*> sorted;
  sorted.reserve(messages.size());
  for (const Bytes& m : messages) sorted.push_back(&m);
  std::sort(sorted.begin(), sorted.end(),
            [](const Bytes* a, const Bytes* b) { return *a < *b; });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i] == *sorted[i - 1]) return false;
  }
  G1 hashed;
  for (const Bytes& m : messages) hashed *= ctx.hash_message(m);
  return pairings_equal(sigma, ctx.g2(), hashed, public_key);
}

}  // namespace ordlist::bilinear

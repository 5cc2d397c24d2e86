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

#include "ordlist/common/hash.h"

#include "ordlist/common/sodium_init.h"

namespace ordlist {

Sha256::Sha256(std::string_view domain_tag) {
  ensure_sodium();
  crypto_hash_sha256_init(&state_);
  if (!domain_tag.empty()) absorb_field(domain_tag);
}

Sha256& Sha256::absorb(ByteSpan data) {
  crypto_hash_sha256_update(&state_, data.data(), data.size());
  return *this;
}

Sha256& Sha256::absorb_field(ByteSpan data) {
  ByteWriter w;
  w.u32(static_cast<uint32_t>(data.size()));
  absorb(w.data());
  return absorb(data);
}

Digest256 Sha256::finish() {
  Digest256 out;
  crypto_hash_sha256_final(&state_, out.data());
  return out;
}

Digest256 sha256(ByteSpan data) {
  ensure_sodium();
  Digest256 out;
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

Digest512 sha512(ByteSpan data) {
  ensure_sodium();
  Digest512 out;
  crypto_hash_sha512(out.data(), data.data(), data.size());
  return out;
}

}  // namespace ordlist

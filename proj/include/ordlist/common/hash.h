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
#include <cstdint>
#include <string_view>

#include <sodium.h>

#include "ordlist/common/bytes.h"

namespace ordlist {

using Digest256 = std::array<uint8_t, 32>;
using Digest512 = std::array<uint8_t, 64>;

// Incremental SHA-256 with unambiguous framing helpers. absorb() feeds raw
// bytes; absorb_field() prefixes the length so adjacent fields never run
// together.
class Sha256 {
 public:
  explicit Sha256(std::string_view domain_tag = {});

  Sha256& absorb(ByteSpan data);
  Sha256& absorb_field(ByteSpan data);
  Sha256& absorb_field(std::string_view s) { return absorb_field(as_bytes(s)); }
  Digest256 finish();

 private:
  crypto_hash_sha256_state state_;
};

Digest256 sha256(ByteSpan data);
Digest512 sha512(ByteSpan data);

}  // namespace ordlist

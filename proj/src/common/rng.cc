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

#include "ordlist/common/rng.h"

#include <sodium.h>

#include <algorithm>
#include <cstring>

#include "ordlist/common/error.h"
#include "ordlist/common/hash.h"
#include "ordlist/common/sodium_init.h"

namespace ordlist {

Rng::Rng(const std::array<uint8_t, 32>& key) : key_(key) { ensure_sodium(); }

Rng Rng::from_seed(ByteSpan seed) {
  return Rng(Sha256("ordlist-rng-seed").absorb_field(seed).finish());
}

Rng Rng::from_os() {
  ensure_sodium();
  std::array<uint8_t, 32> key;
  randombytes_buf(key.data(), key.size());
  return Rng(key);
}

void Rng::refill() {
  static_assert(sizeof(buffer_) % 64 == 0);
  constexpr uint32_t kBlocks = sizeof(buffer_) / 64;
  if (block_counter_ > UINT32_MAX - kBlocks) {
    block_counter_ = 0;
    ++nonce_counter_;
  }
  std::array<uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
  nonce[0] = static_cast<uint8_t>(nonce_counter_ >> 24);
  nonce[1] = static_cast<uint8_t>(nonce_counter_ >> 16);
  nonce[2] = static_cast<uint8_t>(nonce_counter_ >> 8);
  nonce[3] = static_cast<uint8_t>(nonce_counter_);
  buffer_.fill(0);
  crypto_stream_chacha20_ietf_xor_ic(buffer_.data(), buffer_.data(),
                                     buffer_.size(), nonce.data(),
                                     block_counter_, key_.data());
  block_counter_ += kBlocks;
  used_ = 0;
}

void Rng::fill(std::span<uint8_t> out) {
  size_t off = 0;
  while (off < out.size()) {
    if (used_ == buffer_.size()) refill();
    size_t n = std::min(out.size() - off, buffer_.size() - used_);
    std::memcpy(out.data() + off, buffer_.data() + used_, n);
    used_ += n;
    off += n;
  }
}

Bytes Rng::bytes(size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

uint64_t Rng::next_u64() {
  uint8_t b[8];
  fill(b);
  uint64_t v = 0;
  for (uint8_t x : b) v = v << 8 | x;
  return v;
}

uint64_t Rng::uniform(uint64_t bound) {
  ORDLIST_ENFORCE(bound != 0, ErrorCode::kIndexError, "empty range");
  // Rejection sampling on the largest multiple of bound.
  const uint64_t limit = max() - max() % bound;
  for (;;) {
    uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

Rng Rng::fork(std::string_view label) const {
  return Rng(Sha256("ordlist-rng-fork")
                 .absorb_field(ByteSpan(key_))
                 .absorb_field(label)
                 .finish());
}

}  // namespace ordlist

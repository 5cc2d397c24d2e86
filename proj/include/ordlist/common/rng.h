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
#include <limits>
#include <span>
#include <string_view>

#include "ordlist/common/bytes.h"

namespace ordlist {

// ChaCha20 keystream generator. Seeded instances are fully deterministic,
// which the CLI and tests rely on for reproducible outputs; from_os() draws
// a fresh key from the operating system.
//
// Satisfies UniformRandomBitGenerator so it can drive std::shuffle and the
// standard distributions. Not thread-safe; give each thread its own Rng.
class Rng {
 public:
  using result_type = uint64_t;

  static Rng from_seed(ByteSpan seed);
  static Rng from_seed(std::string_view seed) { return from_seed(as_bytes(seed)); }
  static Rng from_os();

  void fill(std::span<uint8_t> out);
  Bytes bytes(size_t n);
  uint64_t next_u64();
  // Uniform in [0, bound). bound must be nonzero.
  uint64_t uniform(uint64_t bound);

  // Independent child stream, deterministic in (this stream's key, label).
  Rng fork(std::string_view label) const;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return next_u64(); }

 private:
  explicit Rng(const std::array<uint8_t, 32>& key);
  void refill();

  std::array<uint8_t, 32> key_;
  std::array<uint8_t, 1024> buffer_{};
  size_t used_ = sizeof(buffer_);
  uint32_t block_counter_ = 0;
  uint32_t nonce_counter_ = 0;
};

}  // namespace ordlist

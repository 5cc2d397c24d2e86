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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordlist {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

inline ByteSpan as_bytes(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

std::string to_hex(ByteSpan data);
Bytes from_hex(std::string_view hex);

// Append-only big-endian encoder. Variable-length fields carry a 4-byte
// length prefix.
class ByteWriter {
 public:
  void u8(uint8_t v) { out_.push_back(v); }
  void u32(uint32_t v);
  void raw(ByteSpan data) { out_.insert(out_.end(), data.begin(), data.end()); }
  void bytes(ByteSpan data);
  void str(std::string_view s) { bytes(as_bytes(s)); }

  const Bytes& data() const& { return out_; }
  Bytes take() && { return std::move(out_); }

 private:
  Bytes out_;
};

// Bounds-checked reader over an untrusted buffer. Every short read or
// oversize length throws Error(kMalformed).
class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  uint8_t u8();
  uint32_t u32();
  ByteSpan raw(size_t n);
  ByteSpan bytes(size_t max_len = kDefaultMaxField);
  std::string str(size_t max_len = kDefaultMaxField);

  // Element counts are checked against the bytes left so a forged count can
  // not trigger a huge allocation.
  uint32_t count(size_t min_element_bytes);

  size_t remaining() const { return data_.size() - pos_; }
  void expect_end() const;

  static constexpr size_t kDefaultMaxField = 1u << 24;

 private:
  ByteSpan data_;
  size_t pos_ = 0;
};

}  // namespace ordlist

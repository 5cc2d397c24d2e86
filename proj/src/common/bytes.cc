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

#include "ordlist/common/bytes.h"

#include "ordlist/common/error.h"

namespace ordlist {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(ByteSpan data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  ORDLIST_ENFORCE(hex.size() % 2 == 0, ErrorCode::kMalformed,
                  "hex string has odd length");
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    ORDLIST_ENFORCE(hi >= 0 && lo >= 0, ErrorCode::kMalformed,
                    "invalid hex digit");
    out[i] = static_cast<uint8_t>(hi << 4 | lo);
  }
  return out;
}

void ByteWriter::u32(uint32_t v) {
  out_.push_back(static_cast<uint8_t>(v >> 24));
  out_.push_back(static_cast<uint8_t>(v >> 16));
  out_.push_back(static_cast<uint8_t>(v >> 8));
  out_.push_back(static_cast<uint8_t>(v));
}

void ByteWriter::bytes(ByteSpan data) {
  ORDLIST_ENFORCE(data.size() <= UINT32_MAX, ErrorCode::kMalformed,
                  "field too large to encode");
  u32(static_cast<uint32_t>(data.size()));
  raw(data);
}

uint8_t ByteReader::u8() { return raw(1)[0]; }

uint32_t ByteReader::u32() {
  ByteSpan b = raw(4);
  return uint32_t{b[0]} << 24 | uint32_t{b[1]} << 16 | uint32_t{b[2]} << 8 |
         uint32_t{b[3]};
}

ByteSpan ByteReader::raw(size_t n) {
  ORDLIST_ENFORCE(n <= remaining(), ErrorCode::kMalformed, "truncated input");
  ByteSpan out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

ByteSpan ByteReader::bytes(size_t max_len) {
  uint32_t len = u32();
  ORDLIST_ENFORCE(len <= max_len, ErrorCode::kMalformed, "field too long");
  return raw(len);
}

std::string ByteReader::str(size_t max_len) {
  ByteSpan b = bytes(max_len);
  return std::string(b.begin(), b.end());
}

uint32_t ByteReader::count(size_t min_element_bytes) {
  uint32_t n = u32();
  ORDLIST_ENFORCE(
      min_element_bytes == 0 || n <= remaining() / min_element_bytes,
      ErrorCode::kMalformed, "element count exceeds input size");
  return n;
}

void ByteReader::expect_end() const {
  ORDLIST_ENFORCE(remaining() == 0, ErrorCode::kMalformed,
                  "trailing bytes after payload");
}

}  // namespace ordlist

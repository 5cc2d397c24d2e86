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

#include "ordlist/common/bigint.h"

#include "ordlist/common/error.h"

namespace ordlist {

mpz_class random_bits(Rng& rng, size_t bits) {
  if (bits == 0) return 0;
  Bytes buf = rng.bytes((bits + 7) / 8);
  size_t excess = buf.size() * 8 - bits;
  buf[0] &= static_cast<uint8_t>(0xff >> excess);
  return from_bytes(buf);
}

mpz_class random_below(Rng& rng, const mpz_class& bound) {
  ORDLIST_ENFORCE(bound > 0, ErrorCode::kIndexError, "empty sampling range");
  // 128 extra bits keep the modular bias negligible.
  mpz_class wide = random_bits(rng, bit_length(bound) + 128);
  return wide % bound;
}

mpz_class pow2(size_t exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

mpz_class isqrt(const mpz_class& x) {
  mpz_class out;
  mpz_sqrt(out.get_mpz_t(), x.get_mpz_t());
  return out;
}

mpz_class ceil_sqrt(const mpz_class& x) {
  mpz_class s = isqrt(x);
  if (s * s < x) ++s;
  return s;
}

size_t bit_length(const mpz_class& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

Bytes to_bytes(const mpz_class& x) {
  if (x == 0) return {};
  size_t n = (bit_length(x) + 7) / 8;
  Bytes out(n);
  size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, x.get_mpz_t());
  out.resize(written);
  return out;
}

Bytes to_fixed_bytes(const mpz_class& x, size_t width) {
  Bytes mag = to_bytes(x);
  ORDLIST_ENFORCE(mag.size() <= width, ErrorCode::kMalformed,
                  "integer does not fit fixed width");
  Bytes out(width - mag.size(), 0);
  out.insert(out.end(), mag.begin(), mag.end());
  return out;
}

mpz_class from_bytes(ByteSpan be) {
  mpz_class out;
  if (!be.empty()) mpz_import(out.get_mpz_t(), be.size(), 1, 1, 1, 0, be.data());
  return out;
}

void write_unsigned(ByteWriter& w, const mpz_class& x) {
  ORDLIST_ENFORCE(x >= 0, ErrorCode::kMalformed, "negative unsigned integer");
  w.bytes(to_bytes(x));
}

namespace {

// Minimal encodings only, so every integer has exactly one serialization.
mpz_class read_magnitude(ByteReader& r, size_t max_bytes) {
  ByteSpan raw = r.bytes(max_bytes);
  ORDLIST_ENFORCE(raw.empty() || raw[0] != 0, ErrorCode::kMalformed,
                  "integer encoding has a leading zero byte");
  return from_bytes(raw);
}

}  // namespace

mpz_class read_unsigned(ByteReader& r, size_t max_bytes) {
  return read_magnitude(r, max_bytes);
}

void write_signed(ByteWriter& w, const mpz_class& x) {
  w.u8(x < 0 ? 1 : 0);
  mpz_class mag = abs(x);
  w.bytes(to_bytes(mag));
}

mpz_class read_signed(ByteReader& r, size_t max_bytes) {
  uint8_t sign = r.u8();
  ORDLIST_ENFORCE(sign <= 1, ErrorCode::kMalformed, "bad sign byte");
  mpz_class mag = read_magnitude(r, max_bytes);
  ORDLIST_ENFORCE(!(sign == 1 && mag == 0), ErrorCode::kMalformed,
                  "negative zero");
  return sign ? mpz_class(-mag) : mag;
}

}  // namespace ordlist

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

#include <blst.h>

#include <array>
#include <cstdint>
#include <string_view>

#include "ordlist/common/bytes.h"
#include "ordlist/common/rng.h"

// Value types over BLS12-381: the scalar field Z_p, the source groups G1 and
// G2, and the target group GT, with an instrumented pairing. Group laws are
// written multiplicatively to match the protocol descriptions.
namespace ordlist::bilinear {

class Scalar {
 public:
  static constexpr size_t kBytes = 32;

  Scalar() = default;
  static Scalar from_u64(uint64_t v);
  // Reduces an arbitrary-length big-endian string modulo p.
  static Scalar reduce(ByteSpan be);
  // Rejects encodings that are not canonical (>= p).
  static Scalar from_bytes(ByteSpan be);
  static Scalar random(Rng& rng);
  static Scalar random_nonzero(Rng& rng);

  std::array<uint8_t, kBytes> to_bytes() const;
  bool is_zero() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // zero maps to zero
  Scalar pow(uint64_t e) const;

  bool operator==(const Scalar& o) const;

  blst_scalar to_blst() const;

 private:
  blst_fr fr_{};
};

class G1 {
 public:
  static constexpr size_t kBytes = 48;

  G1() = default;  // identity
  explicit G1(const blst_p1& p) : p_(p) {}

  static G1 generator();
  static G1 identity() { return G1(); }
  static G1 hash(ByteSpan msg, std::string_view dst);
  static G1 from_bytes(ByteSpan compressed);

  G1 operator*(const G1& o) const;
  G1& operator*=(const G1& o);
  G1 inverse() const;
  G1 pow(const Scalar& e) const;

  bool is_identity() const;
  bool operator==(const G1& o) const;

  std::array<uint8_t, kBytes> to_bytes() const;
  blst_p1_affine affine() const;
  const blst_p1& raw() const { return p_; }

 private:
  blst_p1 p_{};
};

class G2 {
 public:
  static constexpr size_t kBytes = 96;

  G2() = default;  // identity
  explicit G2(const blst_p2& p) : p_(p) {}

  static G2 generator();
  static G2 identity() { return G2(); }
  static G2 from_bytes(ByteSpan compressed);

  G2 operator*(const G2& o) const;
  G2 inverse() const;
  G2 pow(const Scalar& e) const;

  bool is_identity() const;
  bool operator==(const G2& o) const;

  std::array<uint8_t, kBytes> to_bytes() const;
  blst_p2_affine affine() const;

 private:
  blst_p2 p_{};
};

class Gt {
 public:
  Gt();  // identity
  explicit Gt(const blst_fp12& f) : f_(f) {}

  Gt operator*(const Gt& o) const;
  Gt pow(const Scalar& e) const;
  bool is_identity() const;
  bool operator==(const Gt& o) const;

 private:
  blst_fp12 f_;
};

// Full pairing e(P, Q). Increments the pairing counter by one.
Gt pairing(const G1& p, const G2& q);

// Checks e(a, b) == e(c, d) with two Miller loops and one shared final
// exponentiation. Increments the pairing counter by two.
bool pairings_equal(const G1& a, const G2& b, const G1& c, const G2& d);

// Process-wide count of bilinear map evaluations (one per Miller loop).
uint64_t pairing_count();
void reset_pairing_count();

}  // namespace ordlist::bilinear

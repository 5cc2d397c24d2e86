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

#include "ordlist/bilinear/group.h"

#include <algorithm>
#include <atomic>
#include <cstring>

#include "ordlist/common/error.h"

namespace ordlist::bilinear {

namespace {

std::atomic<uint64_t> g_pairings{0};

constexpr size_t kScalarBits = 255;

blst_fp12 miller(const G1& p, const G2& q) {
  g_pairings.fetch_add(1, std::memory_order_relaxed);
  if (p.is_identity() || q.is_identity()) return *blst_fp12_one();
  blst_p1_affine pa = p.affine();
  blst_p2_affine qa = q.affine();
  blst_fp12 out;
  blst_miller_loop(&out, &qa, &pa);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Scalar

Scalar Scalar::from_u64(uint64_t v) {
  const uint64_t limbs[4] = {v, 0, 0, 0};
  Scalar s;
  blst_fr_from_uint64(&s.fr_, limbs);
  return s;
}

Scalar Scalar::reduce(ByteSpan be) {
  blst_scalar sc;
  blst_scalar_from_be_bytes(&sc, be.data(), be.size());
  Scalar s;
  blst_fr_from_scalar(&s.fr_, &sc);
  return s;
}

Scalar Scalar::from_bytes(ByteSpan be) {
  ORDLIST_ENFORCE(be.size() == kBytes, ErrorCode::kMalformed,
                  "scalar must be 32 bytes");
  blst_scalar sc;
  blst_scalar_from_bendian(&sc, be.data());
  const bool zero =
      std::all_of(be.begin(), be.end(), [](uint8_t b) { return b == 0; });
  ORDLIST_ENFORCE(zero || blst_scalar_fr_check(&sc), ErrorCode::kMalformed,
                  "non-canonical scalar");
  Scalar s;
  blst_fr_from_scalar(&s.fr_, &sc);
  return s;
}

Scalar Scalar::random(Rng& rng) {
  uint8_t wide[64];
  rng.fill(wide);
  return reduce(wide);
}

Scalar Scalar::random_nonzero(Rng& rng) {
  for (;;) {
    Scalar s = random(rng);
    if (!s.is_zero()) return s;
  }
}

std::array<uint8_t, Scalar::kBytes> Scalar::to_bytes() const {
  blst_scalar sc = to_blst();
  std::array<uint8_t, kBytes> out;
  blst_bendian_from_scalar(out.data(), &sc);
  return out;
}

bool Scalar::is_zero() const {
  static const blst_fr kZero{};
  return std::memcmp(&fr_, &kZero, sizeof(fr_)) == 0;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  blst_fr_add(&r.fr_, &fr_, &o.fr_);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  blst_fr_sub(&r.fr_, &fr_, &o.fr_);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  blst_fr_mul(&r.fr_, &fr_, &o.fr_);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  blst_fr_cneg(&r.fr_, &fr_, true);
  return r;
}

Scalar Scalar::inverse() const {
  Scalar r;
  blst_fr_inverse(&r.fr_, &fr_);
  return r;
}

Scalar Scalar::pow(uint64_t e) const {
  Scalar result = from_u64(1);
  Scalar base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  return std::memcmp(&fr_, &o.fr_, sizeof(fr_)) == 0;
}

blst_scalar Scalar::to_blst() const {
  blst_scalar sc;
  blst_scalar_from_fr(&sc, &fr_);
  return sc;
}

// -------------------------------------------------------------------- G1

G1 G1::generator() { return G1(*blst_p1_generator()); }

G1 G1::hash(ByteSpan msg, std::string_view dst) {
  blst_p1 out;
  blst_hash_to_g1(&out, msg.data(), msg.size(),
                  reinterpret_cast<const byte*>(dst.data()), dst.size(),
                  nullptr, 0);
  return G1(out);
}

G1 G1::from_bytes(ByteSpan compressed) {
  ORDLIST_ENFORCE(compressed.size() == kBytes, ErrorCode::kMalformed,
                  "G1 element must be 48 bytes");
  blst_p1_affine a;
  ORDLIST_ENFORCE(blst_p1_uncompress(&a, compressed.data()) == BLST_SUCCESS,
                  ErrorCode::kMalformed, "invalid G1 encoding");
  ORDLIST_ENFORCE(blst_p1_affine_in_g1(&a), ErrorCode::kMalformed,
                  "G1 point outside the prime-order subgroup");
  blst_p1 p;
  blst_p1_from_affine(&p, &a);
  return G1(p);
}

G1 G1::operator*(const G1& o) const {
  blst_p1 out;
  blst_p1_add_or_double(&out, &p_, &o.p_);
  return G1(out);
}

G1& G1::operator*=(const G1& o) {
  blst_p1_add_or_double(&p_, &p_, &o.p_);
  return *this;
}

G1 G1::inverse() const {
  blst_p1 out = p_;
  blst_p1_cneg(&out, true);
  return G1(out);
}

G1 G1::pow(const Scalar& e) const {
  blst_scalar sc = e.to_blst();
  blst_p1 out;
  blst_p1_mult(&out, &p_, sc.b, kScalarBits);
  return G1(out);
}

bool G1::is_identity() const { return blst_p1_is_inf(&p_); }

bool G1::operator==(const G1& o) const { return blst_p1_is_equal(&p_, &o.p_); }

std::array<uint8_t, G1::kBytes> G1::to_bytes() const {
  std::array<uint8_t, kBytes> out;
  blst_p1_compress(out.data(), &p_);
  return out;
}

blst_p1_affine G1::affine() const {
  blst_p1_affine a;
  blst_p1_to_affine(&a, &p_);
  return a;
}

// -------------------------------------------------------------------- G2

G2 G2::generator() { return G2(*blst_p2_generator()); }

G2 G2::from_bytes(ByteSpan compressed) {
  ORDLIST_ENFORCE(compressed.size() == kBytes, ErrorCode::kMalformed,
                  "G2 element must be 96 bytes");
  blst_p2_affine a;
  ORDLIST_ENFORCE(blst_p2_uncompress(&a, compressed.data()) == BLST_SUCCESS,
                  ErrorCode::kMalformed, "invalid G2 encoding");
  ORDLIST_ENFORCE(blst_p2_affine_in_g2(&a), ErrorCode::kMalformed,
                  "G2 point outside the prime-order subgroup");
  blst_p2 p;
  blst_p2_from_affine(&p, &a);
  return G2(p);
}

G2 G2::operator*(const G2& o) const {
  blst_p2 out;
  blst_p2_add_or_double(&out, &p_, &o.p_);
  return G2(out);
}

G2 G2::inverse() const {
  blst_p2 out = p_;
  blst_p2_cneg(&out, true);
  return G2(out);
}

G2 G2::pow(const Scalar& e) const {
  blst_scalar sc = e.to_blst();
  blst_p2 out;
  blst_p2_mult(&out, &p_, sc.b, kScalarBits);
  return G2(out);
}

bool G2::is_identity() const { return blst_p2_is_inf(&p_); }

bool G2::operator==(const G2& o) const { return blst_p2_is_equal(&p_, &o.p_); }

std::array<uint8_t, G2::kBytes> G2::to_bytes() const {
  std::array<uint8_t, kBytes> out;
  blst_p2_compress(out.data(), &p_);
  return out;
}

blst_p2_affine G2::affine() const {
  blst_p2_affine a;
  blst_p2_to_affine(&a, &p_);
  return a;
}

// -------------------------------------------------------------------- GT

Gt::Gt() : f_(*blst_fp12_one()) {}

Gt Gt::operator*(const Gt& o) const {
  blst_fp12 out;
  blst_fp12_mul(&out, &f_, &o.f_);
  return Gt(out);
}

Gt Gt::pow(const Scalar& e) const {
  blst_scalar sc = e.to_blst();
  blst_fp12 acc = *blst_fp12_one();
  for (int bit = static_cast<int>(kScalarBits) - 1; bit >= 0; --bit) {
    blst_fp12_sqr(&acc, &acc);
    if ((sc.b[bit / 8] >> (bit % 8)) & 1) blst_fp12_mul(&acc, &acc, &f_);
  }
  return Gt(acc);
}

bool Gt::is_identity() const { return blst_fp12_is_one(&f_); }

bool Gt::operator==(const Gt& o) const { return blst_fp12_is_equal(&f_, &o.f_); }

// ---------------------------------------------------------------- pairing

Gt pairing(const G1& p, const G2& q) {
  blst_fp12 ml = miller(p, q);
  blst_fp12 out;
  blst_final_exp(&out, &ml);
  return Gt(out);
}

bool pairings_equal(const G1& a, const G2& b, const G1& c, const G2& d) {
  blst_fp12 lhs = miller(a, b);
  blst_fp12 rhs = miller(c, d);
  return blst_fp12_finalverify(&lhs, &rhs);
}

uint64_t pairing_count() { return g_pairings.load(std::memory_order_relaxed); }

void reset_pairing_count() { g_pairings.store(0, std::memory_order_relaxed); }

}  // namespace ordlist::bilinear

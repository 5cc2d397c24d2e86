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

#include "ordlist/rangeproof/nonneg.h"

#include "ordlist/common/bigint.h"
#include "ordlist/common/error.h"
#include "ordlist/common/hash.h"

namespace ordlist::rangeproof {

namespace {

using intcom::Commitment;
using intcom::Params;

constexpr size_t kMaxResponseBytes = 1u << 12;

struct Ranges {
  size_t b2k;          // B + 2k
  mpz_class sqrt_m;    // ceil(sqrt(M))
  mpz_class r1;        // 2^(B+2k)
  mpz_class r2;        // 2^(B+2k) F
  mpz_class r3;        // 2^(B+2k) F sqrt(M)
  mpz_class m1;        // 2^k F sqrt(M)
};

Ranges ranges_for(const Params& p) {
  Ranges out;
  out.b2k = p.order_bits + 2 * p.statistical_bits;
  out.sqrt_m = ceil_sqrt(p.message_bound);
  out.r1 = pow2(out.b2k);
  out.r2 = out.r1 * p.challenge_bound;
  out.r3 = out.r2 * out.sqrt_m;
  out.m1 = pow2(p.statistical_bits) * p.challenge_bound * out.sqrt_m;
  return out;
}

mpz_class mulmod(const Params& p, const mpz_class& a, const mpz_class& b) {
  mpz_class out = a * b;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), p.modulus.get_mpz_t());
  return out;
}

}  // namespace

mpz_class nn_challenge(const Params& params, const Commitment& c,
                       const NnProof& proof, ByteSpan context) {
  ByteWriter transcript;
  intcom::write(transcript, params);
  intcom::write(transcript, c);
  for (const Commitment& x : proof.c1) intcom::write(transcript, x);
  for (const Commitment& x : proof.c2) intcom::write(transcript, x);
  intcom::write(transcript, proof.c3);
  Sha256 h("NONNEG-FS");
  h.absorb_field(transcript.data());
  h.absorb_field(context);
  Digest256 d = h.finish();
  mpz_class e = from_bytes(d);
  mpz_mod(e.get_mpz_t(), e.get_mpz_t(), params.challenge_bound.get_mpz_t());
  return e;
}

NnProof nn_prove_unchecked(const Params& params, const Commitment& c,
                           const mpz_class& rho, const FourSquares& roots,
                           Rng& rng, ByteSpan context) {
  const Ranges R = ranges_for(params);
  std::array<mpz_class, 4> r1, r2, m1;
  mpz_class partial = 0;
  for (int i = 0; i < 3; ++i) {
    r1[i] = random_below(rng, R.r1);
    partial += r1[i];
  }
  r1[3] = rho - partial;
  for (int i = 0; i < 4; ++i) {
    r2[i] = random_below(rng, R.r2);
    m1[i] = random_below(rng, R.m1);
  }
  const mpz_class r3 = random_below(rng, R.r3);

  NnProof proof;
  mpz_class c3 = intcom::power(params, params.h, r3);
  for (int i = 0; i < 4; ++i) {
    proof.c1[i] = intcom::commit_with(params, roots.w[i], r1[i]);
    proof.c2[i] = intcom::commit_with(params, m1[i], r2[i]);
    c3 = mulmod(params, c3, intcom::power(params, proof.c1[i].value, m1[i]));
  }
  proof.c3 = {c3};

  const mpz_class e = nn_challenge(params, c, proof, context);
  mpz_class weighted = 0;
  for (int i = 0; i < 4; ++i) {
    proof.m2[i] = m1[i] + e * roots.w[i];
    proof.r4[i] = r2[i] + e * r1[i];
    weighted += (1 - roots.w[i]) * r1[i];
  }
  proof.r5 = r3 + e * weighted;
  return proof;
}

NnProof nn_prove(const Params& params, const Commitment& c,
                 const intcom::Opening& opening, Rng& rng, ByteSpan context) {
  ORDLIST_ENFORCE(opening.x >= 0, ErrorCode::kNegativeWitness,
                  "committed integer is negative");
  ORDLIST_ENFORCE(opening.b == 1 && intcom::verify_open(params, c, opening),
                  ErrorCode::kInvalidOpening, "opening does not match commitment");
  ORDLIST_ENFORCE(opening.x <= params.message_bound, ErrorCode::kMessageTooLarge,
                  "committed integer exceeds the message bound");
  ORDLIST_ENFORCE(abs(opening.r) < pow2(params.order_bits + 2 * params.statistical_bits),
                  ErrorCode::kInvalidOpening, "opening randomness out of range");
  FourSquares roots = four_square_decompose(opening.x, rng);
  return nn_prove_unchecked(params, c, opening.r, roots, rng, context);
}

bool nn_verify(const Params& params, const Commitment& c, const NnProof& proof,
               ByteSpan context) {
  const mpz_class& n = params.modulus;
  auto in_group = [&](const Commitment& x) {
    return x.value > 0 && x.value < n;
  };
  if (!in_group(c) || !in_group(proof.c3)) return false;
  for (int i = 0; i < 4; ++i) {
    if (!in_group(proof.c1[i]) || !in_group(proof.c2[i])) return false;
  }
  // Response magnitudes an honest prover stays under, with slack for the
  // randomness of derived commitments.
  const Ranges R = ranges_for(params);
  const mpz_class& f = params.challenge_bound;
  const mpz_class m2_bound = pow2(params.statistical_bits + 1) * f * R.sqrt_m;
  const mpz_class r4_bound = pow2(R.b2k + 3) * f;
  const mpz_class r5_bound = pow2(R.b2k + 6) * f * R.sqrt_m;
  for (int i = 0; i < 4; ++i) {
    if (abs(proof.m2[i]) >= m2_bound || abs(proof.r4[i]) >= r4_bound) {
      return false;
    }
  }
  if (abs(proof.r5) >= r5_bound) return false;

  const mpz_class e = nn_challenge(params, c, proof, context);
  try {
    for (int i = 0; i < 4; ++i) {
      mpz_class lhs = mulmod(params,
                             intcom::commit_with(params, proof.m2[i], proof.r4[i]).value,
                             intcom::power(params, proof.c1[i].value, -e));
      if (lhs != proof.c2[i].value) return false;
    }
    mpz_class lhs = mulmod(params, intcom::power(params, params.h, proof.r5),
                           intcom::power(params, c.value, -e));
    for (int i = 0; i < 4; ++i) {
      lhs = mulmod(params, lhs, intcom::power(params, proof.c1[i].value, proof.m2[i]));
    }
    return lhs == proof.c3.value;
  } catch (const Error&) {
    return false;  // a non-invertible element: reject rather than abort
  }
}

NnProof positive_prove(const Params& params, const Commitment& c,
                       const intcom::Opening& opening, Rng& rng,
                       ByteSpan context) {
  ORDLIST_ENFORCE(opening.x >= 1, ErrorCode::kNonPositiveWitness,
                  "committed integer is not positive");
  const Commitment shifted = intcom::divide(params, c, {params.g});
  intcom::Opening lowered = opening;
  lowered.x -= 1;
  return nn_prove(params, shifted, lowered, rng, context);
}

bool positive_verify(const Params& params, const Commitment& c,
                     const NnProof& proof, ByteSpan context) {
  if (c.value <= 0 || c.value >= params.modulus) return false;
  try {
    return nn_verify(params, intcom::divide(params, c, {params.g}), proof,
                     context);
  } catch (const Error&) {
    return false;
  }
}

void write(ByteWriter& w, const NnProof& proof) {
  for (const auto& x : proof.c1) intcom::write(w, x);
  for (const auto& x : proof.c2) intcom::write(w, x);
  intcom::write(w, proof.c3);
  for (const auto& x : proof.m2) write_signed(w, x);
  for (const auto& x : proof.r4) write_signed(w, x);
  write_signed(w, proof.r5);
}

NnProof read_nn_proof(ByteReader& r, const Params& params) {
  NnProof proof;
  for (auto& x : proof.c1) x = intcom::read_commitment(r, params);
  for (auto& x : proof.c2) x = intcom::read_commitment(r, params);
  proof.c3 = intcom::read_commitment(r, params);
  for (auto& x : proof.m2) x = read_signed(r, kMaxResponseBytes);
  for (auto& x : proof.r4) x = read_signed(r, kMaxResponseBytes);
  proof.r5 = read_signed(r, kMaxResponseBytes);
  return proof;
}

}  // namespace ordlist::rangeproof

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

#include "ordlist/zks/mercurial.h"

#include "ordlist/common/error.h"
#include "ordlist/common/hash.h"

namespace ordlist::zks {

namespace {

Scalar tagged_scalar(std::string_view tag, ByteSpan data) {
  ByteWriter w;
  w.str(tag);
  w.raw(data);
  Digest512 d = sha512(w.data());
  return Scalar::reduce(d);
}

}  // namespace

std::pair<MercParams, MercTrapdoor> merc_setup(Rng& rng) {
  MercTrapdoor trapdoor{Scalar::random_nonzero(rng)};
  MercParams params{G1::generator(), G1::generator().pow(trapdoor.x)};
  return {params, trapdoor};
}

MercCommitment commitment_for(const MercParams& params, const MercSecret& s) {
  if (s.kind == MercKind::kSoft) {
    return {params.g.pow(s.r0), params.g.pow(s.r1)};
  }
  G1 c1 = params.h.pow(s.r1);
  return {params.g.pow(s.message) * c1.pow(s.r0), c1};
}

std::pair<MercCommitment, MercSecret> hard_commit(const MercParams& params,
                                                  const Scalar& message,
                                                  Rng& rng) {
  MercSecret s{MercKind::kHard, Scalar::random(rng),
               Scalar::random_nonzero(rng), message};
  return {commitment_for(params, s), s};
}

std::pair<MercCommitment, MercSecret> soft_commit(const MercParams& params,
                                                  Rng& rng) {
  MercSecret s{MercKind::kSoft, Scalar::random(rng),
               Scalar::random_nonzero(rng), Scalar()};
  return {commitment_for(params, s), s};
}

OpenProof merc_open(const MercSecret& secret, const Scalar& message) {
  ORDLIST_ENFORCE(secret.kind == MercKind::kHard, ErrorCode::kCannotOpenSoft,
                  "soft commitments cannot be opened");
  ORDLIST_ENFORCE(secret.message == message, ErrorCode::kInvalidOpening,
                  "hard commitment holds a different message");
  return {secret.r0, secret.r1};
}

Scalar merc_tease(const MercSecret& secret, const Scalar& message) {
  if (secret.kind == MercKind::kHard) {
    ORDLIST_ENFORCE(secret.message == message, ErrorCode::kInvalidTease,
                    "hard commitment holds a different message");
    return secret.r0;
  }
  // g^m (g^r1)^((r0 - m) / r1) = g^r0.
  return (secret.r0 - message) * secret.r1.inverse();
}

bool ver_open(const MercParams& params, const MercCommitment& c,
              const Scalar& message, const OpenProof& proof) {
  if (!(c.c1 == params.h.pow(proof.r1))) return false;
  return c.c0 == params.g.pow(message) * c.c1.pow(proof.r0);
}

bool ver_tease(const MercParams& params, const MercCommitment& c,
               const Scalar& message, const Scalar& tease) {
  return c.c0 == params.g.pow(message) * c.c1.pow(tease);
}

OpenProof fake_open(const MercTrapdoor& trapdoor, const MercSecret& secret,
                    const Scalar& message) {
  ORDLIST_ENFORCE(secret.kind == MercKind::kSoft, ErrorCode::kInvalidOpening,
                  "only soft commitments can be equivocated");
  return {(secret.r0 - message) * secret.r1.inverse(),
          secret.r1 * trapdoor.x.inverse()};
}

Scalar leaf_message(ByteSpan value) { return tagged_scalar("ZKS-LEAF", value); }

Scalar bottom_message() { return tagged_scalar("ZKS-BOTTOM", {}); }

Scalar node_message(const MercCommitment& left, const MercCommitment& right) {
  ByteWriter w;
  write(w, left);
  write(w, right);
  return tagged_scalar("ZKS-NODE", w.data());
}

void write(ByteWriter& w, const MercParams& params) {
  w.raw(params.g.to_bytes());
  w.raw(params.h.to_bytes());
}

MercParams read_merc_params(ByteReader& r) {
  MercParams p;
  p.g = G1::from_bytes(r.raw(G1::kBytes));
  p.h = G1::from_bytes(r.raw(G1::kBytes));
  ORDLIST_ENFORCE(!p.g.is_identity() && !p.h.is_identity(),
                  ErrorCode::kMalformed, "degenerate commitment bases");
  return p;
}

void write(ByteWriter& w, const MercCommitment& c) {
  w.raw(c.c0.to_bytes());
  w.raw(c.c1.to_bytes());
}

MercCommitment read_merc_commitment(ByteReader& r) {
  MercCommitment c;
  c.c0 = G1::from_bytes(r.raw(G1::kBytes));
  c.c1 = G1::from_bytes(r.raw(G1::kBytes));
  return c;
}

}  // namespace ordlist::zks

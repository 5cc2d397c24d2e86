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

#include "ordlist/ppal/serialize.h"

#include "ordlist/common/error.h"

namespace ordlist::ppal {

namespace {

void put(ByteWriter& w, const G1& p) { w.raw(p.to_bytes()); }
void put(ByteWriter& w, const G2& p) { w.raw(p.to_bytes()); }
void put(ByteWriter& w, const Scalar& s) { w.raw(s.to_bytes()); }

G1 get_g1(ByteReader& r) { return G1::from_bytes(r.raw(G1::kBytes)); }
G2 get_g2(ByteReader& r) { return G2::from_bytes(r.raw(G2::kBytes)); }

Scalar get_scalar(ByteReader& r) {
  try {
    return Scalar::from_bytes(r.raw(Scalar::kBytes));
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformed, e.what());
  }
}

}  // namespace

Bytes encode(const ClientDigest& digest) {
  ByteWriter w;
  put(w, digest.public_key_g1);
  put(w, digest.public_key);
  put(w, digest.list_signature);
  return std::move(w).take();
}

ClientDigest decode_client_digest(ByteSpan payload) {
  ByteReader r(payload);
  ClientDigest d;
  d.public_key_g1 = get_g1(r);
  d.public_key = get_g2(r);
  d.list_signature = get_g1(r);
  r.expect_end();
  return d;
}

Bytes encode(const ServerDigest& digest) {
  ByteWriter w;
  put(w, digest.public_key_g1);
  put(w, digest.public_key);
  put(w, digest.list_signature);
  put(w, digest.nonce_hash);
  w.u32(static_cast<uint32_t>(digest.size()));
  for (const G2& p : digest.powers) put(w, p);
  for (const MemberAuth& m : digest.members) {
    put(w, m.witness);
    put(w, m.signature);
  }
  for (const Scalar& r : digest.order_auth) put(w, r);
  return std::move(w).take();
}

ServerDigest decode_server_digest(ByteSpan payload) {
  ByteReader r(payload);
  ServerDigest d;
  d.public_key_g1 = get_g1(r);
  d.public_key = get_g2(r);
  d.list_signature = get_g1(r);
  d.nonce_hash = get_g1(r);
  const size_t n = r.count(G2::kBytes + 2 * G1::kBytes + Scalar::kBytes);
  ORDLIST_ENFORCE(n >= 1, ErrorCode::kMalformed, "server digest for an empty list");
  d.powers.reserve(n + 1);
  for (size_t i = 0; i <= n; ++i) d.powers.push_back(get_g2(r));
  d.members.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    G1 witness = get_g1(r);
    G1 signature = get_g1(r);
    d.members.push_back({witness, signature});
  }
  d.order_auth.reserve(n);
  for (size_t i = 0; i < n; ++i) d.order_auth.push_back(get_scalar(r));
  r.expect_end();
  return d;
}

Bytes encode(const QueryProof& proof) {
  ByteWriter w;
  w.u32(static_cast<uint32_t>(proof.order.size()));
  for (const std::string& y : proof.order) w.str(y);
  put(w, proof.sigma_order);
  for (const G1& t : proof.member_witnesses) put(w, t);
  put(w, proof.lambda);
  for (const G2& o : proof.order_witnesses) put(w, o);
  return std::move(w).take();
}

QueryProof decode_query_proof(ByteSpan payload) {
  ByteReader r(payload);
  QueryProof p;
  const size_t m = r.count(4 + G1::kBytes);
  ORDLIST_ENFORCE(m >= 1, ErrorCode::kMalformed, "proof for an empty query");
  p.order.reserve(m);
  for (size_t j = 0; j < m; ++j) p.order.push_back(r.str());
  p.sigma_order = get_g1(r);
  p.member_witnesses.reserve(m);
  for (size_t j = 0; j < m; ++j) p.member_witnesses.push_back(get_g1(r));
  p.lambda = get_g1(r);
  p.order_witnesses.reserve(m - 1);
  for (size_t j = 0; j + 1 < m; ++j) p.order_witnesses.push_back(get_g2(r));
  r.expect_end();
  return p;
}

}  // namespace ordlist::ppal

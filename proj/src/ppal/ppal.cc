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

#include "ordlist/ppal/ppal.h"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "ordlist/bilinear/aggregate.h"
#include "ordlist/common/error.h"

namespace ordlist::ppal {

namespace {

void check_digest_shape(const ServerDigest& digest, const SourceList& list) {
  const size_t n = list.size();
  ORDLIST_ENFORCE(digest.members.size() == n && digest.order_auth.size() == n &&
                      digest.powers.size() == n + 1,
                  ErrorCode::kInconsistentDigest,
                  "server digest does not match a list of " + std::to_string(n) +
                      " elements");
}

}  // namespace

Bytes witness_message(const G1& member_witness, const std::string& element) {
  ByteWriter w;
  w.raw(member_witness.to_bytes());
  w.str(element);
  return std::move(w).take();
}

SetupResult setup(const bilinear::BilinearContext& ctx, const SourceList& list,
                  Rng& rng) {
  const size_t n = list.size();
  SetupResult out;
  out.secret.s = Scalar::random_nonzero(rng);
  out.secret.v = Scalar::random_nonzero(rng);
  const Scalar& s = out.secret.s;
  const Scalar& v = out.secret.v;

  ServerDigest& server = out.server;
  server.public_key_g1 = ctx.g1().pow(v);
  server.public_key = ctx.g2().pow(v);

  std::set<std::array<uint8_t, Scalar::kBytes>> seen;
  server.order_auth.reserve(n);
  while (server.order_auth.size() < n) {
    Scalar r = Scalar::random_nonzero(rng);
    if (seen.insert(r.to_bytes()).second) server.order_auth.push_back(r);
  }

  server.powers.reserve(n + 1);
  server.members.reserve(n);
  G1 signature_product;
  Scalar s_power = Scalar::from_u64(1);
  server.powers.push_back(ctx.g2());
  for (size_t i = 1; i <= n; ++i) {
    s_power = s_power * s;
    server.powers.push_back(ctx.g2().pow(s_power));
    G1 witness = ctx.g1().pow(s_power * server.order_auth[i - 1]);
    G1 signature =
        bilinear::sign_element(ctx, v, witness_message(witness, list.at_rank(i)));
    signature_product *= signature;
    server.members.push_back({witness, signature});
  }

  rng.fill(out.nonce.omega);
  server.nonce_hash = ctx.hash_nonce(out.nonce.omega);
  out.nonce.salt = server.nonce_hash.pow(v);
  server.list_signature = out.nonce.salt * signature_product;

  out.client = server.client_digest();
  return out;
}

QueryProof query(const bilinear::BilinearContext& ctx, const ServerDigest& digest,
                 const SourceList& list, std::span<const std::string> delta,
                 const ProductTree* tree, QueryStats* stats) {
  check_digest_shape(digest, list);
  ORDLIST_ENFORCE(!delta.empty(), ErrorCode::kInvalidQuery, "empty query");

  std::vector<size_t> ranks;
  ranks.reserve(delta.size());
  std::string missing;
  for (const std::string& z : delta) {
    auto rank = list.rank_of(z);
    if (!rank) {
      missing += missing.empty() ? z : ", " + z;
      continue;
    }
    ranks.push_back(*rank);
  }
  ORDLIST_ENFORCE(missing.empty(), ErrorCode::kNotMember,
                  "not in the list: " + missing);
  std::sort(ranks.begin(), ranks.end());
  ORDLIST_ENFORCE(std::adjacent_find(ranks.begin(), ranks.end()) == ranks.end(),
                  ErrorCode::kInvalidQuery, "query repeats an element");

  QueryProof proof;
  proof.order.reserve(ranks.size());
  proof.member_witnesses.reserve(ranks.size());
  for (size_t rank : ranks) {
    const MemberAuth& auth = digest.members[rank - 1];
    proof.order.push_back(list.at_rank(rank));
    proof.sigma_order *= auth.signature;
    proof.member_witnesses.push_back(auth.witness);
  }

  proof.lambda = digest.nonce_hash;
  if (tree) {
    ORDLIST_ENFORCE(tree->size() == list.size(), ErrorCode::kInconsistentDigest,
                    "product tree built for a different list");
    size_t reads = 0;
    proof.lambda *= tree->complement_product(ranks, &reads);
    if (stats) stats->tree_node_reads += reads;
  } else {
    size_t next = 0;
    for (size_t rank = 1; rank <= list.size(); ++rank) {
      if (next < ranks.size() && ranks[next] == rank) {
        ++next;
        continue;
      }
      proof.lambda *= ctx.hash_message(
          witness_message(digest.members[rank - 1].witness, list.at_rank(rank)));
    }
  }

  proof.order_witnesses.reserve(ranks.size() - 1);
  for (size_t j = 0; j + 1 < ranks.size(); ++j) {
    const size_t lo = ranks[j];
    const size_t hi = ranks[j + 1];
    const Scalar exponent =
        digest.order_auth[lo - 1].inverse() * digest.order_auth[hi - 1];
    proof.order_witnesses.push_back(digest.powers[hi - lo].pow(exponent));
  }
  return proof;
}

Verdict verify(const bilinear::BilinearContext& ctx, const ClientDigest& digest,
               std::span<const std::string> delta, const QueryProof& proof,
               const VerifyOptions& options) {
  const size_t m = delta.size();
  if (m == 0 || m > options.max_query_size) return Verdict::kReject;
  if (proof.order.size() != m || proof.member_witnesses.size() != m ||
      proof.order_witnesses.size() != m - 1) {
    return Verdict::kReject;
  }
  {
    std::vector<std::string_view> asked(delta.begin(), delta.end());
    std::vector<std::string_view> got(proof.order.begin(), proof.order.end());
    std::sort(asked.begin(), asked.end());
    std::sort(got.begin(), got.end());
    if (asked != got) return Verdict::kReject;
    if (std::adjacent_find(asked.begin(), asked.end()) != asked.end()) {
      return Verdict::kReject;
    }
  }

  G1 xi;
  for (size_t j = 0; j < m; ++j) {
    xi *= ctx.hash_message(
        witness_message(proof.member_witnesses[j], proof.order[j]));
  }
  const G2 g2 = ctx.g2();
  if (!bilinear::pairings_equal(proof.sigma_order, g2, xi, digest.public_key)) {
    return Verdict::kReject;
  }
  if (!bilinear::pairings_equal(
          digest.list_signature * proof.sigma_order.inverse(), g2, proof.lambda,
          digest.public_key)) {
    return Verdict::kReject;
  }
  for (size_t j = 0; j + 1 < m; ++j) {
    if (!bilinear::pairings_equal(proof.member_witnesses[j],
                                  proof.order_witnesses[j],
                                  proof.member_witnesses[j + 1], g2)) {
      return Verdict::kReject;
    }
  }
  return Verdict::kAccept;
}

}  // namespace ordlist::ppal

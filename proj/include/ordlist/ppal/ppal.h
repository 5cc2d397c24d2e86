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

#include <span>
#include <string>

#include "ordlist/bilinear/context.h"
#include "ordlist/common/bytes.h"
#include "ordlist/common/rng.h"
#include "ordlist/common/source_list.h"
#include "ordlist/ppal/product_tree.h"
#include "ordlist/ppal/types.h"

// Privacy-preserving authenticated list: the owner signs randomized
// accumulator witnesses of every element, the server answers order queries
// on sublists, and the client verifies order and membership against a
// constant-size digest without learning anything else about the list.
namespace ordlist::ppal {

struct SetupResult {
  ClientDigest client;
  ServerDigest server;
  OwnerSecret secret;
  ListNonce nonce;
};

// Message signed for an element: compressed(t) || u32be(|x|) || x.
Bytes witness_message(const G1& member_witness, const std::string& element);

SetupResult setup(const bilinear::BilinearContext& ctx, const SourceList& list,
                  Rng& rng);

struct QueryStats {
  size_t tree_node_reads = 0;
};

// Answers delta (members of the list, no repeats). With a tree the
// complement product costs O(m log n) node reads; without one the server
// rehashes every element outside delta.
//
// Throws kNotMember naming the offending elements, kInvalidQuery for an
// empty or repeating delta, kInconsistentDigest for mismatched inputs.
QueryProof query(const bilinear::BilinearContext& ctx, const ServerDigest& digest,
                 const SourceList& list, std::span<const std::string> delta,
                 const ProductTree* tree = nullptr, QueryStats* stats = nullptr);

struct VerifyOptions {
  // Upper bound on |delta| the client is willing to process.
  size_t max_query_size = size_t{1} << 20;
};

// Checks, for order = (y_1..y_m):
//   e(sigma_order, g2) == e(prod H(t_j || y_j), g2^v)
//   e(sigma_L / sigma_order, g2) == e(lambda, g2^v)
//   e(t_j, w_j) == e(t_{j+1}, g2)   for j < m
// with exactly 2m + 2 Miller loops, after checking that order is a
// permutation of delta and the witness counts match.
Verdict verify(const bilinear::BilinearContext& ctx, const ClientDigest& digest,
               std::span<const std::string> delta, const QueryProof& proof,
               const VerifyOptions& options = {});

}  // namespace ordlist::ppal

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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ordlist/common/bytes.h"
#include "ordlist/common/rng.h"
#include "ordlist/zks/mercurial.h"

// Zero-knowledge sets: a commitment to a finite map from height-bit keys to
// byte strings, built as a binary tree of mercurial commitments. Members sit
// under hard commitments; the frontier next to the defined part of the tree
// is soft, and gets extended lazily when an absent key is queried.
//
// Depth 0 is the root and depth `height` holds the leaves.
namespace ordlist::zks {

// Keys are ceil(height / 8) bytes, most significant bit first, with the
// unused low bits of the last byte set to zero.
using Key = Bytes;

constexpr size_t kMaxHeight = 256;

struct ZksCommitment {
  MercCommitment root;
  bool operator==(const ZksCommitment&) const = default;
};

struct Decommitment {
  bool open = false;  // open (membership) or tease (non-membership)
  Scalar r0;
  Scalar r1;  // only meaningful for opens
};

struct ZksProof {
  // path[i] holds the two children at depth i + 1, left child first.
  std::vector<std::array<MercCommitment, 2>> path;
  // decommitments[d] is for the node at depth d on the key's path.
  std::vector<Decommitment> decommitments;
};

struct ZksAnswer {
  std::optional<Bytes> value;  // nullopt means the key is absent
  ZksProof proof;
};

class ZksState {
 public:
  size_t height() const { return height_; }
  size_t node_count() const { return nodes_.size(); }

 private:
  friend std::pair<ZksCommitment, ZksState> zks_commit(
      const MercParams&, size_t, const std::map<Key, Bytes>&, Rng&);
  friend ZksAnswer zks_prove(const MercParams&, ZksState&, const Key&);

  using NodeId = std::pair<size_t, Bytes>;  // depth, masked prefix
  struct Node {
    MercCommitment commitment;
    MercSecret secret;
  };

  size_t height_ = 0;
  std::map<Key, Bytes> members_;
  std::map<NodeId, Node> nodes_;
  std::array<uint8_t, 32> extension_key_{};
};

void check_key(const Key& key, size_t height);

// Key prefix of the first `depth` bits, remaining bits zeroed.
Bytes key_prefix(const Key& key, size_t depth);
bool key_bit(const Key& key, size_t index);

std::pair<ZksCommitment, ZksState> zks_commit(const MercParams& params,
                                              size_t height,
                                              const std::map<Key, Bytes>& data,
                                              Rng& rng);

// Mutates state: soft extensions created for absent keys are cached so
// repeated queries return identical proofs.
ZksAnswer zks_prove(const MercParams& params, ZksState& state, const Key& key);

bool zks_verify(const MercParams& params, size_t height,
                const ZksCommitment& com, const Key& key,
                const std::optional<Bytes>& value, const ZksProof& proof);

// Simulator: holds the mercurial trapdoor and no data. Every node is a soft
// commitment made on first use; membership answers are produced by opening
// them with the trapdoor.
class ZksSimulator {
 public:
  ZksSimulator(MercParams params, MercTrapdoor trapdoor, size_t height, Rng rng);

  const ZksCommitment& commitment() const { return commitment_; }
  ZksProof prove(const Key& key, const std::optional<Bytes>& value);

 private:
  using NodeId = std::pair<size_t, Bytes>;
  const MercSecret& node(const NodeId& id, MercCommitment* out);

  MercParams params_;
  MercTrapdoor trapdoor_;
  size_t height_;
  Rng rng_;
  ZksCommitment commitment_;
  std::map<NodeId, std::pair<MercCommitment, MercSecret>> nodes_;
};

void write(ByteWriter& w, const ZksProof& proof);
ZksProof read_zks_proof(ByteReader& r, size_t height);

}  // namespace ordlist::zks

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

#include "ordlist/zks/zks.h"

#include <set>

#include "ordlist/common/error.h"
#include "ordlist/common/hash.h"

namespace ordlist::zks {

namespace {

size_t key_bytes(size_t height) { return (height + 7) / 8; }

Bytes child_prefix(const Bytes& prefix, size_t depth, bool bit) {
  Bytes out = prefix;
  if (bit) out[depth / 8] |= static_cast<uint8_t>(0x80 >> (depth % 8));
  return out;
}

Scalar extension_scalar(const std::array<uint8_t, 32>& key, std::string_view label,
                        size_t depth, const Bytes& prefix) {
  ByteWriter w;
  w.str("ZKS-EXTENSION");
  w.raw(key);
  w.str(label);
  w.u32(static_cast<uint32_t>(depth));
  w.bytes(prefix);
  return Scalar::reduce(sha512(w.data()));
}

}  // namespace

void check_key(const Key& key, size_t height) {
  ORDLIST_ENFORCE(height >= 1 && height <= kMaxHeight, ErrorCode::kKeyLengthError,
                  "tree height out of range");
  ORDLIST_ENFORCE(key.size() == key_bytes(height), ErrorCode::kKeyLengthError,
                  "key has " + std::to_string(key.size()) + " bytes, expected " +
                      std::to_string(key_bytes(height)));
  if (height % 8 != 0) {
    const uint8_t unused = static_cast<uint8_t>(0xff >> (height % 8));
    ORDLIST_ENFORCE((key.back() & unused) == 0, ErrorCode::kKeyLengthError,
                    "key sets bits beyond the tree height");
  }
}

bool key_bit(const Key& key, size_t index) {
  return (key[index / 8] >> (7 - index % 8)) & 1;
}

Bytes key_prefix(const Key& key, size_t depth) {
  Bytes out(key.size(), 0);
  for (size_t i = 0; i < depth / 8; ++i) out[i] = key[i];
  if (depth % 8 != 0) {
    out[depth / 8] = key[depth / 8] & static_cast<uint8_t>(0xff00 >> (depth % 8));
  }
  return out;
}

std::pair<ZksCommitment, ZksState> zks_commit(const MercParams& params,
                                              size_t height,
                                              const std::map<Key, Bytes>& data,
                                              Rng& rng) {
  ZksState state;
  state.height_ = height;
  state.members_ = data;
  rng.fill(state.extension_key_);
  const Bytes root_prefix(key_bytes(height), 0);
  ORDLIST_ENFORCE(height >= 1 && height <= kMaxHeight, ErrorCode::kKeyLengthError,
                  "tree height out of range");

  if (data.empty()) {
    auto [c, s] = soft_commit(params, rng);
    state.nodes_[{0, root_prefix}] = {c, s};
    return {ZksCommitment{c}, std::move(state)};
  }

  std::set<Bytes> level;
  for (const auto& [key, value] : data) {
    check_key(key, height);
    auto [c, s] = hard_commit(params, leaf_message(value), rng);
    state.nodes_[{height, key}] = {c, s};
    level.insert(key);
  }
  for (size_t depth = height; depth-- > 0;) {
    std::set<Bytes> parents;
    for (const Bytes& k : level) parents.insert(key_prefix(k, depth));
    for (const Bytes& parent : parents) {
      std::array<MercCommitment, 2> children;
      for (int bit = 0; bit < 2; ++bit) {
        ZksState::NodeId id{depth + 1, child_prefix(parent, depth, bit)};
        auto it = state.nodes_.find(id);
        if (it == state.nodes_.end()) {
          auto [c, s] = soft_commit(params, rng);
          it = state.nodes_.emplace(id, ZksState::Node{c, s}).first;
        }
        children[bit] = it->second.commitment;
      }
      auto [c, s] = hard_commit(params, node_message(children[0], children[1]), rng);
      state.nodes_[{depth, parent}] = {c, s};
    }
    level = std::move(parents);
  }
  const MercCommitment root = state.nodes_.at({0, root_prefix}).commitment;
  return {ZksCommitment{root}, std::move(state)};
}

ZksAnswer zks_prove(const MercParams& params, ZksState& state, const Key& key) {
  const size_t height = state.height_;
  check_key(key, height);
  ZksAnswer answer;
  if (auto it = state.members_.find(key); it != state.members_.end()) {
    answer.value = it->second;
  }
  const bool member = answer.value.has_value();

  // Make sure both children exist at every depth below the root. For absent
  // keys this grows soft nodes under the deepest soft node on the path.
  for (size_t depth = 0; depth < height; ++depth) {
    const Bytes parent = key_prefix(key, depth);
    for (int bit = 0; bit < 2; ++bit) {
      ZksState::NodeId id{depth + 1, child_prefix(parent, depth, bit)};
      if (state.nodes_.count(id)) continue;
      ORDLIST_ENFORCE(!member, ErrorCode::kInconsistentDigest,
                      "member path is incomplete");
      MercSecret s{MercKind::kSoft,
                   extension_scalar(state.extension_key_, "r0", id.first, id.second),
                   extension_scalar(state.extension_key_, "r1", id.first, id.second),
                   Scalar()};
      if (s.r1.is_zero()) s.r1 = Scalar::from_u64(1);
      state.nodes_.emplace(id, ZksState::Node{commitment_for(params, s), s});
    }
  }

  answer.proof.path.reserve(height);
  answer.proof.decommitments.reserve(height + 1);
  for (size_t depth = 0; depth <= height; ++depth) {
    const ZksState::Node& node = state.nodes_.at({depth, key_prefix(key, depth)});
    Scalar message;
    if (depth < height) {
      const Bytes parent = key_prefix(key, depth);
      const auto& left = state.nodes_.at({depth + 1, child_prefix(parent, depth, 0)});
      const auto& right = state.nodes_.at({depth + 1, child_prefix(parent, depth, 1)});
      answer.proof.path.push_back({left.commitment, right.commitment});
      message = node_message(left.commitment, right.commitment);
    } else {
      message = member ? leaf_message(*answer.value) : bottom_message();
    }
    Decommitment d;
    if (member) {
      OpenProof o = merc_open(node.secret, message);
      d = {true, o.r0, o.r1};
    } else {
      d = {false, merc_tease(node.secret, message), Scalar()};
    }
    answer.proof.decommitments.push_back(d);
  }
  return answer;
}

bool zks_verify(const MercParams& params, size_t height,
                const ZksCommitment& com, const Key& key,
                const std::optional<Bytes>& value, const ZksProof& proof) {
  try {
    check_key(key, height);
  } catch (const Error&) {
    return false;
  }
  if (proof.path.size() != height || proof.decommitments.size() != height + 1) {
    return false;
  }
  const bool member = value.has_value();
  MercCommitment node = com.root;
  for (size_t depth = 0; depth <= height; ++depth) {
    const Decommitment& d = proof.decommitments[depth];
    if (d.open != member) return false;
    Scalar message;
    if (depth < height) {
      message = node_message(proof.path[depth][0], proof.path[depth][1]);
    } else {
      message = member ? leaf_message(*value) : bottom_message();
    }
    const bool ok = member ? ver_open(params, node, message, {d.r0, d.r1})
                           : ver_tease(params, node, message, d.r0);
    if (!ok) return false;
    if (depth < height) node = proof.path[depth][key_bit(key, depth) ? 1 : 0];
  }
  return true;
}

ZksSimulator::ZksSimulator(MercParams params, MercTrapdoor trapdoor,
                           size_t height, Rng rng)
    : params_(params), trapdoor_(trapdoor), height_(height), rng_(std::move(rng)) {
  ORDLIST_ENFORCE(height >= 1 && height <= kMaxHeight, ErrorCode::kKeyLengthError,
                  "tree height out of range");
  node({0, Bytes(key_bytes(height), 0)}, &commitment_.root);
}

const MercSecret& ZksSimulator::node(const NodeId& id, MercCommitment* out) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) it = nodes_.emplace(id, soft_commit(params_, rng_)).first;
  if (out) *out = it->second.first;
  return it->second.second;
}

ZksProof ZksSimulator::prove(const Key& key, const std::optional<Bytes>& value) {
  check_key(key, height_);
  ZksProof proof;
  const bool member = value.has_value();
  for (size_t depth = 0; depth <= height_; ++depth) {
    const Bytes prefix = key_prefix(key, depth);
    const MercSecret secret = node({depth, prefix}, nullptr);
    Scalar message;
    if (depth < height_) {
      std::array<MercCommitment, 2> children;
      node({depth + 1, child_prefix(prefix, depth, false)}, &children[0]);
      node({depth + 1, child_prefix(prefix, depth, true)}, &children[1]);
      proof.path.push_back(children);
      message = node_message(children[0], children[1]);
    } else {
      message = member ? leaf_message(*value) : bottom_message();
    }
    if (member) {
      OpenProof o = fake_open(trapdoor_, secret, message);
      proof.decommitments.push_back({true, o.r0, o.r1});
    } else {
      proof.decommitments.push_back({false, merc_tease(secret, message), Scalar()});
    }
  }
  return proof;
}

void write(ByteWriter& w, const ZksProof& proof) {
  w.u32(static_cast<uint32_t>(proof.path.size()));
  for (const auto& pair : proof.path) {
    write(w, pair[0]);
    write(w, pair[1]);
  }
  for (const Decommitment& d : proof.decommitments) {
    w.u8(d.open ? 1 : 2);
    w.raw(d.r0.to_bytes());
    if (d.open) w.raw(d.r1.to_bytes());
  }
}

ZksProof read_zks_proof(ByteReader& r, size_t height) {
  ZksProof proof;
  const uint32_t levels = r.u32();
  ORDLIST_ENFORCE(levels == height, ErrorCode::kMalformed,
                  "proof path length does not match the tree height");
  proof.path.reserve(levels);
  for (uint32_t i = 0; i < levels; ++i) {
    MercCommitment left = read_merc_commitment(r);
    MercCommitment right = read_merc_commitment(r);
    proof.path.push_back({left, right});
  }
  auto scalar = [&r] { return Scalar::from_bytes(r.raw(Scalar::kBytes)); };
  for (uint32_t i = 0; i <= levels; ++i) {
    const uint8_t tag = r.u8();
    ORDLIST_ENFORCE(tag == 1 || tag == 2, ErrorCode::kMalformed,
                    "unknown decommitment tag");
    Decommitment d;
    d.open = tag == 1;
    d.r0 = scalar();
    if (d.open) d.r1 = scalar();
    proof.decommitments.push_back(d);
  }
  return proof;
}

}  // namespace ordlist::zks

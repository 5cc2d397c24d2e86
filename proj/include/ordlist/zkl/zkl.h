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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordlist/common/bytes.h"
#include "ordlist/common/rng.h"
#include "ordlist/common/source_list.h"
#include "ordlist/intcom/intcom.h"
#include "ordlist/rangeproof/nonneg.h"
#include "ordlist/zks/zks.h"

// Zero-knowledge lists. The prover commits to a list by putting
// (hash(element) -> commitment to its rank) into a zero-knowledge set.
// Membership answers are set proofs. Order answers add, for every adjacent
// pair, a proof that C(rank_next) / (C(rank_prev) * C(1)) commits to a
// non-negative integer, with a fresh C(1) opened in the response.
namespace ordlist::zkl {

struct Profile {
  size_t modulus_bits;
  size_t height;

  static Profile production() { return {2048, 256}; }
  // Small parameters for tests only; offers no real security.
  static Profile insecure_test() { return {512, 16}; }
};

struct PublicKey {
  intcom::Params commit;
  zks::MercParams merc;
  size_t height = 0;
};

struct Trapdoors {
  intcom::Trapdoor commit;
  zks::MercTrapdoor merc;
};

std::pair<PublicKey, Trapdoors> zkl_setup(const Profile& profile, Rng& rng);

// hash(element) truncated to the tree height.
zks::Key element_key(const std::string& element, size_t height);

struct ZklCommitment {
  zks::ZksCommitment com;
  bool operator==(const ZklCommitment&) const = default;
};

struct RankEntry {
  size_t rank;
  intcom::Commitment commitment;
  intcom::Opening opening;
};

class ZklState {
 public:
  const SourceList& list() const { return list_; }
  const RankEntry* entry(const std::string& element) const;
  const ZklCommitment& commitment() const { return com_; }
  zks::ZksState& set_state() { return zks_; }

 private:
  friend std::pair<ZklCommitment, ZklState> zkl_commit_with_ranks(
      const PublicKey&, const SourceList&, const std::vector<mpz_class>&, Rng&);

  explicit ZklState(SourceList list) : list_(std::move(list)) {}

  SourceList list_;
  std::map<std::string, RankEntry> entries_;
  ZklCommitment com_;
  zks::ZksState zks_;
};

// Throws kHashCollision when two elements map to the same key.
std::pair<ZklCommitment, ZklState> zkl_commit(const PublicKey& pk,
                                              const SourceList& list, Rng& rng);
// Commits to caller-chosen "ranks" instead of 1..n. Used to model cheating
// provers in tests.
std::pair<ZklCommitment, ZklState> zkl_commit_with_ranks(
    const PublicKey& pk, const SourceList& list,
    const std::vector<mpz_class>& ranks, Rng& rng);

enum class Flag : uint8_t { kMembership = 0, kOrder = 1 };

struct Query {
  std::vector<std::string> delta;
  Flag flag = Flag::kMembership;
};

struct MemberRecord {
  std::optional<intcom::Commitment> value;  // rank commitment when present
  zks::ZksProof proof;
};

struct OrderSection {
  std::vector<std::string> order;
  intcom::Commitment one;  // fresh commitment to 1
  intcom::Opening one_opening;
  std::vector<rangeproof::NnProof> gaps;  // one per adjacent pair in order
};

struct Response {
  Flag flag = Flag::kMembership;
  std::vector<bool> member;
  std::vector<MemberRecord> records;
  std::optional<OrderSection> order;
};

enum class Verdict { kAccept, kReject };

// Throws kInvalidFlag, kInvalidQuery (empty or repeated elements) and
// kHashCollision (an absent element shares a key with a present one).
Response zkl_query(const PublicKey& pk, ZklState& state, const Query& query,
                   Rng& rng);

Verdict zkl_verify(const PublicKey& pk, const ZklCommitment& com,
                   const Query& query, const Response& response);

// Challenge context for the gap proof between two adjacent elements.
Bytes gap_context(const ZklCommitment& com, const std::string& lower,
                  const std::string& upper);

// Answers membership and order for a hidden list.
struct ListOracle {
  std::function<bool(const std::string&)> contains;
  std::function<std::vector<std::string>(const std::vector<std::string>&)> order;
};

// Simulator holding both trapdoors and only oracle access to the list.
class ZklSimulator {
 public:
  ZklSimulator(const Profile& profile, ListOracle oracle, Rng rng);

  const PublicKey& public_key() const { return pk_; }
  const ZklCommitment& commitment() const { return com_; }
  Response query(const Query& query);

 private:
  const RankEntry& value_for(const std::string& element);

  ListOracle oracle_;
  Rng rng_;
  PublicKey pk_;
  Trapdoors trapdoors_;
  std::optional<zks::ZksSimulator> set_;
  ZklCommitment com_;
  std::map<std::string, RankEntry> table_;  // commitments to 0
};

Bytes encode_value(const PublicKey& pk, const intcom::Commitment& c);
intcom::Commitment decode_value(const PublicKey& pk, ByteSpan value);

void write(ByteWriter& w, const PublicKey& pk);
PublicKey read_public_key(ByteReader& r);
void write(ByteWriter& w, const ZklCommitment& com);
ZklCommitment read_commitment(ByteReader& r);
void write(ByteWriter& w, const PublicKey& pk, const Response& response);
Response read_response(ByteReader& r, const PublicKey& pk);

}  // namespace ordlist::zkl

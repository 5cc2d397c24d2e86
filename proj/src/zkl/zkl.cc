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

#include "ordlist/zkl/zkl.h"

#include <algorithm>
#include <set>

#include "ordlist/common/bigint.h"
#include "ordlist/common/error.h"
#include "ordlist/common/hash.h"

namespace ordlist::zkl {

namespace {

constexpr size_t kMaxQuery = 1u << 16;

size_t value_width(const PublicKey& pk) {
  return (bit_length(pk.commit.modulus) + 7) / 8;
}

void check_flag(Flag flag) {
  ORDLIST_ENFORCE(static_cast<uint8_t>(flag) <= 1, ErrorCode::kInvalidFlag,
                  "flag must be 0 (membership) or 1 (order)");
}

bool has_repeats(const std::vector<std::string>& v) {
  std::set<std::string_view> seen;
  for (const auto& x : v) {
    if (!seen.insert(x).second) return true;
  }
  return false;
}

void check_query(const Query& query) {
  check_flag(query.flag);
  ORDLIST_ENFORCE(!query.delta.empty(), ErrorCode::kInvalidQuery, "empty query");
  ORDLIST_ENFORCE(!has_repeats(query.delta), ErrorCode::kInvalidQuery,
                  "query repeats an element");
}

// Shared by the prover and the simulator once every pair has an opening of
// its gap commitment.
OrderSection prove_order(const PublicKey& pk, const ZklCommitment& com,
                         const std::vector<std::string>& order,
                         const std::vector<const RankEntry*>& entries,
                         const intcom::Trapdoor* trapdoor, Rng& rng) {
  OrderSection out;
  out.order = order;
  auto [one, one_opening] = intcom::commit(pk.commit, 1, rng);
  out.one = one;
  out.one_opening = one_opening;
  for (size_t j = 0; j + 1 < order.size(); ++j) {
    const RankEntry& lo = *entries[j];
    const RankEntry& hi = *entries[j + 1];
    const intcom::Commitment gap = intcom::divide(
        pk.commit, hi.commitment, intcom::combine(pk.commit, lo.commitment, one));
    intcom::Opening gap_opening = intcom::divide(
        pk.commit, hi.opening, intcom::combine(pk.commit, lo.opening, one_opening));
    if (trapdoor) {
      // Simulated values all commit to 0, so the gap holds -1. Reopen it to
      // a random non-negative integer.
      gap_opening = intcom::equivocate(pk.commit, *trapdoor, gap_opening,
                                       mpz_class(rng.uniform(1u << 20)));
    }
    out.gaps.push_back(rangeproof::nn_prove(pk.commit, gap, gap_opening, rng,
                                            gap_context(com, order[j], order[j + 1])));
  }
  return out;
}

}  // namespace

std::pair<PublicKey, Trapdoors> zkl_setup(const Profile& profile, Rng& rng) {
  intcom::SetupOptions options;
  options.modulus_bits = profile.modulus_bits;
  auto [params, commit_trapdoor] = intcom::setup(options, rng);
  auto [merc, merc_trapdoor] = zks::merc_setup(rng);
  return {PublicKey{params, merc, profile.height},
          Trapdoors{commit_trapdoor, merc_trapdoor}};
}

zks::Key element_key(const std::string& element, size_t height) {
  ORDLIST_ENFORCE(height >= 1 && height <= 256, ErrorCode::kKeyLengthError,
                  "element keys are at most 256 bits");
  Sha256 h("ZKL-ELEMENT");
  h.absorb_field(element);
  Digest256 d = h.finish();
  zks::Key key(d.begin(), d.begin() + (height + 7) / 8);
  if (height % 8) key.back() &= static_cast<uint8_t>(0xff00 >> (height % 8));
  return key;
}

const RankEntry* ZklState::entry(const std::string& element) const {
  auto it = entries_.find(element);
  return it == entries_.end() ? nullptr : &it->second;
}

std::pair<ZklCommitment, ZklState> zkl_commit_with_ranks(
    const PublicKey& pk, const SourceList& list,
    const std::vector<mpz_class>& ranks, Rng& rng) {
  ORDLIST_ENFORCE(ranks.size() == list.size(), ErrorCode::kInconsistentDigest,
                  "one rank per element is required");
  ZklState state(list);
  std::map<zks::Key, Bytes> data;
  for (size_t i = 0; i < list.size(); ++i) {
    const std::string& y = list.elements()[i];
    zks::Key key = element_key(y, pk.height);
    ORDLIST_ENFORCE(!data.count(key), ErrorCode::kHashCollision,
                    "two list elements share the key of \"" + y + "\"");
    auto [c, o] = intcom::commit(pk.commit, ranks[i], rng);
    state.entries_.emplace(y, RankEntry{i + 1, c, o});
    data.emplace(std::move(key), encode_value(pk, c));
  }
  auto [com, zks_state] = zks::zks_commit(pk.merc, pk.height, data, rng);
  state.zks_ = std::move(zks_state);
  state.com_ = ZklCommitment{com};
  return {state.com_, std::move(state)};
}

std::pair<ZklCommitment, ZklState> zkl_commit(const PublicKey& pk,
                                              const SourceList& list, Rng& rng) {
  std::vector<mpz_class> ranks;
  ranks.reserve(list.size());
  for (size_t i = 1; i <= list.size(); ++i) ranks.emplace_back(static_cast<unsigned long>(i));
  return zkl_commit_with_ranks(pk, list, ranks, rng);
}

Bytes gap_context(const ZklCommitment& com, const std::string& lower,
                  const std::string& upper) {
  ByteWriter w;
  w.str("ZKL-GAP");
  write(w, com);
  w.str(lower);
  w.str(upper);
  return std::move(w).take();
}

Response zkl_query(const PublicKey& pk, ZklState& state, const Query& query,
                   Rng& rng) {
  check_query(query);
  Response response;
  response.flag = query.flag;
  std::vector<std::pair<size_t, const RankEntry*>> present;
  for (const std::string& z : query.delta) {
    const RankEntry* e = state.entry(z);
    zks::ZksAnswer a = zks::zks_prove(pk.merc, state.set_state(), element_key(z, pk.height));
    ORDLIST_ENFORCE(a.value.has_value() == (e != nullptr), ErrorCode::kHashCollision,
                    "\"" + z + "\" shares its key with a list element");
    response.member.push_back(e != nullptr);
    MemberRecord record;
    record.proof = std::move(a.proof);
    if (e) {
      record.value = e->commitment;
      present.emplace_back(e->rank, e);
    }
    response.records.push_back(std::move(record));
  }
  if (query.flag == Flag::kOrder) {
    std::sort(present.begin(), present.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> order;
    std::vector<const RankEntry*> entries;
    for (const auto& [rank, e] : present) {
      order.push_back(state.list().at_rank(rank));
      entries.push_back(e);
    }
    response.order = prove_order(pk, state.commitment(), order, entries, nullptr, rng);
  }
  return response;
}

Verdict zkl_verify(const PublicKey& pk, const ZklCommitment& com,
                   const Query& query, const Response& response) {
  const size_t m = query.delta.size();
  if (static_cast<uint8_t>(query.flag) > 1 || response.flag != query.flag) {
    return Verdict::kReject;
  }
  if (m == 0 || has_repeats(query.delta)) return Verdict::kReject;
  if (response.member.size() != m || response.records.size() != m) {
    return Verdict::kReject;
  }
  std::map<std::string_view, intcom::Commitment> values;
  for (size_t i = 0; i < m; ++i) {
    const MemberRecord& rec = response.records[i];
    if (rec.value.has_value() != response.member[i]) return Verdict::kReject;
    std::optional<Bytes> value;
    if (rec.value) {
      const intcom::Commitment& c = *rec.value;
      if (c.value <= 0 || c.value >= pk.commit.modulus) return Verdict::kReject;
      value = encode_value(pk, c);
      values.emplace(query.delta[i], c);
    }
    if (!zks::zks_verify(pk.merc, pk.height, com.com,
                         element_key(query.delta[i], pk.height), value, rec.proof)) {
      return Verdict::kReject;
    }
  }
  if (query.flag == Flag::kMembership) {
    return response.order ? Verdict::kReject : Verdict::kAccept;
  }
  if (!response.order) return Verdict::kReject;
  const OrderSection& sec = *response.order;
  if (sec.order.size() != values.size()) return Verdict::kReject;
  if (sec.gaps.size() + 1 != std::max<size_t>(sec.order.size(), 1)) {
    return Verdict::kReject;
  }
  std::set<std::string_view> listed;
  for (const std::string& w : sec.order) {
    if (!values.count(w) || !listed.insert(w).second) return Verdict::kReject;
  }
  if (sec.one_opening.x != 1 ||
      !intcom::verify_open(pk.commit, sec.one, sec.one_opening)) {
    return Verdict::kReject;
  }
  try {
    for (size_t j = 0; j + 1 < sec.order.size(); ++j) {
      const intcom::Commitment& lo = values.at(sec.order[j]);
      const intcom::Commitment& hi = values.at(sec.order[j + 1]);
      const intcom::Commitment gap = intcom::divide(
          pk.commit, hi, intcom::combine(pk.commit, lo, sec.one));
      if (!rangeproof::nn_verify(pk.commit, gap, sec.gaps[j],
                                 gap_context(com, sec.order[j], sec.order[j + 1]))) {
        return Verdict::kReject;
      }
    }
  } catch (const Error&) {
    return Verdict::kReject;
  }
  return Verdict::kAccept;
}

ZklSimulator::ZklSimulator(const Profile& profile, ListOracle oracle, Rng rng)
    : oracle_(std::move(oracle)), rng_(std::move(rng)) {
  std::tie(pk_, trapdoors_) = zkl_setup(profile, rng_);
  set_.emplace(pk_.merc, trapdoors_.merc, pk_.height, rng_.fork("set"));
  com_ = ZklCommitment{set_->commitment()};
}

const RankEntry& ZklSimulator::value_for(const std::string& element) {
  auto it = table_.find(element);
  if (it == table_.end()) {
    auto [c, o] = intcom::commit(pk_.commit, 0, rng_);
    it = table_.emplace(element, RankEntry{0, c, o}).first;
  }
  return it->second;
}

Response ZklSimulator::query(const Query& query) {
  check_query(query);
  Response response;
  response.flag = query.flag;
  for (const std::string& z : query.delta) {
    const bool present = oracle_.contains(z);
    MemberRecord record;
    std::optional<Bytes> value;
    if (present) {
      record.value = value_for(z).commitment;
      value = encode_value(pk_, *record.value);
    }
    record.proof = set_->prove(element_key(z, pk_.height), value);
    response.member.push_back(present);
    response.records.push_back(std::move(record));
  }
  if (query.flag == Flag::kOrder) {
    std::vector<std::string> order = oracle_.order(query.delta);
    std::vector<const RankEntry*> entries;
    for (const std::string& w : order) entries.push_back(&value_for(w));
    response.order =
        prove_order(pk_, com_, order, entries, &trapdoors_.commit, rng_);
  }
  return response;
}

Bytes encode_value(const PublicKey& pk, const intcom::Commitment& c) {
  return to_fixed_bytes(c.value, value_width(pk));
}

intcom::Commitment decode_value(const PublicKey& pk, ByteSpan value) {
  ORDLIST_ENFORCE(value.size() == value_width(pk), ErrorCode::kMalformed,
                  "rank commitment has the wrong width");
  intcom::Commitment c{from_bytes(value)};
  ORDLIST_ENFORCE(c.value > 0 && c.value < pk.commit.modulus, ErrorCode::kMalformed,
                  "rank commitment outside [1, N)");
  return c;
}

void write(ByteWriter& w, const PublicKey& pk) {
  intcom::write(w, pk.commit);
  zks::write(w, pk.merc);
  w.u32(static_cast<uint32_t>(pk.height));
}

PublicKey read_public_key(ByteReader& r) {
  PublicKey pk;
  pk.commit = intcom::read_params(r);
  pk.merc = zks::read_merc_params(r);
  pk.height = r.u32();
  ORDLIST_ENFORCE(pk.height >= 1 && pk.height <= 256, ErrorCode::kMalformed,
                  "tree height out of range");
  return pk;
}

void write(ByteWriter& w, const ZklCommitment& com) { zks::write(w, com.com.root); }

ZklCommitment read_commitment(ByteReader& r) {
  return ZklCommitment{zks::ZksCommitment{zks::read_merc_commitment(r)}};
}

void write(ByteWriter& w, const PublicKey& pk, const Response& response) {
  w.u8(static_cast<uint8_t>(response.flag));
  w.u32(static_cast<uint32_t>(response.member.size()));
  Bytes bitmap((response.member.size() + 7) / 8, 0);
  for (size_t i = 0; i < response.member.size(); ++i) {
    if (response.member[i]) bitmap[i / 8] |= static_cast<uint8_t>(0x80 >> (i % 8));
  }
  w.raw(bitmap);
  for (size_t i = 0; i < response.records.size(); ++i) {
    const MemberRecord& rec = response.records[i];
    if (rec.value) w.raw(encode_value(pk, *rec.value));
    zks::write(w, rec.proof);
  }
  if (response.order) {
    const OrderSection& sec = *response.order;
    w.u32(static_cast<uint32_t>(sec.order.size()));
    for (const std::string& y : sec.order) w.str(y);
    intcom::write(w, sec.one);
    intcom::write(w, sec.one_opening);
    for (const auto& gap : sec.gaps) rangeproof::write(w, gap);
  }
}

Response read_response(ByteReader& r, const PublicKey& pk) {
  Response resp;
  const uint8_t flag = r.u8();
  ORDLIST_ENFORCE(flag <= 1, ErrorCode::kMalformed, "unknown query flag");
  resp.flag = static_cast<Flag>(flag);
  const uint32_t m = r.u32();
  ORDLIST_ENFORCE(m >= 1 && m <= kMaxQuery, ErrorCode::kMalformed,
                  "bad element count");
  ByteSpan bitmap = r.raw((m + 7) / 8);
  for (uint32_t i = 0; i < m; ++i) {
    resp.member.push_back((bitmap[i / 8] >> (7 - i % 8)) & 1);
  }
  if (m % 8) {
    ORDLIST_ENFORCE((bitmap.back() & (0xff >> (m % 8))) == 0, ErrorCode::kMalformed,
                    "padding bits set in membership bitmap");
  }
  for (uint32_t i = 0; i < m; ++i) {
    MemberRecord rec;
    if (resp.member[i]) rec.value = decode_value(pk, r.raw(value_width(pk)));
    rec.proof = zks::read_zks_proof(r, pk.height);
    resp.records.push_back(std::move(rec));
  }
  if (resp.flag == Flag::kOrder) {
    OrderSection sec;
    const uint32_t count = r.count(4);
    ORDLIST_ENFORCE(count <= m, ErrorCode::kMalformed, "order longer than query");
    for (uint32_t j = 0; j < count; ++j) sec.order.push_back(r.str());
    sec.one = intcom::read_commitment(r, pk.commit);
    sec.one_opening = intcom::read_opening(r);
    for (uint32_t j = 0; j + 1 < count; ++j) {
      sec.gaps.push_back(rangeproof::read_nn_proof(r, pk.commit));
    }
    resp.order = std::move(sec);
  }
  r.expect_end();
  return resp;
}

}  // namespace ordlist::zkl

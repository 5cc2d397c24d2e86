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

#include <gtest/gtest.h>

#include <algorithm>

#include "ordlist/common/error.h"
#include "ordlist/zkl/zkl.h"

namespace ordlist::zkl {
namespace {

class ZklTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    Rng rng = Rng::from_seed("zkl-pk");
    pk_ = new PublicKey(zkl_setup(Profile::insecure_test(), rng).first);
  }
  static void TearDownTestSuite() { delete pk_; }
  const PublicKey& pk() const { return *pk_; }
  static PublicKey* pk_;
  Rng rng = Rng::from_seed("zkl");

  Verdict round_trip(ZklState& state, const Query& q, Response* out = nullptr) {
    Response r = zkl_query(pk(), state, q, rng);
    ByteWriter w;
    write(w, pk(), r);
    ByteReader reader(w.data());
    Response parsed = read_response(reader, pk());
    if (out) *out = parsed;
    return zkl_verify(pk(), state.commitment(), q, parsed);
  }
};
PublicKey* ZklTest::pk_ = nullptr;

TEST_F(ZklTest, WorkedExample) {
  auto [com, state] = zkl_commit(pk(), SourceList::create({"A", "B", "C"}), rng);
  Query q{{"B", "D", "A"}, Flag::kOrder};
  Response r;
  ASSERT_EQ(round_trip(state, q, &r), Verdict::kAccept);
  EXPECT_EQ(r.member, (std::vector<bool>{true, false, true}));
  ASSERT_TRUE(r.order.has_value());
  EXPECT_EQ(r.order->order, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(r.order->gaps.size(), 1u);

  Query membership{{"B", "D", "A"}, Flag::kMembership};
  Response m;
  ASSERT_EQ(round_trip(state, membership, &m), Verdict::kAccept);
  EXPECT_EQ(m.member, (std::vector<bool>{true, false, true}));
  EXPECT_FALSE(m.order.has_value());
}

TEST_F(ZklTest, SingletonValueIsRankOneCommitment) {
  auto [com, state] = zkl_commit(pk(), SourceList::create({"solo"}), rng);
  Response r = zkl_query(pk(), state, {{"solo"}, Flag::kMembership}, rng);
  ASSERT_TRUE(r.records[0].value.has_value());
  EXPECT_TRUE(intcom::verify_open(pk().commit, *r.records[0].value,
                                  state.entry("solo")->opening));
  EXPECT_EQ(state.entry("solo")->opening.x, 1);
}

TEST_F(ZklTest, FullOrderRecovered) {
  auto [com, state] = zkl_commit(pk(), SourceList::create({"x", "y", "z"}), rng);
  Query q{{"z", "x", "y"}, Flag::kOrder};
  Response r;
  ASSERT_EQ(round_trip(state, q, &r), Verdict::kAccept);
  EXPECT_EQ(r.order->order, (std::vector<std::string>{"x", "y", "z"}));
}

TEST_F(ZklTest, CommitmentSizeIndependentOfListSize) {
  std::vector<std::string> big;
  for (int i = 0; i < 100; ++i) big.push_back("e" + std::to_string(i));
  auto [small_com, s1] = zkl_commit(pk(), SourceList::create({"one"}), rng);
  auto [big_com, s2] = zkl_commit(pk(), SourceList::create(big), rng);
  ByteWriter a, b;
  write(a, small_com);
  write(b, big_com);
  EXPECT_EQ(a.data().size(), b.data().size());
}

TEST_F(ZklTest, ErrorsAndRejections) {
  auto [com, state] = zkl_commit(pk(), SourceList::create({"A", "B"}), rng);
  try {
    zkl_query(pk(), state, {{"A"}, static_cast<Flag>(2)}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidFlag);
  }
  EXPECT_THROW(zkl_query(pk(), state, {{}, Flag::kOrder}, rng), Error);
  EXPECT_THROW(zkl_query(pk(), state, {{"A", "A"}, Flag::kOrder}, rng), Error);

  Query q{{"B", "A"}, Flag::kOrder};
  const Response honest = zkl_query(pk(), state, q, rng);
  ASSERT_EQ(zkl_verify(pk(), com, q, honest), Verdict::kAccept);

  Response swapped = honest;
  std::swap(swapped.order->order[0], swapped.order->order[1]);
  EXPECT_EQ(zkl_verify(pk(), com, q, swapped), Verdict::kReject);

  Response lied = honest;
  lied.member[0] = false;
  EXPECT_EQ(zkl_verify(pk(), com, q, lied), Verdict::kReject);

  Response flag_mismatch = honest;
  flag_mismatch.flag = Flag::kMembership;
  EXPECT_EQ(zkl_verify(pk(), com, q, flag_mismatch), Verdict::kReject);

  Response dropped = honest;
  dropped.order->order.pop_back();
  dropped.order->gaps.clear();
  EXPECT_EQ(zkl_verify(pk(), com, q, dropped), Verdict::kReject);

  // C(1) replaced by a commitment to 0 with its opening.
  Response zero_one = honest;
  auto [c0, o0] = intcom::commit(pk().commit, 0, rng);
  zero_one.order->one = c0;
  zero_one.order->one_opening = o0;
  EXPECT_EQ(zkl_verify(pk(), com, q, zero_one), Verdict::kReject);

  auto [other_com, other_state] = zkl_commit(pk(), SourceList::create({"A", "B"}), rng);
  EXPECT_EQ(zkl_verify(pk(), other_com, q, honest), Verdict::kReject);
}

TEST_F(ZklTest, AdjacentRanksGiveZeroGap) {
  auto [com, state] = zkl_commit(pk(), SourceList::create({"p", "q"}), rng);
  Query q{{"p", "q"}, Flag::kOrder};
  EXPECT_EQ(round_trip(state, q), Verdict::kAccept);
}

TEST_F(ZklTest, ConstantRankStateCannotProveOrder) {
  SourceList list = SourceList::create({"A", "B", "C"});
  auto [com, state] = zkl_commit_with_ranks(pk(), list, {7, 7, 7}, rng);
  Query q{{"A", "B"}, Flag::kOrder};
  EXPECT_THROW(zkl_query(pk(), state, q, rng), Error);
  // Forge the gap proof directly with arbitrary roots.
  Response r = zkl_query(pk(), state, {{"A", "B"}, Flag::kMembership}, rng);
  r.flag = Flag::kOrder;
  OrderSection sec;
  sec.order = {"A", "B"};
  auto [one, one_open] = intcom::commit(pk().commit, 1, rng);
  sec.one = one;
  sec.one_opening = one_open;
  const RankEntry* a = state.entry("A");
  const RankEntry* b = state.entry("B");
  intcom::Commitment gap = intcom::divide(pk().commit, b->commitment,
                                         intcom::combine(pk().commit, a->commitment, one));
  mpz_class rho = b->opening.r - a->opening.r - one_open.r;
  for (int i = 0; i < 5; ++i) {
    rangeproof::FourSquares roots;
    roots.w = {mpz_class(i), 0, 0, 0};
    sec.gaps = {rangeproof::nn_prove_unchecked(pk().commit, gap, rho, roots, rng,
                                               gap_context(com, "A", "B"))};
    r.order = sec;
    EXPECT_EQ(zkl_verify(pk(), com, q, r), Verdict::kReject);
  }
}

TEST_F(ZklTest, OrderProofMentionsOnlyItsPair) {
  auto [com, state] = zkl_commit(pk(), SourceList::create({"alpha", "beta", "gamma"}), rng);
  Response r = zkl_query(pk(), state, {{"gamma", "alpha"}, Flag::kOrder}, rng);
  ByteWriter w;
  write(w, pk(), r);
  const std::string bytes(w.data().begin(), w.data().end());
  EXPECT_EQ(bytes.find("beta"), std::string::npos);
}

TEST_F(ZklTest, SimulatedResponsesVerify) {
  SourceList hidden = SourceList::create({"A", "B", "C", "D"});
  ListOracle oracle;
  oracle.contains = [&](const std::string& x) { return hidden.contains(x); };
  oracle.order = [&](const std::vector<std::string>& delta) {
    std::vector<std::string> out;
    for (const auto& x : delta) {
      if (hidden.contains(x)) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      return *hidden.rank_of(a) < *hidden.rank_of(b);
    });
    return out;
  };
  ZklSimulator sim(Profile::insecure_test(), oracle, Rng::from_seed("zkl-sim"));
  Query q1{{"C", "Z", "A", "B"}, Flag::kOrder};
  Response r1 = sim.query(q1);
  EXPECT_EQ(zkl_verify(sim.public_key(), sim.commitment(), q1, r1), Verdict::kAccept);
  EXPECT_EQ(r1.order->order, (std::vector<std::string>{"A", "B", "C"}));
  Query q2{{"A"}, Flag::kMembership};
  Response r2 = sim.query(q2);
  EXPECT_EQ(zkl_verify(sim.public_key(), sim.commitment(), q2, r2), Verdict::kAccept);
  EXPECT_EQ(*r2.records[0].value, *r1.records[2].value);
}

TEST_F(ZklTest, ElementKeysHaveTreeHeight) {
  EXPECT_EQ(element_key("x", 16).size(), 2u);
  EXPECT_EQ(element_key("x", 256).size(), 32u);
  EXPECT_EQ(element_key("x", 12).back() & 0x0f, 0);
  EXPECT_NE(element_key("x", 16), element_key("y", 16));
}

}  // namespace
}  // namespace ordlist::zkl

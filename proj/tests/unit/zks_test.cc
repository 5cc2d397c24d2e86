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

#include "ordlist/common/error.h"
#include "ordlist/zks/zks.h"

namespace ordlist::zks {
namespace {

Key random_key(Rng& rng, size_t height) {
  Key k = rng.bytes((height + 7) / 8);
  if (height % 8) k.back() &= static_cast<uint8_t>(0xff00 >> (height % 8));
  return k;
}

class MercurialTest : public ::testing::Test {
 protected:
  Rng rng = Rng::from_seed("merc");
  std::pair<MercParams, MercTrapdoor> setup = merc_setup(rng);
  const MercParams& params = setup.first;
  Scalar m1 = leaf_message(as_bytes("one"));
  Scalar m2 = leaf_message(as_bytes("two"));
};

TEST_F(MercurialTest, ContractTable) {
  auto [hard, hs] = hard_commit(params, m1, rng);
  auto [soft, ss] = soft_commit(params, rng);

  // Hard: opens and teases to m1 only.
  EXPECT_TRUE(ver_open(params, hard, m1, merc_open(hs, m1)));
  EXPECT_TRUE(ver_tease(params, hard, m1, merc_tease(hs, m1)));
  EXPECT_FALSE(ver_open(params, hard, m2, merc_open(hs, m1)));
  EXPECT_FALSE(ver_tease(params, hard, m2, merc_tease(hs, m1)));
  EXPECT_THROW(merc_open(hs, m2), Error);
  try {
    merc_tease(hs, m2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidTease);
  }

  // Soft: teases to anything, never opens.
  EXPECT_TRUE(ver_tease(params, soft, m1, merc_tease(ss, m1)));
  EXPECT_TRUE(ver_tease(params, soft, m2, merc_tease(ss, m2)));
  EXPECT_TRUE(ver_tease(params, soft, bottom_message(), merc_tease(ss, bottom_message())));
  try {
    merc_open(ss, m1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCannotOpenSoft);
  }
  // Exhaustive over which (r0, r1) a cheater could reuse: none opens soft.
  EXPECT_FALSE(ver_open(params, soft, m1, {ss.r0, ss.r1}));
  EXPECT_FALSE(ver_open(params, soft, m1, {merc_tease(ss, m1), ss.r1}));
}

TEST_F(MercurialTest, CommitmentMatchesDefinition) {
  auto [hard, hs] = hard_commit(params, m1, rng);
  G1 c1 = params.h.pow(hs.r1);
  EXPECT_TRUE(hard.c1 == c1);
  EXPECT_TRUE(hard.c0 == params.g.pow(m1) * c1.pow(hs.r0));
  auto [soft, ss] = soft_commit(params, rng);
  EXPECT_TRUE(soft.c0 == params.g.pow(ss.r0));
  EXPECT_TRUE(soft.c1 == params.g.pow(ss.r1));
  EXPECT_TRUE(params.h == params.g.pow(setup.second.x));
}

TEST_F(MercurialTest, TrapdoorOpensSoftCommitments) {
  auto [soft, ss] = soft_commit(params, rng);
  OpenProof a = fake_open(setup.second, ss, m1);
  OpenProof b = fake_open(setup.second, ss, m2);
  EXPECT_TRUE(ver_open(params, soft, m1, a));
  EXPECT_TRUE(ver_open(params, soft, m2, b));
}

TEST_F(MercurialTest, DistinctMessageDomains) {
  MercCommitment x{params.g, params.h};
  EXPECT_FALSE(leaf_message({}) == bottom_message());
  EXPECT_FALSE(node_message(x, x) == leaf_message({}));
  EXPECT_FALSE(node_message(x, {params.h, params.g}) == node_message(x, x));
}

class ZksTest : public ::testing::Test {
 protected:
  Rng rng = Rng::from_seed("zks");
  MercParams params = merc_setup(rng).first;

  std::map<Key, Bytes> random_data(size_t n, size_t height) {
    std::map<Key, Bytes> d;
    while (d.size() < n) {
      d[random_key(rng, height)] = rng.bytes(1 + rng.uniform(40));
    }
    return d;
  }
};

TEST_F(ZksTest, EmptySetHasSoftRoot) {
  auto [com, state] = zks_commit(params, 8, {}, rng);
  EXPECT_EQ(state.node_count(), 1u);
  for (int i = 0; i < 10; ++i) {
    Key k = random_key(rng, 8);
    ZksAnswer a = zks_prove(params, state, k);
    EXPECT_FALSE(a.value.has_value());
    EXPECT_TRUE(zks_verify(params, 8, com, k, std::nullopt, a.proof));
  }
}

TEST_F(ZksTest, SingletonRoundTrip) {
  Key k = {0x5a};
  std::map<Key, Bytes> d = {{k, {9, 9}}};
  auto [com, state] = zks_commit(params, 8, d, rng);
  ZksAnswer a = zks_prove(params, state, k);
  ASSERT_TRUE(a.value.has_value());
  EXPECT_EQ(*a.value, (Bytes{9, 9}));
  EXPECT_TRUE(zks_verify(params, 8, com, k, a.value, a.proof));
  EXPECT_FALSE(zks_verify(params, 8, com, k, Bytes{9, 8}, a.proof));
  EXPECT_FALSE(zks_verify(params, 8, com, k, std::nullopt, a.proof));
}

TEST_F(ZksTest, RoundTripAtSeveralHeights) {
  for (size_t height : {8, 12, 16, 32}) {
    std::map<Key, Bytes> d = random_data(height == 8 ? 30 : 20, height);
    auto [com, state] = zks_commit(params, height, d, rng);
    for (const auto& [k, v] : d) {
      ZksAnswer a = zks_prove(params, state, k);
      ASSERT_EQ(a.value, v);
      EXPECT_TRUE(zks_verify(params, height, com, k, v, a.proof)) << height;
      EXPECT_EQ(a.proof.path.size(), height);
      EXPECT_EQ(a.proof.decommitments.size(), height + 1);
    }
    int absent = 0;
    while (absent < 25) {
      Key k = random_key(rng, height);
      if (d.count(k)) continue;
      ++absent;
      ZksAnswer a = zks_prove(params, state, k);
      EXPECT_FALSE(a.value.has_value());
      EXPECT_TRUE(zks_verify(params, height, com, k, std::nullopt, a.proof));
      EXPECT_FALSE(zks_verify(params, height, com, k, Bytes{}, a.proof));
      EXPECT_EQ(a.proof.path.size(), height);
    }
  }
}

TEST_F(ZksTest, RepeatedAbsentQueryIsIdentical) {
  std::map<Key, Bytes> d = random_data(5, 16);
  auto [com, state] = zks_commit(params, 16, d, rng);
  Key k = random_key(rng, 16);
  while (d.count(k)) k = random_key(rng, 16);
  ByteWriter a, b;
  write(a, zks_prove(params, state, k).proof);
  const size_t nodes = state.node_count();
  write(b, zks_prove(params, state, k).proof);
  EXPECT_EQ(a.data(), b.data());
  EXPECT_EQ(state.node_count(), nodes);
}

TEST_F(ZksTest, CommitmentSizeIndependentOfSetSize) {
  auto [small, s1] = zks_commit(params, 16, random_data(1, 16), rng);
  auto [large, s2] = zks_commit(params, 16, random_data(100, 16), rng);
  ByteWriter a, b;
  write(a, small.root);
  write(b, large.root);
  EXPECT_EQ(a.data().size(), b.data().size());
}

TEST_F(ZksTest, TwoCommitsDiffer) {
  std::map<Key, Bytes> d = random_data(3, 8);
  auto [a, sa] = zks_commit(params, 8, d, rng);
  auto [b, sb] = zks_commit(params, 8, d, rng);
  EXPECT_FALSE(a == b);
}

TEST_F(ZksTest, TamperedPathsReject) {
  std::map<Key, Bytes> d = random_data(6, 12);
  auto [com, state] = zks_commit(params, 12, d, rng);
  const Key member = d.begin()->first;
  ZksAnswer honest = zks_prove(params, state, member);
  auto [other, other_secret] = soft_commit(params, rng);
  for (size_t level = 0; level < 12; ++level) {
    for (int side = 0; side < 2; ++side) {
      ZksProof p = honest.proof;
      p.path[level][side] = other;
      EXPECT_FALSE(zks_verify(params, 12, com, member, honest.value, p));
    }
  }
  for (size_t depth = 0; depth <= 12; ++depth) {
    ZksProof p = honest.proof;
    p.decommitments[depth].r0 = p.decommitments[depth].r0 + Scalar::from_u64(1);
    EXPECT_FALSE(zks_verify(params, 12, com, member, honest.value, p));
    p = honest.proof;
    p.decommitments[depth].open = false;
    EXPECT_FALSE(zks_verify(params, 12, com, member, honest.value, p));
  }
  ZksProof shortened = honest.proof;
  shortened.path.pop_back();
  EXPECT_FALSE(zks_verify(params, 12, com, member, honest.value, shortened));
  // Proof for another key under the same commitment.
  const Key second = std::next(d.begin())->first;
  EXPECT_FALSE(zks_verify(params, 12, com, second, honest.value, honest.proof));
}

TEST_F(ZksTest, KeyLengthChecked) {
  auto [com, state] = zks_commit(params, 12, random_data(2, 12), rng);
  try {
    zks_prove(params, state, Key{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKeyLengthError);
  }
  EXPECT_THROW(zks_prove(params, state, Key{0, 0x0f}), Error);
  EXPECT_FALSE(zks_verify(params, 12, com, Key{1}, std::nullopt, {}));
}

TEST_F(ZksTest, SerializationRoundTrip) {
  std::map<Key, Bytes> d = random_data(4, 16);
  auto [com, state] = zks_commit(params, 16, d, rng);
  for (const Key& k : {d.begin()->first, Key{0, 0}}) {
    ZksAnswer a = zks_prove(params, state, k);
    ByteWriter w;
    write(w, a.proof);
    Bytes bytes = std::move(w).take();
    ByteReader r(bytes);
    ZksProof back = read_zks_proof(r, 16);
    r.expect_end();
    EXPECT_TRUE(zks_verify(params, 16, com, k, a.value, back));
    ByteWriter again;
    write(again, back);
    EXPECT_EQ(again.data(), bytes);
  }
}

TEST_F(ZksTest, SimulatorProofsVerify) {
  auto [p, trapdoor] = merc_setup(rng);
  ZksSimulator sim(p, trapdoor, 16, Rng::from_seed("zks-sim"));
  Key a = {0x12, 0x34}, b = {0x12, 0x35}, c = {0xff, 0x00};
  ZksProof pa = sim.prove(a, Bytes{1});
  ZksProof pb = sim.prove(b, std::nullopt);
  ZksProof pc = sim.prove(c, Bytes{2, 3});
  EXPECT_TRUE(zks_verify(p, 16, sim.commitment(), a, Bytes{1}, pa));
  EXPECT_TRUE(zks_verify(p, 16, sim.commitment(), b, std::nullopt, pb));
  EXPECT_TRUE(zks_verify(p, 16, sim.commitment(), c, Bytes{2, 3}, pc));
  ZksProof pa2 = sim.prove(a, Bytes{1});
  EXPECT_TRUE(zks_verify(p, 16, sim.commitment(), a, Bytes{1}, pa2));
}

}  // namespace
}  // namespace ordlist::zks

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
#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "ordlist/bilinear/aggregate.h"
#include "ordlist/common/bigint.h"
#include "ordlist/common/error.h"
#include "ordlist/ppal/ppal.h"
#include "ordlist/ppal/serialize.h"
#include "ordlist/ppal/simulator.h"

namespace ordlist::ppal {
namespace {

// Order of the BLS12-381 groups, written out so the oracle below does its
// exponent arithmetic without going through the library's scalar type.
const mpz_class kGroupOrder(
    "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001", 16);

mpz_class to_mpz(const Scalar& s) { return from_bytes(s.to_bytes()); }
Scalar from_mpz(const mpz_class& x) {
  mpz_class r = x % kGroupOrder;
  if (r < 0) r += kGroupOrder;
  return Scalar::reduce(to_fixed_bytes(r, 32));
}

mpz_class powmod(const mpz_class& b, unsigned long e) {
  mpz_class out;
  mpz_powm_ui(out.get_mpz_t(), b.get_mpz_t(), e, kGroupOrder.get_mpz_t());
  return out;
}

mpz_class invmod(const mpz_class& x) {
  mpz_class out;
  mpz_invert(out.get_mpz_t(), x.get_mpz_t(), kGroupOrder.get_mpz_t());
  return out;
}

std::vector<std::string> names(size_t n, const std::string& prefix = "item") {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

class PpalTest : public ::testing::Test {
 protected:
  bilinear::BilinearContext ctx;
  Rng rng = Rng::from_seed("ppal-unit");
};

TEST_F(PpalTest, SingleElementDigestMatchesFormulas) {
  SourceList list = SourceList::create({"A"});
  SetupResult s = setup(ctx, list, rng);
  const mpz_class sv = to_mpz(s.secret.s);
  const mpz_class r1 = to_mpz(s.server.order_auth[0]);
  G1 t = ctx.g1().pow(from_mpz(sv * r1));
  EXPECT_TRUE(s.server.members[0].witness == t);
  const Scalar v = s.secret.v;
  G1 expected_sigma_l = ctx.hash_nonce(s.nonce.omega).pow(v) *
                        ctx.hash_message(witness_message(t, "A")).pow(v);
  EXPECT_TRUE(s.client.list_signature == expected_sigma_l);
  EXPECT_TRUE(s.client.public_key_g1 == ctx.g1().pow(v));
}

TEST_F(PpalTest, DigestMatchesTrapdoorOracle) {
  const size_t n = 9;
  SourceList list = SourceList::create(names(n));
  SetupResult s = setup(ctx, list, rng);
  ASSERT_EQ(s.server.powers.size(), n + 1);
  ASSERT_EQ(s.server.members.size(), n);
  ASSERT_EQ(s.server.order_auth.size(), n);
  const mpz_class sv = to_mpz(s.secret.s);
  const Scalar v = s.secret.v;
  G1 sigma_l = ctx.hash_nonce(s.nonce.omega).pow(v);
  for (size_t i = 1; i <= n; ++i) {
    EXPECT_TRUE(s.server.powers[i] == ctx.g2().pow(from_mpz(powmod(sv, i))));
    const mpz_class ri = to_mpz(s.server.order_auth[i - 1]);
    G1 t = ctx.g1().pow(from_mpz(powmod(sv, i) * ri));
    EXPECT_TRUE(s.server.members[i - 1].witness == t) << i;
    G1 sig = ctx.hash_message(witness_message(t, list.at_rank(i))).pow(v);
    EXPECT_TRUE(s.server.members[i - 1].signature == sig) << i;
    sigma_l *= sig;
  }
  EXPECT_TRUE(s.server.powers[0] == ctx.g2());
  EXPECT_TRUE(s.client.list_signature == sigma_l);
  EXPECT_TRUE(s.nonce.salt == ctx.hash_nonce(s.nonce.omega).pow(v));
  std::vector<std::array<uint8_t, 32>> rs;
  for (const Scalar& r : s.server.order_auth) {
    EXPECT_FALSE(r.is_zero());
    rs.push_back(r.to_bytes());
  }
  std::sort(rs.begin(), rs.end());
  EXPECT_EQ(std::adjacent_find(rs.begin(), rs.end()), rs.end());
}

TEST_F(PpalTest, QueryMatchesTrapdoorOracle) {
  const size_t n = 8;
  SourceList list = SourceList::create(names(n));
  SetupResult s = setup(ctx, list, rng);
  std::vector<std::string> delta = {"item6", "item1", "item3"};
  QueryProof proof = query(ctx, s.server, list, delta);
  ASSERT_EQ(proof.order, (std::vector<std::string>{"item1", "item3", "item6"}));
  const mpz_class sv = to_mpz(s.secret.s);
  const std::vector<size_t> ranks = {2, 4, 7};
  for (size_t j = 0; j + 1 < ranks.size(); ++j) {
    const mpz_class r_lo = to_mpz(s.server.order_auth[ranks[j] - 1]);
    const mpz_class r_hi = to_mpz(s.server.order_auth[ranks[j + 1] - 1]);
    const mpz_class e = powmod(sv, ranks[j + 1] - ranks[j]) * invmod(r_lo) * r_hi;
    EXPECT_TRUE(proof.order_witnesses[j] == ctx.g2().pow(from_mpz(e)));
  }
  G1 lambda = ctx.hash_nonce(s.nonce.omega);
  G1 sigma_order;
  for (size_t rank = 1; rank <= n; ++rank) {
    const MemberAuth& m = s.server.members[rank - 1];
    if (std::find(ranks.begin(), ranks.end(), rank) != ranks.end()) {
      sigma_order *= m.signature;
    } else {
      lambda *= ctx.hash_message(witness_message(m.witness, list.at_rank(rank)));
    }
  }
  EXPECT_TRUE(proof.lambda == lambda);
  EXPECT_TRUE(proof.sigma_order == sigma_order);
  EXPECT_EQ(verify(ctx, s.client, delta, proof), Verdict::kAccept);
}

TEST_F(PpalTest, FullListAndSingletonQueries) {
  SourceList list = SourceList::create(names(5));
  SetupResult s = setup(ctx, list, rng);
  QueryProof full = query(ctx, s.server, list, list.elements());
  EXPECT_TRUE(full.lambda == ctx.hash_nonce(s.nonce.omega));
  EXPECT_EQ(verify(ctx, s.client, list.elements(), full), Verdict::kAccept);
  std::vector<std::string> one = {"item2"};
  QueryProof single = query(ctx, s.server, list, one);
  EXPECT_TRUE(single.order_witnesses.empty());
  EXPECT_EQ(verify(ctx, s.client, one, single), Verdict::kAccept);
}

TEST_F(PpalTest, TwoSetupsDifferAndBothVerify) {
  SourceList list = SourceList::create(names(4));
  SetupResult a = setup(ctx, list, rng);
  SetupResult b = setup(ctx, list, rng);
  EXPECT_NE(a.nonce.omega, b.nonce.omega);
  EXPECT_FALSE(a.client.list_signature == b.client.list_signature);
  std::vector<std::string> delta = {"item0", "item3"};
  EXPECT_EQ(verify(ctx, a.client, delta, query(ctx, a.server, list, delta)),
            Verdict::kAccept);
  EXPECT_EQ(verify(ctx, b.client, delta, query(ctx, b.server, list, delta)),
            Verdict::kAccept);
  // Lambda carried over from the other setup.
  QueryProof spliced = query(ctx, a.server, list, delta);
  spliced.lambda = query(ctx, b.server, list, delta).lambda;
  EXPECT_EQ(verify(ctx, a.client, delta, spliced), Verdict::kReject);
}

TEST_F(PpalTest, SetupRejectsBadLists) {
  EXPECT_THROW(SourceList::create({}), Error);
  try {
    SourceList::create({"x", "y", "x"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidList);
  }
}

TEST_F(PpalTest, QueryErrors) {
  SourceList list = SourceList::create(names(4));
  SetupResult s = setup(ctx, list, rng);
  auto code_of = [&](std::vector<std::string> delta) {
    try {
      query(ctx, s.server, list, delta);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code_of({"item1", "nope"}), ErrorCode::kNotMember);
  EXPECT_EQ(code_of({"item1", "item1"}), ErrorCode::kInvalidQuery);
  EXPECT_EQ(code_of({}), ErrorCode::kInvalidQuery);
  SourceList other = SourceList::create(names(5));
  EXPECT_EQ(code_of({"item1"}), ErrorCode::kIo);
  EXPECT_THROW(query(ctx, s.server, other, std::vector<std::string>{"item1"}),
               Error);
}

TEST_F(PpalTest, TamperedProofsReject) {
  SourceList list = SourceList::create(names(10));
  SetupResult s = setup(ctx, list, rng);
  std::vector<std::string> delta = {"item2", "item5", "item7"};
  const QueryProof honest = query(ctx, s.server, list, delta);
  ASSERT_EQ(verify(ctx, s.client, delta, honest), Verdict::kAccept);
  auto rejects = [&](QueryProof p) {
    return verify(ctx, s.client, delta, p) == Verdict::kReject;
  };
  QueryProof p = honest;
  std::swap(p.order[0], p.order[1]);
  EXPECT_TRUE(rejects(p));
  p = honest;
  std::swap(p.order[0], p.order[1]);
  std::swap(p.member_witnesses[0], p.member_witnesses[1]);
  EXPECT_TRUE(rejects(p));
  p = honest;
  p.member_witnesses[1] = p.member_witnesses[1] * ctx.g1();
  EXPECT_TRUE(rejects(p));
  p = honest;
  p.order_witnesses[0] = p.order_witnesses[0] * ctx.g2();
  EXPECT_TRUE(rejects(p));
  p = honest;
  p.sigma_order = p.sigma_order * s.server.members[4].signature.inverse();
  EXPECT_TRUE(rejects(p));
  p = honest;
  p.lambda = p.lambda * ctx.g1();
  EXPECT_TRUE(rejects(p));
  p = honest;
  p.order.pop_back();
  EXPECT_TRUE(rejects(p));
  p = honest;
  p.order_witnesses.push_back(ctx.g2());
  EXPECT_TRUE(rejects(p));
  p = honest;
  p.order[2] = "item8";
  EXPECT_TRUE(rejects(p));
}

TEST_F(PpalTest, VerifyUsesTwoMPlusTwoPairings) {
  SourceList list = SourceList::create(names(20));
  SetupResult s = setup(ctx, list, rng);
  for (size_t m : {1, 2, 7, 20}) {
    std::vector<std::string> delta(list.elements().begin(),
                                   list.elements().begin() + m);
    QueryProof p = query(ctx, s.server, list, delta);
    bilinear::reset_pairing_count();
    ASSERT_EQ(verify(ctx, s.client, delta, p), Verdict::kAccept);
    EXPECT_EQ(bilinear::pairing_count(), 2 * m + 2);
  }
}

TEST_F(PpalTest, VerifyHonoursMaxQuerySize) {
  SourceList list = SourceList::create(names(4));
  SetupResult s = setup(ctx, list, rng);
  QueryProof p = query(ctx, s.server, list, list.elements());
  EXPECT_EQ(verify(ctx, s.client, list.elements(), p, {.max_query_size = 3}),
            Verdict::kReject);
}

TEST(ProductTreeTest, MatchesNaiveProducts) {
  Rng rng = Rng::from_seed("tree");
  for (size_t n = 1; n <= 64; n = n < 8 ? n + 1 : n * 2 - 3) {
    std::vector<G1> leaves;
    for (size_t i = 0; i < n; ++i) {
      leaves.push_back(G1::generator().pow(Scalar::random(rng)));
    }
    ProductTree tree = ProductTree::from_leaves(leaves);
    G1 all;
    for (const G1& l : leaves) all *= l;
    EXPECT_TRUE(tree.root() == all) << n;
    for (size_t i = 1; i <= n; ++i) {
      G1 naive;
      for (size_t j = i; j <= n; ++j) {
        naive *= leaves[j - 1];
        size_t reads = 0;
        EXPECT_TRUE(tree.range_product(i, j, &reads) == naive) << n << " " << i << " " << j;
        EXPECT_LE(reads, 2 * (std::bit_width(tree.capacity()) + 1));
      }
    }
    EXPECT_THROW(tree.range_product(0, 1), Error);
    EXPECT_THROW(tree.range_product(1, n + 1), Error);
    if (n > 1) EXPECT_THROW(tree.range_product(2, 1), Error);
  }
}

TEST(ProductTreeTest, FourLeafLayout) {
  std::vector<G1> leaves;
  for (uint64_t i = 1; i <= 4; ++i) {
    leaves.push_back(G1::generator().pow(Scalar::from_u64(i)));
  }
  ProductTree tree = ProductTree::from_leaves(leaves);
  EXPECT_TRUE(tree.node(2) == leaves[0] * leaves[1]);
  EXPECT_TRUE(tree.node(3) == leaves[2] * leaves[3]);
  EXPECT_TRUE(tree.root() == G1::generator().pow(Scalar::from_u64(10)));
}

TEST(ProductTreeTest, ComplementProductAndReadBound) {
  Rng rng = Rng::from_seed("complement");
  const size_t n = 300;
  std::vector<G1> leaves;
  for (size_t i = 0; i < n; ++i) leaves.push_back(G1::generator().pow(Scalar::random(rng)));
  ProductTree tree = ProductTree::from_leaves(leaves);
  for (int trial = 0; trial < 30; ++trial) {
    const size_t m = 1 + rng.uniform(20);
    std::vector<size_t> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 1);
    std::shuffle(ranks.begin(), ranks.end(), rng);
    ranks.resize(m);
    std::sort(ranks.begin(), ranks.end());
    G1 naive;
    for (size_t r = 1; r <= n; ++r) {
      if (!std::binary_search(ranks.begin(), ranks.end(), r)) naive *= leaves[r - 1];
    }
    size_t reads = 0;
    EXPECT_TRUE(tree.complement_product(ranks, &reads) == naive);
    EXPECT_LE(reads, 4 * m * std::log2(double(n)));
  }
}

TEST_F(PpalTest, TreeAndLinearQueriesAgree) {
  SourceList list = SourceList::create(names(37));
  SetupResult s = setup(ctx, list, rng);
  ProductTree tree = ProductTree::build(ctx, s.server, list);
  std::vector<std::string> delta = {"item30", "item0", "item11", "item36"};
  QueryStats stats;
  QueryProof a = query(ctx, s.server, list, delta, &tree, &stats);
  QueryProof b = query(ctx, s.server, list, delta);
  EXPECT_EQ(encode(a), encode(b));
  EXPECT_GT(stats.tree_node_reads, 0u);
  EXPECT_LE(stats.tree_node_reads, 4 * delta.size() * std::log2(37.0));
}

TEST_F(PpalTest, SerializationRoundTrips) {
  SourceList list = SourceList::create(names(6));
  SetupResult s = setup(ctx, list, rng);
  EXPECT_EQ(encode(decode_client_digest(encode(s.client))), encode(s.client));
  EXPECT_EQ(encode(decode_server_digest(encode(s.server))), encode(s.server));
  std::vector<std::string> delta = {"item4", "item1"};
  QueryProof p = query(ctx, s.server, list, delta);
  Bytes bytes = encode(p);
  EXPECT_EQ(encode(decode_query_proof(bytes)), bytes);
  bytes.push_back(0);
  EXPECT_THROW(decode_query_proof(bytes), Error);
  EXPECT_THROW(decode_query_proof(Bytes{0, 0, 0, 0}), Error);
}

TEST_F(PpalTest, SimulatorProofsVerifyAndReuseWitnesses) {
  SourceList hidden = SourceList::create({"A", "B", "C", "D"});
  OrderOracle oracle = [&](std::span<const std::string> delta) {
    std::vector<std::string> out(delta.begin(), delta.end());
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
      return *hidden.rank_of(x) < *hidden.rank_of(y);
    });
    return out;
  };
  PpalSimulator sim(ctx, oracle, Rng::from_seed("sim"));
  std::vector<std::string> q1 = {"B", "A"};
  std::vector<std::string> q2 = {"C", "B"};
  QueryProof p1 = sim.query(q1);
  QueryProof p2 = sim.query(q2);
  EXPECT_EQ(verify(ctx, sim.digest(), q1, p1), Verdict::kAccept);
  EXPECT_EQ(verify(ctx, sim.digest(), q2, p2), Verdict::kAccept);
  EXPECT_TRUE(p1.member_witnesses[1] == p2.member_witnesses[0]);
  EXPECT_TRUE(*sim.member_witness("B") == p1.member_witnesses[1]);
  EXPECT_FALSE(sim.member_witness("D").has_value());
  QueryProof again = sim.query(q1);
  EXPECT_EQ(encode(again), encode(p1));
}

}  // namespace
}  // namespace ordlist::ppal

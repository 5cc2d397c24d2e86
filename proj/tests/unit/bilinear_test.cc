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

#include "ordlist/bilinear/aggregate.h"
#include "ordlist/bilinear/context.h"
#include "ordlist/common/error.h"

namespace ordlist::bilinear {
namespace {

TEST(Group, PairingIsBilinear) {
  Rng rng = Rng::from_seed("bilinear");
  for (int trial = 0; trial < 3; ++trial) {
    Scalar a = Scalar::random(rng);
    Scalar b = Scalar::random(rng);
    Gt lhs = pairing(G1::generator().pow(a), G2::generator().pow(b));
    Gt rhs = pairing(G1::generator(), G2::generator()).pow(a * b);
    EXPECT_TRUE(lhs == rhs);
  }
}

TEST(Group, PairingIsNondegenerate) {
  EXPECT_FALSE(pairing(G1::generator(), G2::generator()).is_identity());
  EXPECT_TRUE(pairing(G1::identity(), G2::generator()).is_identity());
}

TEST(Group, ScalarFieldArithmetic) {
  Rng rng = Rng::from_seed("scalar");
  Scalar x = Scalar::random_nonzero(rng);
  EXPECT_TRUE(x * x.inverse() == Scalar::from_u64(1));
  EXPECT_TRUE(x - x == Scalar());
  EXPECT_TRUE(x.pow(3) == x * x * x);
  EXPECT_TRUE(Scalar::from_bytes(x.to_bytes()) == x);
  std::array<uint8_t, 32> all_ones;
  all_ones.fill(0xff);
  EXPECT_THROW(Scalar::from_bytes(all_ones), Error);
}

TEST(Group, EncodingRoundTrip) {
  Rng rng = Rng::from_seed("enc");
  G1 p = G1::generator().pow(Scalar::random(rng));
  G2 q = G2::generator().pow(Scalar::random(rng));
  EXPECT_TRUE(G1::from_bytes(p.to_bytes()) == p);
  EXPECT_TRUE(G2::from_bytes(q.to_bytes()) == q);
  EXPECT_TRUE(G1::from_bytes(G1::identity().to_bytes()).is_identity());
  auto bad = p.to_bytes();
  bad[5] ^= 0x40;
  // Either not on the curve or, rarely, a valid point of a different value.
  try {
    EXPECT_FALSE(G1::from_bytes(bad) == p);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformed);
  }
}

TEST(Group, PairingCounter) {
  reset_pairing_count();
  pairing(G1::generator(), G2::generator());
  pairings_equal(G1::generator(), G2::generator(), G1::generator(),
                 G2::generator());
  EXPECT_EQ(pairing_count(), 3u);
}

class AggregateTest : public ::testing::Test {
 protected:
  BilinearContext ctx;
  Rng rng = Rng::from_seed("aggregate");
  KeyPair keys = generate_keypair(ctx, rng);
};

TEST_F(AggregateTest, SignatureVerifiesAgainstPairingEquation) {
  Bytes msg = {1, 2, 3};
  G1 sigma = sign_element(ctx, keys.secret, msg);
  EXPECT_TRUE(pairing(sigma, ctx.g2()) ==
              pairing(ctx.hash_message(msg), keys.public_key));
  EXPECT_TRUE(verify_signature(ctx, keys.public_key, msg, sigma));
  EXPECT_TRUE(sign_element(ctx, keys.secret, msg) == sigma);
}

TEST_F(AggregateTest, AggregateOfThree) {
  std::vector<Bytes> msgs = {{1}, {2}, {3}};
  std::vector<G1> sigs;
  G1 hash_product;
  for (const Bytes& m : msgs) {
    sigs.push_back(sign_element(ctx, keys.secret, m));
    hash_product *= ctx.hash_message(m);
  }
  G1 sigma = aggregate(sigs);
  // Independent check: a single pairing equation over the hash product.
  EXPECT_TRUE(pairing(sigma, ctx.g2()) == pairing(hash_product, keys.public_key));
  EXPECT_TRUE(aggregate_verify(ctx, keys.public_key, msgs, sigma));
  EXPECT_FALSE(aggregate_verify(ctx, keys.public_key, msgs, sigma * ctx.g1()));
  std::vector<G1> reversed(sigs.rbegin(), sigs.rend());
  EXPECT_TRUE(aggregate(reversed) == sigma);
  EXPECT_TRUE(aggregate(std::span(sigs).first(1)) == sigs[0]);
}

TEST_F(AggregateTest, RejectsDuplicatesAndEmpty) {
  std::vector<Bytes> msgs = {{7}, {7}};
  G1 s = sign_element(ctx, keys.secret, msgs[0]);
  EXPECT_FALSE(aggregate_verify(ctx, keys.public_key, msgs, s * s));
  EXPECT_THROW(aggregate(std::span<const G1>()), Error);
}

}  // namespace
}  // namespace ordlist::bilinear

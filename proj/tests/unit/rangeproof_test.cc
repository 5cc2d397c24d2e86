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

#include "ordlist/common/bigint.h"
#include "ordlist/common/error.h"
#include "ordlist/rangeproof/nonneg.h"

namespace ordlist::rangeproof {
namespace {

using intcom::Commitment;
using intcom::Opening;

TEST(FourSquares, SmallValues) {
  Rng rng = Rng::from_seed("fs");
  EXPECT_EQ(four_square_decompose(0, rng).sum(), 0);
  FourSquares seven = four_square_decompose(7, rng);
  EXPECT_EQ(seven.sum(), 7);
  for (const auto& w : seven.w) EXPECT_LE(w, 3);  // ceil(sqrt(7))
  EXPECT_THROW(four_square_decompose(-1, rng), Error);
  EXPECT_THROW(four_squares_rabin_shallit(-5, rng), Error);
}

TEST(FourSquares, EveryValueBelowTenThousand) {
  Rng rng = Rng::from_seed("fs-all");
  for (long x = 0; x < 10000; ++x) {
    SCOPED_TRACE(x);
    FourSquares a = four_squares_exhaustive(x);
    ASSERT_EQ(a.sum(), x) << x;
    FourSquares b = four_squares_rabin_shallit(x, rng);
    ASSERT_EQ(b.sum(), x);
    for (int i = 0; i < 4; ++i) {
      ASSERT_GE(a.w[i], 0);
      ASSERT_GE(b.w[i], 0);
    }
  }
}

TEST(FourSquares, LargeValues) {
  Rng rng = Rng::from_seed("fs-large");
  for (int i = 0; i < 200; ++i) {
    mpz_class x = random_bits(rng, 1 + rng.uniform(300));
    if (i % 10 == 0) x <<= 2 * rng.uniform(20);
    FourSquares f = four_square_decompose(x, rng);
    EXPECT_EQ(f.sum(), x);
  }
}

class NonNegTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    Rng rng = Rng::from_seed("nn-params");
    intcom::SetupOptions o;
    o.modulus_bits = 512;
    params_ = new intcom::Params(intcom::setup(o, rng).first);
  }
  static void TearDownTestSuite() { delete params_; }
  const intcom::Params& params() const { return *params_; }
  static intcom::Params* params_;
  Rng rng = Rng::from_seed("nn");
};
intcom::Params* NonNegTest::params_ = nullptr;

TEST_F(NonNegTest, CompletenessOnBoundaryAndRandomValues) {
  std::vector<mpz_class> xs = {0, 1, 2, 17, params().message_bound};
  for (int i = 0; i < 40; ++i) xs.push_back(random_bits(rng, 64));
  for (const mpz_class& x : xs) {
    auto [c, o] = intcom::commit(params(), x, rng);
    NnProof proof = nn_prove(params(), c, o, rng);
    EXPECT_TRUE(nn_verify(params(), c, proof)) << x.get_str();
  }
}

TEST_F(NonNegTest, PreconditionErrors) {
  auto [cn, on] = intcom::commit(params(), -1, rng);
  try {
    nn_prove(params(), cn, on, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeWitness);
  }
  auto [c, o] = intcom::commit(params(), 3, rng);
  Opening wrong = o;
  wrong.x = 4;
  try {
    nn_prove(params(), c, wrong, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidOpening);
  }
  auto [c0, o0] = intcom::commit(params(), 0, rng);
  try {
    positive_prove(params(), c0, o0, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPositiveWitness);
  }
}

TEST_F(NonNegTest, TamperedResponsesReject) {
  auto [c, o] = intcom::commit(params(), 12345, rng);
  const NnProof honest = nn_prove(params(), c, o, rng);
  ASSERT_TRUE(nn_verify(params(), c, honest));
  for (int i = 0; i < 4; ++i) {
    NnProof p = honest;
    p.m2[i] += 1;
    EXPECT_FALSE(nn_verify(params(), c, p));
    p = honest;
    p.r4[i] += 1;
    EXPECT_FALSE(nn_verify(params(), c, p));
    p = honest;
    p.c1[i].value = p.c1[i].value * params().g % params().modulus;
    EXPECT_FALSE(nn_verify(params(), c, p));
    p = honest;
    p.c2[i].value = p.c2[i].value * params().h % params().modulus;
    EXPECT_FALSE(nn_verify(params(), c, p));
  }
  NnProof p = honest;
  p.r5 += 1;
  EXPECT_FALSE(nn_verify(params(), c, p));
  p = honest;
  p.c3.value = p.c3.value * params().h % params().modulus;
  EXPECT_FALSE(nn_verify(params(), c, p));
}

TEST_F(NonNegTest, ProofIsBoundToCommitmentAndContext) {
  auto [c, o] = intcom::commit(params(), 5, rng);
  auto [c2, o2] = intcom::commit(params(), 5, rng);
  Bytes ctx = {1, 2, 3};
  NnProof proof = nn_prove(params(), c, o, rng, ctx);
  EXPECT_TRUE(nn_verify(params(), c, proof, ctx));
  EXPECT_FALSE(nn_verify(params(), c2, proof, ctx));
  EXPECT_FALSE(nn_verify(params(), c, proof));
  EXPECT_FALSE(nn_verify(params(), c, proof, Bytes{1, 2, 4}));
}

TEST_F(NonNegTest, ChallengeIsInRange) {
  auto [c, o] = intcom::commit(params(), 9, rng);
  NnProof proof = nn_prove(params(), c, o, rng);
  mpz_class e = nn_challenge(params(), c, proof, {});
  EXPECT_GE(e, 0);
  EXPECT_LT(e, params().challenge_bound);
}

TEST_F(NonNegTest, DeterministicGivenRandomness) {
  auto [c, o] = intcom::commit(params(), 77, rng);
  Rng a = Rng::from_seed("same");
  Rng b = Rng::from_seed("same");
  ByteWriter wa, wb;
  write(wa, nn_prove(params(), c, o, a));
  write(wb, nn_prove(params(), c, o, b));
  EXPECT_EQ(wa.data(), wb.data());
}

TEST_F(NonNegTest, NegativeWitnessForgeriesReject) {
  for (int trial = 0; trial < 25; ++trial) {
    mpz_class x = -mpz_class(1 + rng.uniform(1000000));
    auto [c, o] = intcom::commit(params(), x, rng);
    // Best effort for a cheater: roots of |x|, or of a nearby value.
    FourSquares roots = four_square_decompose(mpz_class(trial % 2 ? mpz_class(-x) : mpz_class(-x - 1)), rng);
    NnProof proof = nn_prove_unchecked(params(), c, o.r, roots, rng);
    EXPECT_FALSE(nn_verify(params(), c, proof));
  }
}

TEST_F(NonNegTest, PositivityShift) {
  for (long x : {1, 2, 1000}) {
    auto [c, o] = intcom::commit(params(), x, rng);
    NnProof proof = positive_prove(params(), c, o, rng);
    EXPECT_TRUE(positive_verify(params(), c, proof));
    EXPECT_FALSE(nn_verify(params(), c, proof));
  }
  // x = 0 pushed through: c / g commits to -1.
  auto [c0, o0] = intcom::commit(params(), 0, rng);
  Commitment shifted = intcom::divide(params(), c0, {params().g});
  for (int trial = 0; trial < 10; ++trial) {
    FourSquares roots = four_square_decompose(trial, rng);
    NnProof forged = nn_prove_unchecked(params(), shifted, o0.r, roots, rng);
    EXPECT_FALSE(positive_verify(params(), c0, forged));
  }
}

TEST_F(NonNegTest, SerializationFieldOrder) {
  auto [c, o] = intcom::commit(params(), 31, rng);
  NnProof proof = nn_prove(params(), c, o, rng);
  ByteWriter w;
  write(w, proof);
  Bytes bytes = std::move(w).take();
  ByteReader r(bytes);
  EXPECT_EQ(read_nn_proof(r, params()), proof);
  r.expect_end();
  // The first field is c11, as a length-prefixed big-endian integer.
  ByteReader head(bytes);
  EXPECT_EQ(read_unsigned(head, 1 << 16), proof.c1[0].value);
  for (int i = 1; i < 4; ++i) EXPECT_EQ(read_unsigned(head, 1 << 16), proof.c1[i].value);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(read_unsigned(head, 1 << 16), proof.c2[i].value);
  EXPECT_EQ(read_unsigned(head, 1 << 16), proof.c3.value);
  EXPECT_EQ(read_signed(head, 1 << 16), proof.m2[0]);
}

}  // namespace
}  // namespace ordlist::rangeproof

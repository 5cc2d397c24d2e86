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

#include <chrono>

#include "ordlist/common/bigint.h"
#include "ordlist/common/error.h"
#include "ordlist/intcom/intcom.h"

namespace ordlist::intcom {
namespace {

// Plain square-and-multiply, kept separate from the library's powm path.
mpz_class oracle_pow(mpz_class base, mpz_class e, const mpz_class& n) {
  if (e < 0) {
    mpz_invert(base.get_mpz_t(), base.get_mpz_t(), n.get_mpz_t());
    e = -e;
  }
  mpz_class acc = 1;
  base %= n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = acc * base % n;
    base = base * base % n;
    e >>= 1;
  }
  return acc;
}

mpz_class oracle_commit(const Params& p, const mpz_class& x, const mpz_class& r) {
  return oracle_pow(p.g, x, p.modulus) * oracle_pow(p.h, r, p.modulus) % p.modulus;
}

SetupOptions test_options() {
  SetupOptions o;
  o.modulus_bits = 512;
  return o;
}

class IntcomTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    Rng rng = Rng::from_seed("intcom-params");
    auto [p, t] = setup(test_options(), rng);
    params_ = new Params(p);
    trapdoor_ = new Trapdoor(t);
  }
  static void TearDownTestSuite() {
    delete params_;
    delete trapdoor_;
  }
  const Params& params() const { return *params_; }
  const Trapdoor& trapdoor() const { return *trapdoor_; }
  Rng rng = Rng::from_seed("intcom");

  static Params* params_;
  static Trapdoor* trapdoor_;
};
Params* IntcomTest::params_ = nullptr;
Trapdoor* IntcomTest::trapdoor_ = nullptr;

TEST(SafePrime, IsSafe) {
  Rng rng = Rng::from_seed("safe");
  for (size_t bits : {32, 128, 256}) {
    mpz_class p = random_safe_prime(bits, rng);
    EXPECT_EQ(bit_length(p), bits);
    EXPECT_NE(mpz_probab_prime_p(p.get_mpz_t(), 40), 0);
    mpz_class q = (p - 1) / 2;
    EXPECT_NE(mpz_probab_prime_p(q.get_mpz_t(), 40), 0);
  }
}

TEST(FrozenVector, TinyModulus) {
  // N = 23 * 47, h = 4, g = h^3. Values computed independently.
  Params p;
  p.modulus = 1081;
  p.h = 4;
  p.g = 64;
  EXPECT_EQ(commit_with(p, 5, 7).value, 576);
  EXPECT_EQ(commit_with(p, -3, -2).value, 1036);
  EXPECT_TRUE(verify_open(p, {576}, {5, 7, 1}));
  EXPECT_FALSE(verify_open(p, {576}, {6, 7, 1}));
}

TEST_F(IntcomTest, SetupRelations) {
  const Params& p = params();
  EXPECT_EQ(bit_length(p.modulus), 512u);
  EXPECT_EQ(p.order_bits, 512u);
  EXPECT_EQ(oracle_pow(p.h, trapdoor().dlog, p.modulus), p.g);
  EXPECT_EQ(oracle_pow(p.h, trapdoor().group_order, p.modulus), 1);
  EXPECT_LT(trapdoor().group_order, pow2(p.order_bits));
  Rng other = Rng::from_seed("intcom-params-2");
  auto [p2, t2] = setup(test_options(), other);
  EXPECT_NE(p2.modulus, p.modulus);
  EXPECT_NE(p2.h, p.h);
}

TEST_F(IntcomTest, CommitMatchesOracleAndRoundTrips) {
  for (int i = 0; i < 200; ++i) {
    mpz_class x = mpz_class(random_bits(rng, 64));
    if (i % 2) x = -x;
    auto [c, o] = commit(params(), x, rng);
    EXPECT_EQ(o.b, 1);
    EXPECT_LT(o.r, pow2(params().order_bits + params().statistical_bits));
    EXPECT_EQ(c.value, oracle_commit(params(), x, o.r));
    EXPECT_TRUE(verify_open(params(), c, o));
    Opening bad = o;
    bad.x += 1;
    EXPECT_FALSE(verify_open(params(), c, bad));
  }
  auto [c0, o0] = commit(params(), 0, rng);
  EXPECT_TRUE(verify_open(params(), c0, o0));
}

TEST_F(IntcomTest, MessageBound) {
  EXPECT_NO_THROW(commit(params(), params().message_bound, rng));
  try {
    commit(params(), params().message_bound + 1, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMessageTooLarge);
  }
}

TEST_F(IntcomTest, Homomorphism) {
  auto [c5, o5] = commit(params(), 5, rng);
  auto [c7, o7] = commit(params(), 7, rng);
  Commitment c12 = combine(params(), c5, c7);
  Opening o12 = combine(params(), o5, o7);
  EXPECT_EQ(o12.x, 12);
  EXPECT_EQ(o12.r, o5.r + o7.r);
  EXPECT_TRUE(verify_open(params(), c12, o12));

  Commitment self = divide(params(), c5, c5);
  Opening zero = divide(params(), o5, o5);
  EXPECT_EQ(zero.x, 0);
  EXPECT_EQ(zero.r, 0);
  EXPECT_EQ(self.value, 1);
  EXPECT_TRUE(verify_open(params(), self, zero));

  // C(j) / (C(i) C(1)) opens to j - i - 1.
  auto [ci, oi] = commit(params(), 3, rng);
  auto [cj, oj] = commit(params(), 9, rng);
  auto [c1, o1] = commit(params(), 1, rng);
  Commitment gap = divide(params(), cj, combine(params(), ci, c1));
  Opening gap_open = divide(params(), oj, combine(params(), oi, o1));
  EXPECT_EQ(gap_open.x, 5);
  EXPECT_TRUE(verify_open(params(), gap, gap_open));
}

TEST_F(IntcomTest, NonTrivialUnitAccepted) {
  // N - 1 squares to 1, so (x, r, N - 1) opens c * (N - 1).
  auto [c, o] = commit(params(), 11, rng);
  mpz_class b = params().modulus - 1;
  Commitment shifted{c.value * b % params().modulus};
  EXPECT_TRUE(verify_open(params(), shifted, {11, o.r, b}));
  EXPECT_FALSE(verify_open(params(), shifted, o));
  EXPECT_FALSE(verify_open(params(), c, {11, o.r, 2}));
}

TEST_F(IntcomTest, DivideByNonUnitIsDegenerate) {
  try {
    divide(params(), Commitment{5}, Commitment{params().modulus});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateElement);
  }
}

TEST_F(IntcomTest, Equivocation) {
  auto [c, o] = commit(params(), 0, rng);
  Opening to42 = equivocate(params(), trapdoor(), o, 42);
  EXPECT_EQ(to42.x, 42);
  EXPECT_TRUE(verify_open(params(), c, to42));
  Opening same = equivocate(params(), trapdoor(), o, 0);
  EXPECT_EQ(same.x, 0);
  EXPECT_TRUE(verify_open(params(), c, same));
  Opening five = equivocate(params(), trapdoor(), o, 5);
  Opening minus3 = equivocate(params(), trapdoor(), five, -3);
  EXPECT_TRUE(verify_open(params(), c, five));
  EXPECT_TRUE(verify_open(params(), c, minus3));
}

TEST_F(IntcomTest, HidingSampleMeansMatch) {
  // Smoke test only: mean of the commitment value over many draws, scaled
  // to [0, 1), should be near 1/2 for both messages.
  const int draws = 10000;
  double mean0 = 0, mean1 = 0;
  mpf_class n(params().modulus, 64);
  for (int i = 0; i < draws; ++i) {
    mean0 += mpf_class(mpf_class(commit(params(), 0, rng).first.value, 64) / n).get_d();
    mean1 += mpf_class(mpf_class(commit(params(), 1, rng).first.value, 64) / n).get_d();
  }
  mean0 /= draws;
  mean1 /= draws;
  // Standard error of a uniform mean over 10^4 draws is about 0.003.
  EXPECT_NEAR(mean0, mean1, 0.02);
}

TEST_F(IntcomTest, SerializationRoundTrips) {
  ByteWriter w;
  write(w, params());
  auto [c, o] = commit(params(), -77, rng);
  write(w, c);
  write(w, o);
  Bytes bytes = std::move(w).take();
  ByteReader r(bytes);
  Params p = read_params(r);
  EXPECT_EQ(p, params());
  EXPECT_EQ(read_commitment(r, p), c);
  EXPECT_EQ(read_opening(r), o);
  r.expect_end();
}

TEST(IntcomSetup, TestProfileIsFast) {
  Rng rng = Rng::from_seed("fast");
  auto start = std::chrono::steady_clock::now();
  setup(test_options(), rng);
  auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 10.0);
}

}  // namespace
}  // namespace ordlist::intcom

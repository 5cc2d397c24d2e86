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

#include "ordlist/rangeproof/four_squares.h"

#include <algorithm>

#include "ordlist/common/bigint.h"
#include "ordlist/common/error.h"

namespace ordlist::rangeproof {

namespace {

constexpr unsigned long kExhaustiveLimit = 1000000;

bool is_square(const mpz_class& x, mpz_class* root) {
  if (x < 0) return false;
  if (mpz_perfect_square_p(x.get_mpz_t()) == 0) return false;
  *root = isqrt(x);
  return true;
}

// Writes a prime p = 1 mod 4 (or p in {1, 2}) as u^2 + v^2.
bool split_prime(const mpz_class& p, Rng& rng, mpz_class* u, mpz_class* v) {
  if (p == 1) {
    *u = 1;
    *v = 0;
    return true;
  }
  if (p == 2) {
    *u = 1;
    *v = 1;
    return true;
  }
  const mpz_class exponent = (p - 1) / 4;
  const mpz_class minus_one = p - 1;
  mpz_class root;
  for (int attempt = 0; attempt < 64; ++attempt) {
    mpz_class z = 2 + random_below(rng, p - 3);
    mpz_powm(root.get_mpz_t(), z.get_mpz_t(), exponent.get_mpz_t(),
             p.get_mpz_t());
    if (root * root % p == minus_one) break;
    root = 0;
  }
  if (root == 0) return false;
  // Euclid on (p, root) until the remainder drops below sqrt(p).
  mpz_class a = p, b = root;
  const mpz_class limit = isqrt(p);
  while (b > limit) {
    mpz_class t = a % b;
    a = b;
    b = t;
  }
  mpz_class rest = p - b * b;
  mpz_class c;
  if (!is_square(rest, &c)) return false;
  *u = b;
  *v = c;
  return true;
}

}  // namespace

mpz_class FourSquares::sum() const {
  return w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
}

FourSquares four_squares_exhaustive(const mpz_class& x) {
  ORDLIST_ENFORCE(x >= 0, ErrorCode::kNegativeInput, "negative input");
  FourSquares out;
  mpz_class d;
  // With a >= b >= c >= d the largest root carries at least a quarter of x,
  // which bounds each loop from below.
  for (mpz_class a = isqrt(x); 4 * a * a >= x; --a) {
    const mpz_class r1 = x - a * a;
    for (mpz_class b = std::min(a, mpz_class(isqrt(r1))); 3 * b * b >= r1; --b) {
      const mpz_class r2 = r1 - b * b;
      for (mpz_class c = std::min(b, mpz_class(isqrt(r2))); 2 * c * c >= r2;
           --c) {
        const mpz_class r3 = r2 - c * c;
        if (is_square(r3, &d) && d <= c) {
          out.w = {a, b, c, d};
          return out;
        }
        if (c == 0) break;
      }
      if (b == 0) break;
    }
    if (a == 0) break;
  }
  throw Error(ErrorCode::kNegativeInput, "no decomposition found");  // unreachable
}

FourSquares four_squares_rabin_shallit(const mpz_class& x, Rng& rng) {
  ORDLIST_ENFORCE(x >= 0, ErrorCode::kNegativeInput, "negative input");
  FourSquares out;
  if (x == 0) return out;
  size_t v = 0;
  mpz_class y = x;
  while (mpz_divisible_2exp_p(y.get_mpz_t(), 2)) {
    y >>= 2;
    ++v;
  }
  // After stripping powers of 4, y mod 4 is 1, 2 or 3. Pick the parities of
  // a and b so that y - a^2 - b^2 = 1 mod 4.
  const unsigned long y_mod4 = mpz_fdiv_ui(y.get_mpz_t(), 4);
  const int odd_count = y_mod4 == 1 ? 0 : (y_mod4 == 2 ? 1 : 2);
  const mpz_class root = isqrt(y);
  mpz_class a, b, p, u, w;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    a = random_below(rng, root + 1);
    if (mpz_odd_p(a.get_mpz_t()) != (odd_count >= 1)) {
      a += a > 0 ? -1 : 1;
    }
    mpz_class rest = y - a * a;
    if (rest < 0) continue;
    b = random_below(rng, isqrt(rest) + 1);
    if (mpz_odd_p(b.get_mpz_t()) != (odd_count == 2)) {
      b += b > 0 ? -1 : 1;
    }
    p = rest - b * b;
    if (p < 1) continue;
    if (p > 2 && mpz_probab_prime_p(p.get_mpz_t(), 25) == 0) continue;
    if (!split_prime(p, rng, &u, &w)) continue;
    out.w = {a << v, b << v, u << v, w << v};
    return out;
  }
  throw Error(ErrorCode::kNegativeInput,
              "randomized four-squares search did not converge");
}

FourSquares four_square_decompose(const mpz_class& x, Rng& rng) {
  ORDLIST_ENFORCE(x >= 0, ErrorCode::kNegativeInput, "negative input");
  if (x < kExhaustiveLimit) return four_squares_exhaustive(x);
  return four_squares_rabin_shallit(x, rng);
}

}  // namespace ordlist::rangeproof

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

#include "ordlist/intcom/intcom.h"

#include <array>
#include <vector>

#include "ordlist/common/bigint.h"
#include "ordlist/common/error.h"

namespace ordlist::intcom {

namespace {

constexpr size_t kMaxIntegerBytes = 1u << 16;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    constexpr unsigned kLimit = 1 << 16;
    std::vector<bool> composite(kLimit, false);
    std::vector<unsigned> out;
    for (unsigned i = 3; i < kLimit; i += 2) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned j = i * 3; j < kLimit; j += 2 * i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

mpz_class mod(const mpz_class& a, const mpz_class& n) {
  mpz_class out;
  mpz_mod(out.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return out;
}

mpz_class random_unit(const mpz_class& n, Rng& rng) {
  for (;;) {
    mpz_class u = random_below(rng, n);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), n.get_mpz_t());
    if (u > 1 && g == 1) return u;
  }
}

}  // namespace

mpz_class random_safe_prime(size_t bits, Rng& rng) {
  ORDLIST_ENFORCE(bits >= 16, ErrorCode::kIndexError, "safe prime too small");
  const auto& primes = small_primes();
  std::vector<unsigned> residues(primes.size());
  for (;;) {
    // q has bits-1 bits, top bit set, q = 1 mod 2.
    mpz_class q = random_bits(rng, bits - 1);
    mpz_setbit(q.get_mpz_t(), bits - 2);
    mpz_setbit(q.get_mpz_t(), 0);
    for (size_t i = 0; i < primes.size(); ++i) {
      residues[i] = mpz_fdiv_ui(q.get_mpz_t(), primes[i]);
    }
    // Walk q upward in steps of 2 for a while, sieving both q and 2q + 1.
    for (unsigned step = 0; step < (1u << 16); step += 2) {
      bool survives = true;
      for (size_t i = 0; i < primes.size() && survives; ++i) {
        const unsigned p = primes[i];
        const unsigned rq = (residues[i] + step) % p;
        if (p >= (1u << (bits > 32 ? 31 : bits - 2))) break;
        survives = rq != 0 && (2 * rq + 1) % p != 0;
      }
      if (!survives) continue;
      mpz_class candidate = q + step;
      if (bit_length(candidate) != bits - 1) break;
      if (mpz_probab_prime_p(candidate.get_mpz_t(), 2) == 0) continue;
      mpz_class p = 2 * candidate + 1;
      if (mpz_probab_prime_p(p.get_mpz_t(), 2) == 0) continue;
      if (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0 ||
          mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
        continue;
      }
      return p;
    }
  }
}

std::pair<Params, Trapdoor> setup(const SetupOptions& options, Rng& rng) {
  ORDLIST_ENFORCE(options.modulus_bits >= 64 && options.modulus_bits % 2 == 0,
                  ErrorCode::kIndexError, "modulus size must be even and >= 64");
  const size_t half = options.modulus_bits / 2;
  mpz_class p, q, n;
  do {
    p = random_safe_prime(half, rng);
    q = random_safe_prime(half, rng);
    n = p * q;
  } while (p == q || bit_length(n) != options.modulus_bits);

  Params params;
  Trapdoor trapdoor;
  params.modulus = n;
  params.order_bits = options.modulus_bits;
  params.statistical_bits = options.statistical_bits;
  params.message_bound = pow2(options.message_bound_bits);
  params.challenge_bound = pow2(options.challenge_bits);
  const mpz_class pp = (p - 1) / 2;
  const mpz_class qq = (q - 1) / 2;
  trapdoor.group_order = pp * qq;

  // h must generate all of QR_N, i.e. have order p'q'.
  for (;;) {
    mpz_class u = random_unit(n, rng);
    mpz_class h = mod(u * u, n);
    mpz_class hp, hq;
    mpz_powm(hp.get_mpz_t(), h.get_mpz_t(), pp.get_mpz_t(), n.get_mpz_t());
    mpz_powm(hq.get_mpz_t(), h.get_mpz_t(), qq.get_mpz_t(), n.get_mpz_t());
    if (hp != 1 && hq != 1) {
      params.h = h;
      break;
    }
  }
  trapdoor.dlog =
      random_bits(rng, options.modulus_bits + options.statistical_bits);
  mpz_powm(params.g.get_mpz_t(), params.h.get_mpz_t(),
           trapdoor.dlog.get_mpz_t(), n.get_mpz_t());
  return {params, trapdoor};
}

mpz_class power(const Params& params, const mpz_class& base,
                const mpz_class& exponent) {
  const mpz_class& n = params.modulus;
  mpz_class out;
  if (exponent >= 0) {
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
             n.get_mpz_t());
    return out;
  }
  mpz_class inv;
  ORDLIST_ENFORCE(
      mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), n.get_mpz_t()) != 0,
      ErrorCode::kDegenerateElement, "element shares a factor with the modulus");
  mpz_class e = -exponent;
  mpz_powm(out.get_mpz_t(), inv.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
  return out;
}

Commitment commit_with(const Params& params, const mpz_class& x,
                       const mpz_class& r) {
  return {mod(power(params, params.g, x) * power(params, params.h, r),
              params.modulus)};
}

std::pair<Commitment, Opening> commit(const Params& params, const mpz_class& x,
                                      Rng& rng) {
  ORDLIST_ENFORCE(abs(x) <= params.message_bound, ErrorCode::kMessageTooLarge,
                  "message exceeds the commitment bound");
  Opening o{x, random_bits(rng, params.order_bits + params.statistical_bits), 1};
  return {commit_with(params, x, o.r), o};
}

bool verify_open(const Params& params, const Commitment& c,
                 const Opening& opening) {
  const mpz_class& n = params.modulus;
  if (c.value <= 0 || c.value >= n) return false;
  if (opening.b <= 0 || opening.b >= n) return false;
  if (mod(opening.b * opening.b, n) != 1) return false;
  try {
    mpz_class expected = mod(commit_with(params, opening.x, opening.r).value *
                                 opening.b,
                             n);
    return expected == c.value;
  } catch (const Error&) {
    return false;
  }
}

Commitment combine(const Params& params, const Commitment& a,
                   const Commitment& b) {
  return {mod(a.value * b.value, params.modulus)};
}

Commitment divide(const Params& params, const Commitment& a,
                  const Commitment& b) {
  return {mod(a.value * power(params, b.value, -1), params.modulus)};
}

Opening combine(const Params& params, const Opening& a, const Opening& b) {
  return {a.x + b.x, a.r + b.r, mod(a.b * b.b, params.modulus)};
}

Opening divide(const Params& params, const Opening& a, const Opening& b) {
  // b^-1 = b since b^2 = 1.
  return {a.x - b.x, a.r - b.r, mod(a.b * b.b, params.modulus)};
}

Opening equivocate(const Params& params, const Trapdoor& trapdoor,
                   const Opening& opening, const mpz_class& target) {
  (void)params;
  mpz_class r = mod(opening.r + trapdoor.dlog * (opening.x - target),
                    trapdoor.group_order);
  return {target, r, opening.b};
}

void write(ByteWriter& w, const Params& params) {
  write_unsigned(w, params.modulus);
  write_unsigned(w, params.g);
  write_unsigned(w, params.h);
  write_unsigned(w, params.challenge_bound);
  w.u32(static_cast<uint32_t>(params.order_bits));
  w.u32(static_cast<uint32_t>(params.statistical_bits));
  write_unsigned(w, params.message_bound);
}

Params read_params(ByteReader& r) {
  Params p;
  p.modulus = read_unsigned(r, kMaxIntegerBytes);
  p.g = read_unsigned(r, kMaxIntegerBytes);
  p.h = read_unsigned(r, kMaxIntegerBytes);
  p.challenge_bound = read_unsigned(r, kMaxIntegerBytes);
  p.order_bits = r.u32();
  p.statistical_bits = r.u32();
  p.message_bound = read_unsigned(r, kMaxIntegerBytes);
  ORDLIST_ENFORCE(p.modulus > 3 && p.g > 0 && p.g < p.modulus && p.h > 0 &&
                      p.h < p.modulus,
                  ErrorCode::kMalformed, "commitment parameters out of range");
  ORDLIST_ENFORCE(p.order_bits >= bit_length(p.modulus) - 1 &&
                      p.order_bits <= 8 * kMaxIntegerBytes &&
                      p.statistical_bits <= 4096 &&
                      bit_length(p.challenge_bound) <= 4096 &&
                      bit_length(p.message_bound) <= 4096,
                  ErrorCode::kMalformed, "commitment parameter sizes out of range");
  return p;
}

void write(ByteWriter& w, const Commitment& c) { write_unsigned(w, c.value); }

Commitment read_commitment(ByteReader& r, const Params& params) {
  Commitment c{read_unsigned(r, kMaxIntegerBytes)};
  ORDLIST_ENFORCE(c.value > 0 && c.value < params.modulus, ErrorCode::kMalformed,
                  "commitment outside [1, N)");
  return c;
}

void write(ByteWriter& w, const Opening& o) {
  write_signed(w, o.x);
  write_signed(w, o.r);
  write_unsigned(w, o.b);
}

Opening read_opening(ByteReader& r) {
  Opening o;
  o.x = read_signed(r, kMaxIntegerBytes);
  o.r = read_signed(r, kMaxIntegerBytes);
  o.b = read_unsigned(r, kMaxIntegerBytes);
  return o;
}

}  // namespace ordlist::intcom

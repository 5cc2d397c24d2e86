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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. Pass criterion numbers as arguments to
// run a subset, e.g. `ordlist_acceptance 1 5 12`.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordlist/bilinear/group.h"
#include "ordlist/cli/bench.h"
#include "ordlist/cli/cli.h"
#include "ordlist/common/error.h"
#include "ordlist/intcom/intcom.h"
#include "ordlist/io/container.h"
#include "ordlist/ppal/ppal.h"
#include "ordlist/ppal/product_tree.h"
#include "ordlist/ppal/serialize.h"
#include "ordlist/ppal/simulator.h"
#include "ordlist/rangeproof/four_squares.h"
#include "ordlist/rangeproof/nonneg.h"
#include "ordlist/zkl/zkl.h"
#include "ordlist/zks/zks.h"

namespace {

using namespace ordlist;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Distinct random names of varying length.
std::vector<std::string> random_names(size_t n, Rng& rng) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string s = "e";
    const size_t len = 1 + rng.uniform(12);
    for (size_t i = 0; i < len; ++i) s.push_back(static_cast<char>('a' + rng.uniform(26)));
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

// m distinct elements of list in random order.
std::vector<std::string> random_sublist(const std::vector<std::string>& list, size_t m,
                                        Rng& rng) {
  std::vector<std::string> pool = list;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(m);
  return pool;
}

std::vector<std::string> sorted_by_rank(const SourceList& list,
                                        std::span<const std::string> delta) {
  std::vector<std::string> out;
  for (const auto& x : delta) {
    if (list.contains(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return *list.rank_of(a) < *list.rank_of(b);
  });
  return out;
}

const bilinear::BilinearContext kCtx;

// ---- PPAL ----

Outcome ppal_completeness(Rng& rng) {
  // 50 lists with 20 sublists each. Query sizes are mostly small so the run
  // stays short; every tenth query asks for the whole list.
  const auto start = Clock::now();
  size_t trials = 0, accepted = 0, wrong_order = 0;
  for (int l = 0; l < 50; ++l) {
    const size_t n = l == 0 ? 512 : 1 + rng.uniform(512);
    SourceList list = SourceList::create(random_names(n, rng));
    ppal::SetupResult s = ppal::setup(kCtx, list, rng);
    ppal::ProductTree tree = ppal::ProductTree::build(kCtx, s.server, list);
    for (int q = 0; q < 20; ++q, ++trials) {
      const size_t m = q % 10 == 9 ? n : 1 + rng.uniform(std::min<size_t>(n, 24));
      std::vector<std::string> delta = random_sublist(list.elements(), m, rng);
      const bool use_tree = q % 2 == 0;
      ppal::QueryProof p =
          ppal::query(kCtx, s.server, list, delta, use_tree ? &tree : nullptr);
      if (p.order != sorted_by_rank(list, delta)) ++wrong_order;
      if (ppal::verify(kCtx, s.client, delta, p) == ppal::Verdict::kAccept) ++accepted;
    }
  }
  return {accepted == trials && wrong_order == 0,
          fmt("%zu/%zu accepted, %zu wrong orders, %.1f s", accepted, trials, wrong_order,
              ms_since(start) / 1000)};
}

Outcome ppal_soundness(Rng& rng) {
  size_t trials = 0, rejected = 0;
  std::map<std::string, size_t> by_kind;
  auto record = [&](const char* kind, bool rejects) {
    ++trials;
    ++by_kind[kind];
    if (rejects) ++rejected;
  };
  for (int round = 0; round < 25; ++round) {
    const size_t n = 4 + rng.uniform(60);
    SourceList list = SourceList::create(random_names(n, rng));
    ppal::SetupResult a = ppal::setup(kCtx, list, rng);
    ppal::SetupResult b = ppal::setup(kCtx, list, rng);
    for (int t = 0; t < 5; ++t) {
      const size_t m = 2 + rng.uniform(std::min<size_t>(n - 1, 12));
      std::vector<std::string> delta = random_sublist(list.elements(), m, rng);
      const ppal::QueryProof honest = ppal::query(kCtx, a.server, list, delta);
      auto rejects = [&](const ppal::ClientDigest& d, std::span<const std::string> q,
                         const ppal::QueryProof& p) {
        return ppal::verify(kCtx, d, q, p) == ppal::Verdict::kReject;
      };
      if (rejects(a.client, delta, honest)) return {false, "honest proof rejected"};

      // Adjacent swap, moving the member witnesses along with the elements.
      ppal::QueryProof p = honest;
      const size_t j = rng.uniform(m - 1);
      std::swap(p.order[j], p.order[j + 1]);
      std::swap(p.member_witnesses[j], p.member_witnesses[j + 1]);
      record("swap", rejects(a.client, delta, p));

      // Mutated witness: member or order witness multiplied by a random power.
      p = honest;
      const bilinear::Scalar e = bilinear::Scalar::random(rng);
      if (rng.uniform(2) == 0) {
        auto& w = p.member_witnesses[rng.uniform(m)];
        w = w * kCtx.g1().pow(e);
      } else {
        auto& w = p.order_witnesses[rng.uniform(m - 1)];
        w = w * kCtx.g2().pow(e);
      }
      record("witness", rejects(a.client, delta, p));

      // Splice across two setups of the same list.
      const ppal::QueryProof other = ppal::query(kCtx, b.server, list, delta);
      switch (rng.uniform(4)) {
        case 0:
          p = honest;
          p.lambda = other.lambda;
          break;
        case 1:
          p = honest;
          p.member_witnesses = other.member_witnesses;
          p.order_witnesses = other.order_witnesses;
          break;
        case 2:
          p = honest;
          p.sigma_order = other.sigma_order;
          break;
        default:
          p = other;
          break;
      }
      record("splice", rejects(a.client, delta, p));

      // Strip one element: drop it from the proof and from sigma_order, and
      // present the shortened query.
      p = honest;
      const size_t k = rng.uniform(m);
      const std::string gone = p.order[k];
      p.sigma_order = p.sigma_order * a.server.members[*list.rank_of(gone) - 1].signature.inverse();
      p.order.erase(p.order.begin() + k);
      p.member_witnesses.erase(p.member_witnesses.begin() + k);
      p.order_witnesses.erase(p.order_witnesses.begin() + std::min(k, m - 2));
      std::vector<std::string> shorter;
      for (const auto& x : delta) {
        if (x != gone) shorter.push_back(x);
      }
      record("strip", rejects(a.client, shorter, p) && rejects(a.client, delta, p));
    }
  }
  std::string kinds;
  for (const auto& [k, v] : by_kind) kinds += fmt(" %s=%zu", k.c_str(), v);
  return {rejected == trials && trials == 500,
          fmt("%zu/%zu rejected;%s", rejected, trials, kinds.c_str())};
}

Outcome ppal_proof_size(Rng& rng) {
  const std::vector<size_t> ms = {1, 4, 16, 64};
  std::map<size_t, std::map<size_t, size_t>> bytes;  // n -> m -> size
  for (size_t n : {64, 4096}) {
    SourceList list = SourceList::create(cli::bench_list(n));
    ppal::SetupResult s = ppal::setup(kCtx, list, rng);
    ppal::ProductTree tree = ppal::ProductTree::build(kCtx, s.server, list);
    for (size_t m : ms) {
      std::vector<std::string> delta = random_sublist(list.elements(), m, rng);
      bytes[n][m] = ppal::encode(ppal::query(kCtx, s.server, list, delta, &tree)).size();
    }
  }
  bool same = true;
  for (size_t m : ms) same = same && bytes[64][m] == bytes[4096][m];
  // Fit a and b on the first two points, then check the rest.
  const auto& row = bytes[64];
  const long a = (static_cast<long>(row.at(4)) - static_cast<long>(row.at(1))) / 3;
  const long b = static_cast<long>(row.at(1)) - a;
  bool linear = a > 0;
  for (size_t m : ms) linear = linear && static_cast<long>(row.at(m)) == a * static_cast<long>(m) + b;
  return {same && linear,
          fmt("size = %ld*m + %ld; m=1,4,16,64 -> %zu,%zu,%zu,%zu; n-independent=%s", a, b,
              row.at(1), row.at(4), row.at(16), row.at(64), same ? "yes" : "no")};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

Outcome ppal_scaling(Rng& rng) {
  const size_t m = 16;
  std::map<size_t, std::pair<double, double>> t;  // n -> (pretree, linear)
  for (size_t n : {size_t{1} << 10, size_t{1} << 16}) {
    SourceList list = SourceList::create(cli::bench_list(n));
    ppal::SetupResult s = ppal::setup(kCtx, list, rng);
    ppal::ProductTree tree = ppal::ProductTree::build(kCtx, s.server, list);
    std::vector<double> pre, lin;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::string> delta = random_sublist(list.elements(), m, rng);
      auto start = Clock::now();
      ppal::query(kCtx, s.server, list, delta, &tree);
      pre.push_back(ms_since(start));
      if (trial < 3) {
        start = Clock::now();
        ppal::query(kCtx, s.server, list, delta, nullptr);
        lin.push_back(ms_since(start));
      }
    }
    t[n] = {median(pre), median(lin)};
  }
  const auto& [p10, l10] = t[size_t{1} << 10];
  const auto& [p16, l16] = t[size_t{1} << 16];
  const double pre_ratio = p16 / p10, lin_ratio = l16 / l10;
  return {pre_ratio <= 8 && lin_ratio >= 32,
          fmt("pretree %.2f -> %.2f ms (x%.2f, need <= 8); linear %.1f -> %.1f ms (x%.1f, "
              "need >= 32)",
              p10, p16, pre_ratio, l10, l16, lin_ratio)};
}

Outcome ppal_pairing_count(Rng& rng) {
  SourceList list = SourceList::create(random_names(128, rng));
  ppal::SetupResult s = ppal::setup(kCtx, list, rng);
  std::string seen;
  bool ok = true;
  for (size_t m : {1, 2, 3, 8, 17, 64, 128}) {
    std::vector<std::string> delta = random_sublist(list.elements(), m, rng);
    ppal::QueryProof p = ppal::query(kCtx, s.server, list, delta);
    bilinear::reset_pairing_count();
    const bool accepted = ppal::verify(kCtx, s.client, delta, p) == ppal::Verdict::kAccept;
    const uint64_t count = bilinear::pairing_count();
    ok = ok && accepted && count == 2 * m + 2;
    seen += fmt(" m=%zu:%llu", m, static_cast<unsigned long long>(count));
  }
  return {ok, "pairings per verify" + seen};
}

Outcome ppal_simulator(Rng& rng) {
  SourceList hidden = SourceList::create(random_names(100, rng));
  ppal::OrderOracle oracle = [&](std::span<const std::string> delta) {
    return sorted_by_rank(hidden, delta);
  };
  ppal::PpalSimulator sim(kCtx, oracle, rng.fork("ppal-sim"));
  // Queries drawn from a small pool so they overlap heavily.
  std::vector<std::string> pool(hidden.elements().begin(), hidden.elements().begin() + 30);
  std::map<std::string, std::array<uint8_t, bilinear::G1::kBytes>> first_seen;
  size_t accepted = 0, reused = 0, mismatched = 0;
  for (int q = 0; q < 200; ++q) {
    std::vector<std::string> delta = random_sublist(pool, 1 + rng.uniform(10), rng);
    ppal::QueryProof p = sim.query(delta);
    if (ppal::verify(kCtx, sim.digest(), delta, p) == ppal::Verdict::kAccept) ++accepted;
    for (size_t i = 0; i < p.order.size(); ++i) {
      auto bytes = p.member_witnesses[i].to_bytes();
      auto [it, inserted] = first_seen.emplace(p.order[i], bytes);
      if (!inserted) (it->second == bytes ? reused : mismatched)++;
    }
  }
  return {accepted == 200 && mismatched == 0 && reused > 0,
          fmt("%zu/200 accepted; %zu witness reuses, %zu mismatches", accepted, reused,
              mismatched)};
}

// ---- integer commitments and range proofs ----

std::pair<intcom::Params, intcom::Trapdoor> test_params(Rng& rng) {
  intcom::SetupOptions options;
  options.modulus_bits = zkl::Profile::insecure_test().modulus_bits;
  return intcom::setup(options, rng);
}

mpz_class random_signed(Rng& rng, unsigned bits) {
  mpz_class v = rng.next_u64() >> (64 - bits);
  return rng.uniform(2) ? mpz_class(-v) : v;
}

Outcome intcom_homomorphism(Rng& rng) {
  auto [params, trapdoor] = test_params(rng);
  size_t sums = 0, diffs = 0, equivocations = 0;
  for (int i = 0; i < 1000; ++i) {
    const mpz_class x = random_signed(rng, 62), y = random_signed(rng, 62);
    auto [cx, ox] = intcom::commit(params, x, rng);
    auto [cy, oy] = intcom::commit(params, y, rng);
    intcom::Opening sum = intcom::combine(params, ox, oy);
    intcom::Opening diff = intcom::divide(params, ox, oy);
    if (sum.x == x + y && intcom::verify_open(params, intcom::combine(params, cx, cy), sum)) {
      ++sums;
    }
    if (diff.x == x - y && intcom::verify_open(params, intcom::divide(params, cx, cy), diff)) {
      ++diffs;
    }
  }
  for (int i = 0; i < 100; ++i) {
    auto [c, o] = intcom::commit(params, random_signed(rng, 63), rng);
    const mpz_class target = random_signed(rng, 63);
    intcom::Opening e = intcom::equivocate(params, trapdoor, o, target);
    if (e.x == target && intcom::verify_open(params, c, e)) ++equivocations;
  }
  return {sums == 1000 && diffs == 1000 && equivocations == 100,
          fmt("combine %zu/1000, divide %zu/1000, equivocate %zu/100", sums, diffs,
              equivocations)};
}

Outcome range_proofs(Rng& rng) {
  // Brute-force oracle: the exhaustive search must find a representation
  // whenever one exists, which by Lagrange is always.
  size_t identity_ok = 0;
  for (long x = 0; x < 10000; ++x) {
    const mpz_class X = x;
    rangeproof::FourSquares a = rangeproof::four_squares_exhaustive(X);
    rangeproof::FourSquares b = rangeproof::four_squares_rabin_shallit(X, rng);
    rangeproof::FourSquares c = rangeproof::four_square_decompose(X, rng);
    auto exact = [&](const rangeproof::FourSquares& f) {
      mpz_class s = 0;
      for (const auto& w : f.w) s += w * w;
      return s == X && f.sum() == X;
    };
    if (exact(a) && exact(b) && exact(c)) ++identity_ok;
  }
  auto [params, trapdoor] = test_params(rng);
  size_t complete = 0;
  for (int i = 0; i < 500; ++i) {
    mpz_class x = rng.next_u64() >> 24;
    if (i == 0) x = 0;
    if (i == 1) x = (mpz_class(1) << 40);
    auto [c, o] = intcom::commit(params, x, rng);
    rangeproof::NnProof proof = rangeproof::nn_prove(params, c, o, rng);
    if (rangeproof::nn_verify(params, c, proof)) ++complete;
  }
  size_t forged = 0;
  for (int i = 0; i < 100; ++i) {
    const mpz_class x = -mpz_class(1 + rng.uniform(uint64_t{1} << 40));
    auto [c, o] = intcom::commit(params, x, rng);
    // Roots of |x|, |x| - 1 or a random value: the cheater's best guesses.
    mpz_class fake = i % 3 == 0 ? mpz_class(-x) : i % 3 == 1 ? mpz_class(-x - 1)
                                                              : mpz_class(rng.uniform(1u << 30));
    rangeproof::FourSquares roots = rangeproof::four_square_decompose(fake, rng);
    rangeproof::NnProof proof = rangeproof::nn_prove_unchecked(params, c, o.r, roots, rng);
    if (rangeproof::nn_verify(params, c, proof)) ++forged;
  }
  return {identity_ok == 10000 && complete == 500 && forged == 0,
          fmt("four-squares identity %zu/10000; nn complete %zu/500; negative forgeries "
              "accepted %zu/100",
              identity_ok, complete, forged)};
}

// ---- ZKS and ZKL ----

Outcome zks_round_trip(Rng& rng) {
  const size_t height = 16;
  auto [params, trapdoor] = zks::merc_setup(rng);
  auto random_key = [&] { return rng.bytes(height / 8); };
  std::map<zks::Key, Bytes> data;
  while (data.size() < 100) data.emplace(random_key(), rng.bytes(1 + rng.uniform(40)));
  auto [com, state] = zks::zks_commit(params, height, data, rng);
  size_t members = 0, absent = 0;
  for (const auto& [k, v] : data) {
    zks::ZksAnswer a = zks::zks_prove(params, state, k);
    if (a.value == v && zks::zks_verify(params, height, com, k, v, a.proof)) ++members;
  }
  for (int i = 0; i < 100;) {
    zks::Key k = random_key();
    if (data.count(k)) continue;
    ++i;
    zks::ZksAnswer a = zks::zks_prove(params, state, k);
    if (!a.value && zks::zks_verify(params, height, com, k, std::nullopt, a.proof)) ++absent;
  }
  auto com_size = [&](size_t n) {
    std::map<zks::Key, Bytes> d;
    while (d.size() < n) d.emplace(random_key(), Bytes{1, 2, 3});
    ByteWriter w;
    zks::write(w, zks::zks_commit(params, height, d, rng).first.root);
    return w.data().size();
  };
  const size_t s1 = com_size(1), s100 = com_size(100);
  return {members == 100 && absent == 100 && s1 == s100,
          fmt("members %zu/100, absent %zu/100, commitment bytes |D|=1: %zu, |D|=100: %zu",
              members, absent, s1, s100)};
}

const zkl::PublicKey& zkl_pk() {
  static const zkl::PublicKey pk = [] {
    Rng rng = Rng::from_seed("acceptance-zkl-pk");
    return zkl::zkl_setup(zkl::Profile::insecure_test(), rng).first;
  }();
  return pk;
}

// Random list whose element keys do not collide in the 16-bit test tree,
// plus absent names that avoid every member key.
std::pair<SourceList, std::vector<std::string>> zkl_list(size_t n, size_t absent, Rng& rng) {
  const size_t h = zkl_pk().height;
  std::set<Bytes> keys;
  std::vector<std::string> members, others;
  for (const std::string& s : random_names(4 * (n + absent), rng)) {
    const bool want_member = members.size() < n;
    if (!want_member && others.size() >= absent) break;
    if (!keys.insert(zkl::element_key(s, h)).second) continue;
    (want_member ? members : others).push_back(s);
  }
  return {SourceList::create(members), others};
}

Outcome zkl_end_to_end(Rng& rng) {
  const zkl::PublicKey& pk = zkl_pk();
  size_t accepted = 0, correct = 0;
  for (int t = 0; t < 200; ++t) {
    const size_t n = 1 + rng.uniform(64);
    auto [list, absent] = zkl_list(n, 4, rng);
    auto [com, state] = zkl::zkl_commit(pk, list, rng);
    std::vector<std::string> delta =
        random_sublist(list.elements(), 1 + rng.uniform(std::min<size_t>(n, 8)), rng);
    for (size_t i = 0; i < rng.uniform(3); ++i) delta.push_back(absent[i]);
    std::shuffle(delta.begin(), delta.end(), rng);
    zkl::Query q{delta, t % 2 ? zkl::Flag::kOrder : zkl::Flag::kMembership};
    zkl::Response r = zkl::zkl_query(pk, state, q, rng);
    ByteWriter w;
    zkl::write(w, pk, r);
    ByteReader reader(w.data());
    zkl::Response parsed = zkl::read_response(reader, pk);
    if (zkl::zkl_verify(pk, com, q, parsed) == zkl::Verdict::kAccept) ++accepted;
    bool ok = parsed.member.size() == delta.size();
    for (size_t i = 0; ok && i < delta.size(); ++i) ok = parsed.member[i] == list.contains(delta[i]);
    if (q.flag == zkl::Flag::kOrder) {
      ok = ok && parsed.order && parsed.order->order == sorted_by_rank(list, delta);
    } else {
      ok = ok && !parsed.order;
    }
    if (ok) ++correct;
  }

  // Cheating prover: every element committed to the same rank, so no gap
  // is positive. Try to forge the order proof anyway.
  size_t cheats_accepted = 0;
  for (int t = 0; t < 100; ++t) {
    auto [list, absent] = zkl_list(2 + rng.uniform(6), 0, rng);
    const mpz_class rank = 1 + rng.uniform(1000);
    auto [com, state] = zkl::zkl_commit_with_ranks(
        pk, list, std::vector<mpz_class>(list.size(), rank), rng);
    std::vector<std::string> delta = random_sublist(list.elements(), 2, rng);
    zkl::Query q{delta, zkl::Flag::kOrder};
    try {
      zkl::zkl_query(pk, state, q, rng);
      ++cheats_accepted;  // the honest prover must refuse to prove a false gap
      continue;
    } catch (const Error&) {
    }
    zkl::Response r = zkl::zkl_query(pk, state, {delta, zkl::Flag::kMembership}, rng);
    r.flag = zkl::Flag::kOrder;
    zkl::OrderSection sec;
    sec.order = sorted_by_rank(list, delta);
    auto [one, one_open] = intcom::commit(pk.commit, 1, rng);
    sec.one = one;
    sec.one_opening = one_open;
    const zkl::RankEntry* lo = state.entry(sec.order[0]);
    const zkl::RankEntry* hi = state.entry(sec.order[1]);
    intcom::Commitment gap = intcom::divide(pk.commit, hi->commitment,
                                            intcom::combine(pk.commit, lo->commitment, one));
    const mpz_class rho = hi->opening.r - lo->opening.r - one_open.r;
    rangeproof::FourSquares roots =
        rangeproof::four_square_decompose(t % 2 ? mpz_class(0) : mpz_class(1), rng);
    sec.gaps = {rangeproof::nn_prove_unchecked(pk.commit, gap, rho, roots, rng,
                                               zkl::gap_context(com, sec.order[0], sec.order[1]))};
    r.order = sec;
    if (zkl::zkl_verify(pk, com, q, r) == zkl::Verdict::kAccept) ++cheats_accepted;
  }

  // The worked example: {B, D, A} against [A, B, C].
  auto [com, state] = zkl::zkl_commit(pk, SourceList::create({"A", "B", "C"}), rng);
  zkl::Query example{{"B", "D", "A"}, zkl::Flag::kOrder};
  zkl::Response r = zkl::zkl_query(pk, state, example, rng);
  const bool example_ok = zkl::zkl_verify(pk, com, example, r) == zkl::Verdict::kAccept &&
                          r.member == std::vector<bool>{true, false, true} && r.order &&
                          r.order->order == std::vector<std::string>{"A", "B"};

  return {accepted == 200 && correct == 200 && cheats_accepted == 0 && example_ok,
          fmt("%zu/200 accepted, %zu/200 correct answers; cheating order proofs accepted "
              "%zu/100; worked example %s",
              accepted, correct, cheats_accepted, example_ok ? "ok" : "WRONG")};
}

Outcome zkl_simulator(Rng& rng) {
  auto [hidden, absent] = zkl_list(40, 40, rng);
  zkl::ListOracle oracle;
  oracle.contains = [&](const std::string& x) { return hidden.contains(x); };
  oracle.order = [&](const std::vector<std::string>& delta) {
    return sorted_by_rank(hidden, delta);
  };
  zkl::ZklSimulator sim(zkl::Profile::insecure_test(), oracle, rng.fork("zkl-sim"));
  std::vector<std::string> pool = hidden.elements();
  pool.insert(pool.end(), absent.begin(), absent.end());
  size_t accepted = 0;
  for (int q = 0; q < 100; ++q) {
    zkl::Query query{random_sublist(pool, 1 + rng.uniform(6), rng),
                     q % 2 ? zkl::Flag::kOrder : zkl::Flag::kMembership};
    zkl::Response r = sim.query(query);
    if (zkl::zkl_verify(sim.public_key(), sim.commitment(), query, r) ==
        zkl::Verdict::kAccept) {
      ++accepted;
    }
  }
  return {accepted == 100, fmt("%zu/100 simulated responses accepted", accepted)};
}

// ---- CLI fuzz ----

struct FuzzTarget {
  io::Kind kind;
  Bytes container;
  std::vector<std::string> verify_args;  // with "{}" where the file goes
};

Bytes mutate(const Bytes& in, Rng& rng) {
  Bytes out = in;
  switch (rng.uniform(6)) {
    case 0:  // flip a few bits
      for (size_t i = 0, k = 1 + rng.uniform(4); i < k; ++i) {
        out[rng.uniform(out.size())] ^= static_cast<uint8_t>(1u << rng.uniform(8));
      }
      break;
    case 1:  // overwrite a byte
      out[rng.uniform(out.size())] = static_cast<uint8_t>(rng.uniform(256));
      break;
    case 2:  // truncate
      out.resize(rng.uniform(out.size()));
      break;
    case 3: {  // insert random bytes
      Bytes extra = rng.bytes(1 + rng.uniform(16));
      out.insert(out.begin() + rng.uniform(out.size() + 1), extra.begin(), extra.end());
      break;
    }
    case 4: {  // oversized length prefix at a random offset
      const size_t at = rng.uniform(out.size());
      for (size_t i = 0; i < 4 && at + i < out.size(); ++i) out[at + i] = 0xff;
      break;
    }
    default: {  // duplicate a chunk
      const size_t a = rng.uniform(out.size());
      const size_t len = 1 + rng.uniform(std::min<size_t>(64, out.size() - a));
      Bytes chunk(out.begin() + a, out.begin() + a + len);
      out.insert(out.begin() + rng.uniform(out.size() + 1), chunk.begin(), chunk.end());
      break;
    }
  }
  return out;
}

Outcome cli_fuzz(Rng& rng) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / fmt("ordlist_fuzz_%llu",
      static_cast<unsigned long long>(rng.next_u64()));
  fs::create_directories(dir);
  auto path = [&](const char* name) { return (dir / name).string(); };
  auto write_text = [&](const char* name, const std::string& text) {
    io::write_file(path(name), Bytes(text.begin(), text.end()));
  };
  std::ostringstream sink;
  auto run = [&](std::vector<std::string> args) {
    args.insert(args.begin(), "ordlist");
    sink.str("");
    return cli::run_cli(args, sink, sink);
  };

  write_text("list", "alpha\nbravo\ncharlie\ndelta\necho\nfoxtrot\ngolf\nhotel\n");
  write_text("query", "golf\nbravo\necho\n");
  write_text("mquery", "golf\nzulu\nbravo\n");
  int rc = run({"ppal", "setup", "--list", path("list"), "--client-out", path("c"),
                "--server-out", path("s"), "--seed", "f0"});
  rc |= run({"ppal", "query", "--server", path("s"), "--list", path("list"), "--query",
             path("query"), "--out", path("proof")});
  rc |= run({"zkl", "setup", "--out", path("pk"), "--seed", "f1", "--insecure-test-profile"});
  rc |= run({"zkl", "commit", "--pk", path("pk"), "--list", path("list"), "--com-out",
             path("com"), "--state-out", path("st"), "--seed", "f2"});
  rc |= run({"zkl", "query", "--pk", path("pk"), "--state", path("st"), "--query",
             path("query"), "--flag", "order", "--out", path("oresp"), "--seed", "f3"});
  rc |= run({"zkl", "query", "--pk", path("pk"), "--state", path("st"), "--query",
             path("mquery"), "--flag", "member", "--out", path("mresp"), "--seed", "f4"});
  if (rc != 0) return {false, "could not prepare fuzz inputs"};

  std::vector<FuzzTarget> targets = {
      {io::Kind::kQueryProof, io::read_file(path("proof")),
       {"ppal", "verify", "--client", path("c"), "--query", path("query"), "--proof", "{}"}},
      {io::Kind::kClientDigest, io::read_file(path("c")),
       {"ppal", "verify", "--client", "{}", "--query", path("query"), "--proof", path("proof")}},
      {io::Kind::kZklResponse, io::read_file(path("oresp")),
       {"zkl", "verify", "--pk", path("pk"), "--com", path("com"), "--query", path("query"),
        "--flag", "order", "--response", "{}"}},
      {io::Kind::kZklResponse, io::read_file(path("mresp")),
       {"zkl", "verify", "--pk", path("pk"), "--com", path("com"), "--query", path("mquery"),
        "--flag", "member", "--response", "{}"}},
  };
  // Sanity: the unmutated inputs verify.
  for (FuzzTarget& t : targets) {
    io::write_file(path("target"), t.container);
    std::vector<std::string> args = t.verify_args;
    for (auto& a : args) {
      if (a == "{}") a = path("target");
    }
    if (run(args) != cli::kExitAccept) return {false, "unmutated input rejected"};
  }

  std::map<int, size_t> codes;
  size_t raw = 0, resealed = 0, escaped = 0;
  for (int i = 0; i < 10000; ++i) {
    FuzzTarget& t = targets[rng.uniform(targets.size())];
    Bytes mutated;
    do {
      if (i % 2 == 0) {
        mutated = mutate(t.container, rng);
      } else {
        // Valid container around a damaged payload, so the decoders and
        // verifiers see the damage.
        Bytes payload = io::unseal(t.container, t.kind);
        mutated = io::seal(t.kind, payload.empty() ? payload : mutate(payload, rng));
      }
    } while (mutated == t.container);
    (i % 2 == 0 ? raw : resealed)++;
    io::write_file(path("target"), mutated);
    std::vector<std::string> args = t.verify_args;
    for (auto& a : args) {
      if (a == "{}") a = path("target");
    }
    int code;
    try {
      code = run(args);
    } catch (...) {
      ++escaped;
      continue;
    }
    ++codes[code];
  }
  fs::remove_all(dir);

  const size_t clean = codes[cli::kExitReject] + codes[cli::kExitMalformed];
  std::string breakdown;
  for (const auto& [c, n] : codes) breakdown += fmt(" exit%d=%zu", c, n);
  return {clean == 10000 && escaped == 0,
          fmt("%zu raw + %zu resealed mutations;%s; escaped exceptions %zu", raw, resealed,
              breakdown.c_str(), escaped)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome(Rng&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "ppal-completeness", ppal_completeness},
      {2, "ppal-soundness", ppal_soundness},
      {3, "ppal-proof-size", ppal_proof_size},
      {4, "ppal-server-scaling", ppal_scaling},
      {5, "ppal-verify-pairings", ppal_pairing_count},
      {6, "ppal-simulator", ppal_simulator},
      {7, "intcom-homomorphism", intcom_homomorphism},
      {8, "four-squares-and-nonneg", range_proofs},
      {9, "zks-round-trip", zks_round_trip},
      {10, "zkl-end-to-end", zkl_end_to_end},
      {11, "zkl-simulator", zkl_simulator},
      {12, "cli-fuzz", cli_fuzz},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  const Rng root = Rng::from_seed("ordlist-acceptance");
  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Rng rng = root.fork(c.name);
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run(rng);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": "
              << o.detail << fmt(" (%.1f s)", ms_since(start) / 1000) << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

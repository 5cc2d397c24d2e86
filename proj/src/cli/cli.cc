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

#include "ordlist/cli/cli.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>

#include "ordlist/cli/bench.h"
#include "ordlist/common/error.h"
#include "ordlist/io/container.h"
#include "ordlist/ppal/ppal.h"
#include "ordlist/ppal/serialize.h"
#include "ordlist/zkl/zkl.h"

namespace ordlist::cli {

namespace {

constexpr size_t kStateSeedBytes = 32;

// ORDLIST_SEED wins over --seed; no seed at all means OS entropy.
Rng make_rng(const std::string& seed_flag, std::string_view purpose) {
  std::string hex = seed_flag;
  if (const char* env = std::getenv("ORDLIST_SEED"); env && *env) hex = env;
  if (hex.empty()) return Rng::from_os();
  Bytes seed;
  try {
    seed = from_hex(hex);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidList, "seed must be hexadecimal");
  }
  return Rng::from_seed(seed).fork(purpose);
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIo:
      return kExitIo;
    case ErrorCode::kNotMember:
      return kExitNotMember;
    case ErrorCode::kMalformed:
      return kExitMalformed;
    default:
      return kExitInvalidInput;
  }
}

Bytes load(const std::string& path, io::Kind kind) {
  return io::unseal(io::read_file(path), kind);
}

void store(const std::string& path, io::Kind kind, ByteSpan payload) {
  io::write_file(path, io::seal(kind, payload));
}

// ---- PPAL ----

struct PpalSetupArgs {
  std::string list, client_out, server_out, seed;
};

int ppal_setup(const PpalSetupArgs& a) {
  SourceList list = SourceList::create(io::read_lines(a.list));
  Rng rng = make_rng(a.seed, "ppal-setup");
  ppal::SetupResult s = ppal::setup(bilinear::BilinearContext{}, list, rng);
  store(a.client_out, io::Kind::kClientDigest, ppal::encode(s.client));
  store(a.server_out, io::Kind::kServerDigest, ppal::encode(s.server));
  return kExitAccept;
}

struct PpalQueryArgs {
  std::string server, list, query, out;
  bool no_pretree = false;
};

int ppal_query(const PpalQueryArgs& a) {
  bilinear::BilinearContext ctx;
  SourceList list = SourceList::create(io::read_lines(a.list));
  std::vector<std::string> delta = io::read_lines(a.query);
  ppal::ServerDigest digest =
      ppal::decode_server_digest(load(a.server, io::Kind::kServerDigest));
  std::optional<ppal::ProductTree> tree;
  if (!a.no_pretree) tree = ppal::ProductTree::build(ctx, digest, list);
  ppal::QueryProof proof =
      ppal::query(ctx, digest, list, delta, tree ? &*tree : nullptr);
  store(a.out, io::Kind::kQueryProof, ppal::encode(proof));
  return kExitAccept;
}

struct PpalVerifyArgs {
  std::string client, query, proof;
};

int ppal_verify(const PpalVerifyArgs& a, std::ostream& out) {
  std::vector<std::string> delta = io::read_lines(a.query);
  ppal::ClientDigest digest =
      ppal::decode_client_digest(load(a.client, io::Kind::kClientDigest));
  ppal::QueryProof proof = ppal::decode_query_proof(load(a.proof, io::Kind::kQueryProof));
  if (ppal::verify(bilinear::BilinearContext{}, digest, delta, proof) !=
      ppal::Verdict::kAccept) {
    return kExitReject;
  }
  for (const std::string& y : proof.order) out << y << '\n';
  return kExitAccept;
}

// ---- ZKL ----

zkl::Flag parse_flag(const std::string& s) {
  if (s == "member") return zkl::Flag::kMembership;
  if (s == "order") return zkl::Flag::kOrder;
  throw Error(ErrorCode::kInvalidFlag, "flag must be member or order");
}

zkl::PublicKey load_pk(const std::string& path) {
  Bytes payload = load(path, io::Kind::kZklPublicKey);
  ByteReader r(payload);
  zkl::PublicKey pk = zkl::read_public_key(r);
  r.expect_end();
  return pk;
}

struct ZklSetupArgs {
  std::string out, seed;
  bool test_profile = false;
};

int zkl_setup(const ZklSetupArgs& a) {
  Rng rng = make_rng(a.seed, "zkl-setup");
  zkl::Profile profile =
      a.test_profile ? zkl::Profile::insecure_test() : zkl::Profile::production();
  ByteWriter w;
  zkl::write(w, zkl::zkl_setup(profile, rng).first);
  store(a.out, io::Kind::kZklPublicKey, w.data());
  return kExitAccept;
}

// The prover state file holds the seed that drives the commitment plus the
// list, so the full state can be rebuilt deterministically.
struct StoredState {
  Bytes seed;
  std::vector<std::string> list;
};

StoredState load_state(const std::string& path) {
  Bytes payload = load(path, io::Kind::kZklState);
  ByteReader r(payload);
  StoredState s;
  ByteSpan seed = r.raw(kStateSeedBytes);
  s.seed.assign(seed.begin(), seed.end());
  const uint32_t n = r.count(4);
  for (uint32_t i = 0; i < n; ++i) s.list.push_back(r.str());
  r.expect_end();
  return s;
}

std::pair<zkl::ZklCommitment, zkl::ZklState> rebuild(const zkl::PublicKey& pk,
                                                     const StoredState& s) {
  Rng rng = Rng::from_seed(s.seed);
  return zkl::zkl_commit(pk, SourceList::create(s.list), rng);
}

struct ZklCommitArgs {
  std::string pk, list, com_out, state_out, seed;
};

int zkl_commit(const ZklCommitArgs& a) {
  zkl::PublicKey pk = load_pk(a.pk);
  StoredState s;
  s.list = io::read_lines(a.list);
  s.seed = make_rng(a.seed, "zkl-state").bytes(kStateSeedBytes);
  auto [com, state] = rebuild(pk, s);
  ByteWriter cw;
  zkl::write(cw, com);
  ByteWriter sw;
  sw.raw(s.seed);
  sw.u32(static_cast<uint32_t>(s.list.size()));
  for (const std::string& y : s.list) sw.str(y);
  store(a.com_out, io::Kind::kZklCommitment, cw.data());
  store(a.state_out, io::Kind::kZklState, sw.data());
  return kExitAccept;
}

struct ZklQueryArgs {
  std::string pk, state, query, flag, out, seed;
};

int zkl_query(const ZklQueryArgs& a) {
  zkl::PublicKey pk = load_pk(a.pk);
  zkl::Query q{io::read_lines(a.query), parse_flag(a.flag)};
  auto [com, state] = rebuild(pk, load_state(a.state));
  Rng rng = make_rng(a.seed, "zkl-query");
  zkl::Response response = zkl::zkl_query(pk, state, q, rng);
  ByteWriter w;
  zkl::write(w, pk, response);
  store(a.out, io::Kind::kZklResponse, w.data());
  return kExitAccept;
}

struct ZklVerifyArgs {
  std::string pk, com, query, flag, response;
};

int zkl_verify(const ZklVerifyArgs& a, std::ostream& out) {
  zkl::PublicKey pk = load_pk(a.pk);
  zkl::Query q{io::read_lines(a.query), parse_flag(a.flag)};
  Bytes com_bytes = load(a.com, io::Kind::kZklCommitment);
  ByteReader cr(com_bytes);
  zkl::ZklCommitment com = zkl::read_commitment(cr);
  cr.expect_end();
  Bytes resp_bytes = load(a.response, io::Kind::kZklResponse);
  ByteReader rr(resp_bytes);
  zkl::Response response = zkl::read_response(rr, pk);
  if (zkl::zkl_verify(pk, com, q, response) != zkl::Verdict::kAccept) {
    return kExitReject;
  }
  if (q.flag == zkl::Flag::kMembership) {
    for (bool present : response.member) out << (present ? "true" : "false") << '\n';
  } else {
    for (const std::string& w : response.order->order) out << w << '\n';
  }
  return kExitAccept;
}

// ---- bench ----

struct BenchArgs {
  std::string scheme = "ppal";
  std::vector<size_t> ns = {1024, 2048, 4096};
  std::vector<size_t> ms = {16};
  size_t trials = 3;
  std::string seed;
};

int bench(const BenchArgs& a, std::ostream& out) {
  ORDLIST_ENFORCE(a.scheme == "ppal", ErrorCode::kInvalidQuery,
                  "only --scheme ppal is benchmarked");
  for (size_t v : a.ns) ORDLIST_ENFORCE(v > 0, ErrorCode::kInvalidQuery, "sizes must be positive");
  for (size_t v : a.ms) ORDLIST_ENFORCE(v > 0, ErrorCode::kInvalidQuery, "sizes must be positive");
  ORDLIST_ENFORCE(a.trials > 0, ErrorCode::kInvalidQuery, "trials must be positive");
  Rng rng = make_rng(a.seed, "bench");
  write_csv(out, bench_ppal({a.ns, a.ms, a.trials}, rng));
  return kExitAccept;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Authenticated and zero-knowledge order queries on lists", "ordlist"};
  app.require_subcommand(1);

  PpalSetupArgs ps;
  PpalQueryArgs pq;
  PpalVerifyArgs pv;
  ZklSetupArgs zs;
  ZklCommitArgs zc;
  ZklQueryArgs zq;
  ZklVerifyArgs zv;
  BenchArgs ba;

  auto* ppal_cmd = app.add_subcommand("ppal", "Three-party authenticated lists");
  ppal_cmd->require_subcommand(1);
  auto* c = ppal_cmd->add_subcommand("setup", "Owner: sign a list");
  c->add_option("--list", ps.list, "List file")->required();
  c->add_option("--client-out", ps.client_out, "Client digest output")->required();
  c->add_option("--server-out", ps.server_out, "Server digest output")->required();
  c->add_option("--seed", ps.seed, "Hex seed for reproducible output");
  c = ppal_cmd->add_subcommand("query", "Server: prove the order of a sublist");
  c->add_option("--server", pq.server, "Server digest")->required();
  c->add_option("--list", pq.list, "List file")->required();
  c->add_option("--query", pq.query, "Query file")->required();
  c->add_option("--out", pq.out, "Proof output")->required();
  c->add_flag("--no-pretree", pq.no_pretree, "Skip the product tree (linear time)");
  c = ppal_cmd->add_subcommand("verify", "Client: check a proof");
  c->add_option("--client", pv.client, "Client digest")->required();
  c->add_option("--query", pv.query, "Query file")->required();
  c->add_option("--proof", pv.proof, "Proof file")->required();

  auto* zkl_cmd = app.add_subcommand("zkl", "Zero-knowledge lists");
  zkl_cmd->require_subcommand(1);
  c = zkl_cmd->add_subcommand("setup", "Generate public parameters");
  c->add_option("--out", zs.out, "Public key output")->required();
  c->add_option("--seed", zs.seed, "Hex seed for reproducible output");
  c->add_flag("--insecure-test-profile", zs.test_profile,
              "512-bit modulus and 16-level tree; for tests only");
  c = zkl_cmd->add_subcommand("commit", "Prover: commit to a list");
  c->add_option("--pk", zc.pk, "Public key")->required();
  c->add_option("--list", zc.list, "List file")->required();
  c->add_option("--com-out", zc.com_out, "Commitment output")->required();
  c->add_option("--state-out", zc.state_out, "Prover state output")->required();
  c->add_option("--seed", zc.seed, "Hex seed for reproducible output");
  c = zkl_cmd->add_subcommand("query", "Prover: answer a query");
  c->add_option("--pk", zq.pk, "Public key")->required();
  c->add_option("--state", zq.state, "Prover state")->required();
  c->add_option("--query", zq.query, "Query file")->required();
  c->add_option("--flag", zq.flag, "member or order")->required();
  c->add_option("--out", zq.out, "Response output")->required();
  c->add_option("--seed", zq.seed, "Hex seed for reproducible output");
  c = zkl_cmd->add_subcommand("verify", "Verifier: check a response");
  c->add_option("--pk", zv.pk, "Public key")->required();
  c->add_option("--com", zv.com, "Commitment")->required();
  c->add_option("--query", zv.query, "Query file")->required();
  c->add_option("--flag", zv.flag, "member or order")->required();
  c->add_option("--response", zv.response, "Response file")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Time PPAL setup, query and verify");
  bench_cmd->add_option("--scheme", ba.scheme, "Scheme (ppal)");
  bench_cmd->add_option("--n", ba.ns, "List sizes")->delimiter(',');
  bench_cmd->add_option("--m", ba.ms, "Query sizes")->delimiter(',');
  bench_cmd->add_option("--trials", ba.trials, "Trials per (n, m)");
  bench_cmd->add_option("--seed", ba.seed, "Hex seed");

  std::vector<const char*> argv;
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitAccept : kExitInvalidInput;
  }

  try {
    auto chosen = [](CLI::App* parent, const char* name) {
      return parent->got_subcommand(name);
    };
    if (chosen(&app, "ppal")) {
      if (chosen(ppal_cmd, "setup")) return ppal_setup(ps);
      if (chosen(ppal_cmd, "query")) return ppal_query(pq);
      return ppal_verify(pv, out);
    }
    if (chosen(&app, "zkl")) {
      if (chosen(zkl_cmd, "setup")) return zkl_setup(zs);
      if (chosen(zkl_cmd, "commit")) return zkl_commit(zc);
      if (chosen(zkl_cmd, "query")) return zkl_query(zq);
      return zkl_verify(zv, out);
    }
    return bench(ba, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace ordlist::cli

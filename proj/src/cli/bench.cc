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

#include "ordlist/cli/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <numeric>

#include "ordlist/ppal/ppal.h"
#include "ordlist/ppal/serialize.h"

namespace ordlist::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::string> sample(const SourceList& list, size_t m, Rng& rng) {
  std::vector<size_t> idx(list.size());
  std::iota(idx.begin(), idx.end(), 0);
  // Partial Fisher-Yates: only the first m slots are needed.
  for (size_t i = 0; i < m; ++i) {
    std::swap(idx[i], idx[i + rng.uniform(idx.size() - i)]);
  }
  std::vector<std::string> out;
  for (size_t i = 0; i < m; ++i) out.push_back(list.elements()[idx[i]]);
  return out;
}

}  // namespace

std::vector<std::string> bench_list(size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  char buf[32];
  for (size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof(buf), "el%010zu", i);
    out.emplace_back(buf);
  }
  return out;
}

std::vector<BenchRow> bench_ppal(const BenchOptions& options, Rng& rng) {
  bilinear::BilinearContext ctx;
  std::vector<BenchRow> rows;
  for (size_t n : options.ns) {
    SourceList list = SourceList::create(bench_list(n));
    auto start = Clock::now();
    ppal::SetupResult s = ppal::setup(ctx, list, rng);
    const double setup_ms = ms_since(start);
    rows.push_back({"ppal", n, 0, "setup", setup_ms, ppal::encode(s.client).size()});
    ppal::ProductTree tree = ppal::ProductTree::build(ctx, s.server, list);
    for (size_t m : options.ms) {
      if (m == 0 || m > n) continue;
      double pretree = 0, linear = 0, verify = 0;
      size_t bytes = 0;
      for (size_t t = 0; t < options.trials; ++t) {
        std::vector<std::string> delta = sample(list, m, rng);
        start = Clock::now();
        ppal::QueryProof proof = ppal::query(ctx, s.server, list, delta, &tree);
        pretree += ms_since(start);
        start = Clock::now();
        ppal::query(ctx, s.server, list, delta);
        linear += ms_since(start);
        start = Clock::now();
        ppal::verify(ctx, s.client, delta, proof);
        verify += ms_since(start);
        bytes = ppal::encode(proof).size();
      }
      const double k = static_cast<double>(std::max<size_t>(options.trials, 1));
      rows.push_back({"ppal", n, m, "query_pretree", pretree / k, bytes});
      rows.push_back({"ppal", n, m, "query_linear", linear / k, bytes});
      rows.push_back({"ppal", n, m, "verify", verify / k, bytes});
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "scheme,n,m,phase,mean_ms,proof_bytes\n";
  for (const BenchRow& r : rows) {
    out << r.scheme << ',' << r.n << ',' << r.m << ',' << r.phase << ','
        << std::fixed << std::setprecision(3) << r.mean_ms << ',' << r.proof_bytes
        << '\n';
  }
}

}  // namespace ordlist::cli

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

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "ordlist/common/rng.h"

namespace ordlist::cli {

struct BenchOptions {
  std::vector<size_t> ns;
  std::vector<size_t> ms;
  size_t trials = 3;
};

struct BenchRow {
  std::string scheme;
  size_t n = 0;
  size_t m = 0;
  std::string phase;
  double mean_ms = 0;
  size_t proof_bytes = 0;
};

// Setup runs once per n; query and verify phases are averaged over
// `trials` random queries for every m <= n.
std::vector<BenchRow> bench_ppal(const BenchOptions& options, Rng& rng);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// Fixed-width element names, so encoded proofs for the same m have the same
// size whatever the list length.
std::vector<std::string> bench_list(size_t n);

}  // namespace ordlist::cli

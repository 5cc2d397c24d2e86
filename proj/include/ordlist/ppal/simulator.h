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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordlist/bilinear/context.h"
#include "ordlist/common/rng.h"
#include "ordlist/ppal/types.h"

namespace ordlist::ppal {

// Answers pi_L(delta) for a list the simulator never sees.
using OrderOracle =
    std::function<std::vector<std::string>(std::span<const std::string>)>;

// Produces a client digest and query proofs that verify, holding only an
// order oracle. Member witnesses are g1^r with r drawn once per element and
// kept in a table, so repeated or overlapping queries stay consistent.
class PpalSimulator {
 public:
  PpalSimulator(bilinear::BilinearContext ctx, OrderOracle oracle, Rng rng);

  const ClientDigest& digest() const { return digest_; }
  QueryProof query(std::span<const std::string> delta);

  // Table inspection for tests; nullopt when the element was never queried.
  std::optional<G1> member_witness(const std::string& element) const;

 private:
  const Scalar& exponent_for(const std::string& element);

  bilinear::BilinearContext ctx_;
  OrderOracle oracle_;
  Rng rng_;
  Scalar v_;
  G1 random_base_;  // g_rand; the published signature is g_rand^v
  ClientDigest digest_;
  std::map<std::string, Scalar> table_;
};

}  // namespace ordlist::ppal

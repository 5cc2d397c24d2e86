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

#include "ordlist/ppal/simulator.h"

#include "ordlist/ppal/ppal.h"

namespace ordlist::ppal {

PpalSimulator::PpalSimulator(bilinear::BilinearContext ctx, OrderOracle oracle,
                             Rng rng)
    : ctx_(std::move(ctx)), oracle_(std::move(oracle)), rng_(std::move(rng)) {
  v_ = Scalar::random_nonzero(rng_);
  random_base_ = ctx_.g1().pow(Scalar::random_nonzero(rng_));
  digest_.public_key_g1 = ctx_.g1().pow(v_);
  digest_.public_key = ctx_.g2().pow(v_);
  digest_.list_signature = random_base_.pow(v_);
}

const Scalar& PpalSimulator::exponent_for(const std::string& element) {
  auto it = table_.find(element);
  if (it == table_.end()) {
    it = table_.emplace(element, Scalar::random_nonzero(rng_)).first;
  }
  return it->second;
}

std::optional<G1> PpalSimulator::member_witness(const std::string& element) const {
  auto it = table_.find(element);
  if (it == table_.end()) return std::nullopt;
  return ctx_.g1().pow(it->second);
}

QueryProof PpalSimulator::query(std::span<const std::string> delta) {
  QueryProof proof;
  proof.order = oracle_(delta);
  G1 xi;
  std::vector<Scalar> exponents;
  for (const std::string& y : proof.order) {
    exponents.push_back(exponent_for(y));
    G1 witness = ctx_.g1().pow(exponents.back());
    xi *= ctx_.hash_message(witness_message(witness, y));
    proof.member_witnesses.push_back(witness);
  }
  proof.sigma_order = xi.pow(v_);
  proof.lambda = random_base_ * xi.inverse();
  for (size_t j = 0; j + 1 < exponents.size(); ++j) {
    proof.order_witnesses.push_back(
        ctx_.g2().pow(exponents[j].inverse() * exponents[j + 1]));
  }
  return proof;
}

}  // namespace ordlist::ppal

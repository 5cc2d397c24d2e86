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
#include <span>
#include <vector>

#include "ordlist/bilinear/context.h"
#include "ordlist/common/source_list.h"
#include "ordlist/ppal/types.h"

namespace ordlist::ppal {

// Balanced binary tree of partial products over psi_i = H(t_i || x_i).
// Leaves sit at heap positions [capacity, capacity + n); padding leaves and
// their ancestors hold the identity, so node(1) is the product of all psi_i.
//
// Immutable after construction; concurrent reads are safe.
class ProductTree {
 public:
  // Throws kInconsistentDigest when the digest does not match the list.
  static ProductTree build(const bilinear::BilinearContext& ctx,
                           const ServerDigest& digest, const SourceList& list);
  static ProductTree from_leaves(std::vector<G1> leaves);

  size_t size() const { return size_; }
  size_t capacity() const { return capacity_; }
  const G1& root() const { return nodes_[1]; }
  // Heap indexing: node 1 is the root, children of k are 2k and 2k+1.
  const G1& node(size_t heap_index) const;
  const G1& leaf(size_t rank) const { return nodes_[capacity_ + rank - 1]; }

  // prod_{t=i..j} psi_t, 1 <= i <= j <= n. Adds the number of stored nodes
  // multiplied into the result to *node_reads when given.
  G1 range_product(size_t i, size_t j, size_t* node_reads = nullptr) const;

  // Product of psi over every rank not in sorted_ranks (strictly increasing,
  // 1-based). Uses at most |sorted_ranks| + 1 interval lookups.
  G1 complement_product(std::span<const size_t> sorted_ranks,
                        size_t* node_reads = nullptr) const;

 private:
  G1 interval(size_t lo, size_t hi, size_t* node_reads) const;  // leaf [lo, hi)

  size_t size_ = 0;
  size_t capacity_ = 1;
  std::vector<G1> nodes_;
};

}  // namespace ordlist::ppal

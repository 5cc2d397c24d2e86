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

#include "ordlist/ppal/product_tree.h"

#include "ordlist/common/error.h"
#include "ordlist/ppal/ppal.h"

namespace ordlist::ppal {

ProductTree ProductTree::build(const bilinear::BilinearContext& ctx,
                               const ServerDigest& digest,
                               const SourceList& list) {
  ORDLIST_ENFORCE(digest.size() == list.size(), ErrorCode::kInconsistentDigest,
                  "digest covers " + std::to_string(digest.size()) +
                      " elements, list has " + std::to_string(list.size()));
  std::vector<G1> leaves;
  leaves.reserve(list.size());
  for (size_t i = 0; i < list.size(); ++i) {
    leaves.push_back(ctx.hash_message(
        witness_message(digest.members[i].witness, list.elements()[i])));
  }
  return from_leaves(std::move(leaves));
}

ProductTree ProductTree::from_leaves(std::vector<G1> leaves) {
  ORDLIST_ENFORCE(!leaves.empty(), ErrorCode::kInvalidList,
                  "product tree needs at least one leaf");
  ProductTree tree;
  tree.size_ = leaves.size();
  while (tree.capacity_ < tree.size_) tree.capacity_ <<= 1;
  tree.nodes_.assign(2 * tree.capacity_, G1::identity());
  for (size_t i = 0; i < leaves.size(); ++i) {
    tree.nodes_[tree.capacity_ + i] = leaves[i];
  }
  for (size_t k = tree.capacity_ - 1; k >= 1; --k) {
    tree.nodes_[k] = tree.nodes_[2 * k] * tree.nodes_[2 * k + 1];
  }
  return tree;
}

const G1& ProductTree::node(size_t heap_index) const {
  ORDLIST_ENFORCE(heap_index >= 1 && heap_index < nodes_.size(),
                  ErrorCode::kIndexError, "node index out of range");
  return nodes_[heap_index];
}

G1 ProductTree::interval(size_t lo, size_t hi, size_t* node_reads) const {
  G1 acc;
  size_t reads = 0;
  for (size_t l = lo + capacity_, r = hi + capacity_; l < r; l >>= 1, r >>= 1) {
    if (l & 1) {
      acc *= nodes_[l++];
      ++reads;
    }
    if (r & 1) {
      acc *= nodes_[--r];
      ++reads;
    }
  }
  if (node_reads) *node_reads += reads;
  return acc;
}

G1 ProductTree::range_product(size_t i, size_t j, size_t* node_reads) const {
  ORDLIST_ENFORCE(i >= 1 && i <= j && j <= size_, ErrorCode::kIndexError,
                  "range [" + std::to_string(i) + ", " + std::to_string(j) +
                      "] outside [1, " + std::to_string(size_) + "]");
  return interval(i - 1, j, node_reads);
}

G1 ProductTree::complement_product(std::span<const size_t> sorted_ranks,
                                   size_t* node_reads) const {
  G1 acc;
  size_t next_leaf = 0;  // first leaf not yet covered
  for (size_t rank : sorted_ranks) {
    ORDLIST_ENFORCE(rank >= 1 && rank <= size_ && rank - 1 >= next_leaf,
                    ErrorCode::kIndexError, "ranks must be increasing and in range");
    if (rank - 1 > next_leaf) acc *= interval(next_leaf, rank - 1, node_reads);
    next_leaf = rank;
  }
  // The tail runs to the padded capacity: padding is the identity, and a
  // right-aligned interval touches at most one node per level.
  if (next_leaf < size_) acc *= interval(next_leaf, capacity_, node_reads);
  return acc;
}

}  // namespace ordlist::ppal

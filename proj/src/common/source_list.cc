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

#include "ordlist/common/source_list.h"

#include "ordlist/common/error.h"

namespace ordlist {

SourceList SourceList::create(std::vector<std::string> elements) {
  ORDLIST_ENFORCE(!elements.empty(), ErrorCode::kInvalidList, "list is empty");
  SourceList list;
  list.rank_.reserve(elements.size());
  for (size_t i = 0; i < elements.size(); ++i) {
    auto [it, inserted] = list.rank_.emplace(elements[i], i + 1);
    ORDLIST_ENFORCE(inserted, ErrorCode::kInvalidList,
                    "duplicate element at rank " + std::to_string(i + 1));
  }
  list.elements_ = std::move(elements);
  return list;
}

std::optional<size_t> SourceList::rank_of(const std::string& element) const {
  auto it = rank_.find(element);
  if (it == rank_.end()) return std::nullopt;
  return it->second;
}

}  // namespace ordlist

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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ordlist {

// A linearly ordered list of distinct byte strings. The rank of the element
// at position i (0-based storage) is i + 1.
class SourceList {
 public:
  // Throws Error(kInvalidList) when empty or when an element repeats.
  static SourceList create(std::vector<std::string> elements);

  size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  // 1-based.
  const std::string& at_rank(size_t rank) const { return elements_[rank - 1]; }
  std::optional<size_t> rank_of(const std::string& element) const;
  bool contains(const std::string& element) const {
    return rank_.count(element) != 0;
  }

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, size_t> rank_;
};

}  // namespace ordlist

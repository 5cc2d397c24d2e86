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

#include <cstdint>
#include <string>
#include <vector>

#include "ordlist/common/bytes.h"

// File plumbing: versioned containers with an integrity checksum, and the
// one-element-per-line list format. The checksum only catches accidental
// corruption; it is not part of any cryptographic argument.
namespace ordlist::io {

enum class Kind : uint8_t {
  kClientDigest = 1,
  kServerDigest = 2,
  kQueryProof = 3,
  kZklPublicKey = 16,
  kZklCommitment = 17,
  kZklResponse = 18,
  kZklState = 19,
};

constexpr uint8_t kContainerVersion = 1;

// magic ("PPAL" or "ZKL1") | version | kind | payload | SHA-256(all before)
Bytes seal(Kind kind, ByteSpan payload);
// Returns the payload. Throws kMalformed on a bad magic, version, kind or
// checksum.
Bytes unseal(ByteSpan container, Kind expected);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, ByteSpan data);

// UTF-8 text, one element per line, no blank lines. A final newline is
// optional and a trailing '\r' on each line is dropped. Throws
// kInvalidList when the file is empty, has a blank line or is not UTF-8.
// Duplicates are left for the caller to judge.
std::vector<std::string> parse_lines(ByteSpan text);
std::vector<std::string> read_lines(const std::string& path);

}  // namespace ordlist::io

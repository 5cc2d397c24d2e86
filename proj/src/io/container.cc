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

#include "ordlist/io/container.h"

#include <cstring>
#include <fstream>
#include <iterator>

#include "ordlist/common/error.h"
#include "ordlist/common/hash.h"

namespace ordlist::io {

namespace {

constexpr size_t kMagicBytes = 4;
constexpr size_t kHeaderBytes = kMagicBytes + 2;
constexpr size_t kChecksumBytes = 32;

const char* magic_for(Kind kind) {
  return static_cast<uint8_t>(kind) < 16 ? "PPAL" : "ZKL1";
}

bool known_kind(uint8_t k) {
  return (k >= 1 && k <= 3) || (k >= 16 && k <= 19);
}

bool valid_utf8(std::string_view s) {
  size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    size_t len;
    uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xe0) == 0xc0) {
      len = 2;
      cp = c & 0x1f;
    } else if ((c & 0xf0) == 0xe0) {
      len = 3;
      cp = c & 0x0f;
    } else if ((c & 0xf8) == 0xf0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (size_t j = 1; j < len; ++j) {
      const auto cc = static_cast<unsigned char>(s[i + j]);
      if ((cc & 0xc0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3f);
    }
    // Reject overlong forms, surrogates and values past U+10FFFF.
    static constexpr uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) {
      return false;
    }
    i += len;
  }
  return true;
}

}  // namespace

Bytes seal(Kind kind, ByteSpan payload) {
  Bytes out;
  out.reserve(kHeaderBytes + payload.size() + kChecksumBytes);
  const char* magic = magic_for(kind);
  out.insert(out.end(), magic, magic + kMagicBytes);
  out.push_back(kContainerVersion);
  out.push_back(static_cast<uint8_t>(kind));
  out.insert(out.end(), payload.begin(), payload.end());
  Digest256 sum = sha256(out);
  out.insert(out.end(), sum.begin(), sum.end());
  return out;
}

Bytes unseal(ByteSpan container, Kind expected) {
  ORDLIST_ENFORCE(container.size() >= kHeaderBytes + kChecksumBytes,
                  ErrorCode::kMalformed, "container too short");
  const ByteSpan body = container.first(container.size() - kChecksumBytes);
  const Digest256 sum = sha256(body);
  ORDLIST_ENFORCE(std::memcmp(sum.data(), body.data() + body.size(), kChecksumBytes) == 0,
                  ErrorCode::kMalformed, "checksum mismatch");
  const bool ppal = std::memcmp(body.data(), "PPAL", kMagicBytes) == 0;
  const bool zkl = std::memcmp(body.data(), "ZKL1", kMagicBytes) == 0;
  ORDLIST_ENFORCE(ppal || zkl, ErrorCode::kMalformed, "unknown magic");
  ORDLIST_ENFORCE(body[kMagicBytes] == kContainerVersion, ErrorCode::kMalformed,
                  "unsupported container version " + std::to_string(body[kMagicBytes]));
  const uint8_t kind = body[kMagicBytes + 1];
  ORDLIST_ENFORCE(known_kind(kind) &&
                      std::memcmp(body.data(), magic_for(static_cast<Kind>(kind)),
                                  kMagicBytes) == 0,
                  ErrorCode::kMalformed, "unknown container kind");
  ORDLIST_ENFORCE(kind == static_cast<uint8_t>(expected), ErrorCode::kMalformed,
                  "container holds a different kind of object");
  return Bytes(body.begin() + kHeaderBytes, body.end());
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  ORDLIST_ENFORCE(in.good(), ErrorCode::kIo, "cannot open " + path);
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ORDLIST_ENFORCE(!in.bad(), ErrorCode::kIo, "cannot read " + path);
  return data;
}

void write_file(const std::string& path, ByteSpan data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  ORDLIST_ENFORCE(out.good(), ErrorCode::kIo, "cannot create " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  out.close();
  ORDLIST_ENFORCE(out.good(), ErrorCode::kIo, "cannot write " + path);
}

std::vector<std::string> parse_lines(ByteSpan text) {
  std::string_view s(reinterpret_cast<const char*>(text.data()), text.size());
  ORDLIST_ENFORCE(!s.empty(), ErrorCode::kInvalidList, "file is empty");
  ORDLIST_ENFORCE(valid_utf8(s), ErrorCode::kInvalidList, "file is not UTF-8");
  if (s.back() == '\n') s.remove_suffix(1);
  std::vector<std::string> lines;
  size_t line_no = 0;
  while (true) {
    ++line_no;
    const size_t nl = s.find('\n');
    std::string_view line = s.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ORDLIST_ENFORCE(!line.empty(), ErrorCode::kInvalidList,
                    "blank line " + std::to_string(line_no));
    lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    s.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string> read_lines(const std::string& path) {
  return parse_lines(read_file(path));
}

}  // namespace ordlist::io

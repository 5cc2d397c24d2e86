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

#include "ordlist/common/bytes.h"
#include "ordlist/ppal/types.h"

// Payload encodings for the PPAL messages. Group elements use their
// compressed form and scalars 32-byte big-endian. Decoders throw
// Error(kMalformed) on any structural problem, including points that are not
// in the prime-order subgroup.
namespace ordlist::ppal {

Bytes encode(const ClientDigest& digest);
Bytes encode(const ServerDigest& digest);
Bytes encode(const QueryProof& proof);

ClientDigest decode_client_digest(ByteSpan payload);
ServerDigest decode_server_digest(ByteSpan payload);
QueryProof decode_query_proof(ByteSpan payload);

}  // namespace ordlist::ppal

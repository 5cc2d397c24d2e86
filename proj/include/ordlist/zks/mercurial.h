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

#include <utility>

#include "ordlist/bilinear/group.h"
#include "ordlist/common/bytes.h"
#include "ordlist/common/rng.h"

// Discrete-log mercurial commitments in G1. With public bases g and h = g^x:
//   hard commitment to m:  (C0, C1) = (g^m * C1^r0, h^r1)
//   soft commitment:       (C0, C1) = (g^r0, g^r1)
// A hard commitment opens and teases only to m. A soft one never opens but
// teases to anything. Knowing x, a soft commitment can also be opened to any
// message, which is what the zero-knowledge simulators rely on.
namespace ordlist::zks {

using bilinear::G1;
using bilinear::Scalar;

struct MercParams {
  G1 g;
  G1 h;
  bool operator==(const MercParams& o) const { return g == o.g && h == o.h; }
};

struct MercTrapdoor {
  Scalar x;  // h = g^x
};

struct MercCommitment {
  G1 c0;
  G1 c1;
  bool operator==(const MercCommitment& o) const {
    return c0 == o.c0 && c1 == o.c1;
  }
};

enum class MercKind { kHard, kSoft };

// Committer-side randomness. message is meaningful for hard commitments only.
struct MercSecret {
  MercKind kind = MercKind::kSoft;
  Scalar r0;
  Scalar r1;
  Scalar message;
};

struct OpenProof {
  Scalar r0;
  Scalar r1;
};

std::pair<MercParams, MercTrapdoor> merc_setup(Rng& rng);

std::pair<MercCommitment, MercSecret> hard_commit(const MercParams& params,
                                                  const Scalar& message,
                                                  Rng& rng);
std::pair<MercCommitment, MercSecret> soft_commit(const MercParams& params,
                                                  Rng& rng);
// Recomputes the commitment from its secret.
MercCommitment commitment_for(const MercParams& params, const MercSecret& secret);

// Throws kCannotOpenSoft for soft secrets, kInvalidOpening for the wrong m.
OpenProof merc_open(const MercSecret& secret, const Scalar& message);
// Throws kInvalidTease when a hard secret is teased to a different message.
Scalar merc_tease(const MercSecret& secret, const Scalar& message);

bool ver_open(const MercParams& params, const MercCommitment& c,
              const Scalar& message, const OpenProof& proof);
bool ver_tease(const MercParams& params, const MercCommitment& c,
               const Scalar& message, const Scalar& tease);

// Opens a soft commitment to any message using the trapdoor.
OpenProof fake_open(const MercTrapdoor& trapdoor, const MercSecret& secret,
                    const Scalar& message);

// Message encodings. Each kind has its own domain tag.
Scalar leaf_message(ByteSpan value);
Scalar bottom_message();
Scalar node_message(const MercCommitment& left, const MercCommitment& right);

void write(ByteWriter& w, const MercParams& params);
MercParams read_merc_params(ByteReader& r);
void write(ByteWriter& w, const MercCommitment& c);
MercCommitment read_merc_commitment(ByteReader& r);

}  // namespace ordlist::zks

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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordlist/cli/cli.h"
#include "ordlist/common/error.h"
#include "ordlist/io/container.h"

namespace ordlist {
namespace {

namespace fs = std::filesystem;

Bytes as_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

TEST(Container, RoundTripAndMagic) {
  Bytes payload = as_bytes("hello");
  Bytes c = io::seal(io::Kind::kQueryProof, payload);
  EXPECT_EQ(std::string(c.begin(), c.begin() + 4), "PPAL");
  EXPECT_EQ(c[4], io::kContainerVersion);
  EXPECT_EQ(c[5], 3);
  EXPECT_EQ(c.size(), 4 + 2 + payload.size() + 32);
  EXPECT_EQ(io::unseal(c, io::Kind::kQueryProof), payload);

  Bytes z = io::seal(io::Kind::kZklResponse, payload);
  EXPECT_EQ(std::string(z.begin(), z.begin() + 4), "ZKL1");
}

TEST(Container, RejectsEveryBitFlip) {
  Bytes c = io::seal(io::Kind::kServerDigest, as_bytes("payload bytes"));
  for (size_t i = 0; i < c.size(); ++i) {
    for (int bit = 0; bit < 8; ++bit) {
      Bytes m = c;
      m[i] ^= static_cast<uint8_t>(1u << bit);
      try {
        io::unseal(m, io::Kind::kServerDigest);
        ADD_FAILURE() << "accepted flip at byte " << i;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kMalformed);
      }
    }
  }
}

TEST(Container, RejectsWrongKindAndTruncation) {
  Bytes c = io::seal(io::Kind::kClientDigest, as_bytes("x"));
  EXPECT_THROW(io::unseal(c, io::Kind::kServerDigest), Error);
  for (size_t len = 0; len < c.size(); ++len) {
    EXPECT_THROW(io::unseal(ByteSpan(c.data(), len), io::Kind::kClientDigest), Error);
  }
}

TEST(Lines, ParsingRules) {
  EXPECT_EQ(io::parse_lines(as_bytes("a\nb\n")), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(io::parse_lines(as_bytes("a\r\nb")), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(io::parse_lines(as_bytes("caf\xc3\xa9")), (std::vector<std::string>{"caf\xc3\xa9"}));
  for (std::string bad : {"", "\n", "a\n\nb", "a\n\n", "\xff\xfe", "caf\xc3"}) {
    try {
      io::parse_lines(as_bytes(bad));
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidList);
    }
  }
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ordlist_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    unsetenv("ORDLIST_SEED");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  Bytes slurp(const std::string& name) const { return io::read_file(path(name)); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "ordlist");
    std::ostringstream o, e;
    const int code = cli::run_cli(args, o, e);
    out_ = o.str();
    err_ = e.str();
    return code;
  }

  fs::path dir_;
  std::string out_, err_;
};

TEST_F(CliTest, PpalRoundTripPrintsOrder) {
  write("list", "alice\nbob\ncarol\ndave\n");
  write("query", "dave\nbob\n");
  ASSERT_EQ(run({"ppal", "setup", "--list", path("list"), "--client-out", path("c"),
                 "--server-out", path("s"), "--seed", "0a0b"}),
            cli::kExitAccept);
  ASSERT_EQ(run({"ppal", "query", "--server", path("s"), "--list", path("list"), "--query",
                 path("query"), "--out", path("p")}),
            cli::kExitAccept);
  ASSERT_EQ(run({"ppal", "verify", "--client", path("c"), "--query", path("query"),
                 "--proof", path("p")}),
            cli::kExitAccept);
  EXPECT_EQ(out_, "bob\ndave\n");

  // The linear path yields a byte-identical proof.
  ASSERT_EQ(run({"ppal", "query", "--server", path("s"), "--list", path("list"), "--query",
                 path("query"), "--out", path("p2"), "--no-pretree"}),
            cli::kExitAccept);
  EXPECT_EQ(slurp("p"), slurp("p2"));

  // A proof for a different query is rejected.
  write("other", "alice\ncarol\n");
  EXPECT_EQ(run({"ppal", "verify", "--client", path("c"), "--query", path("other"),
                 "--proof", path("p")}),
            cli::kExitReject);
}

TEST_F(CliTest, SeedMakesOutputReproducible) {
  write("list", "x\ny\nz\n");
  for (const char* name : {"c1", "c2"}) {
    ASSERT_EQ(run({"ppal", "setup", "--list", path("list"), "--client-out", path(name),
                   "--server-out", path(std::string(name) + "s"), "--seed", "ff"}),
              0);
  }
  EXPECT_EQ(slurp("c1"), slurp("c2"));
  ASSERT_EQ(run({"ppal", "setup", "--list", path("list"), "--client-out", path("c3"),
                 "--server-out", path("s3"), "--seed", "fe"}),
            0);
  EXPECT_NE(slurp("c1"), slurp("c3"));

  // The environment seed overrides the flag.
  setenv("ORDLIST_SEED", "ff", 1);
  ASSERT_EQ(run({"ppal", "setup", "--list", path("list"), "--client-out", path("c4"),
                 "--server-out", path("s4"), "--seed", "00"}),
            0);
  unsetenv("ORDLIST_SEED");
  EXPECT_EQ(slurp("c1"), slurp("c4"));
}

TEST_F(CliTest, ExitCodes) {
  write("list", "a\nb\nc\n");
  write("empty", "");
  write("dups", "a\na\n");
  write("stranger", "a\nzz\n");
  EXPECT_EQ(run({"ppal", "setup", "--list", path("empty"), "--client-out", path("c"),
                 "--server-out", path("s")}),
            cli::kExitInvalidInput);
  EXPECT_EQ(run({"ppal", "setup", "--list", path("dups"), "--client-out", path("c"),
                 "--server-out", path("s")}),
            cli::kExitInvalidInput);
  EXPECT_EQ(run({"ppal", "setup", "--list", path("missing"), "--client-out", path("c"),
                 "--server-out", path("s")}),
            cli::kExitIo);
  EXPECT_EQ(run({"ppal", "setup"}), cli::kExitInvalidInput);
  EXPECT_EQ(run({"nonsense"}), cli::kExitInvalidInput);

  ASSERT_EQ(run({"ppal", "setup", "--list", path("list"), "--client-out", path("c"),
                 "--server-out", path("s"), "--seed", "01"}),
            0);
  EXPECT_EQ(run({"ppal", "query", "--server", path("s"), "--list", path("list"), "--query",
                 path("stranger"), "--out", path("p")}),
            cli::kExitNotMember);
  EXPECT_NE(err_.find("zz"), std::string::npos);
  EXPECT_EQ(run({"ppal", "query", "--server", path("s"), "--list", path("list"), "--query",
                 path("dups"), "--out", path("p")}),
            cli::kExitInvalidInput);

  // A client digest handed in where a server digest belongs.
  EXPECT_EQ(run({"ppal", "query", "--server", path("c"), "--list", path("list"), "--query",
                 path("list"), "--out", path("p")}),
            cli::kExitMalformed);
  Bytes tampered = slurp("s");
  tampered[tampered.size() / 2] ^= 1;
  io::write_file(path("t"), tampered);
  EXPECT_EQ(run({"ppal", "query", "--server", path("t"), "--list", path("list"), "--query",
                 path("list"), "--out", path("p")}),
            cli::kExitMalformed);
}

TEST_F(CliTest, ZklRoundTrip) {
  write("list", "alice\nbob\ncarol\n");
  write("order", "carol\nalice\n");
  write("member", "bob\nmallory\n");
  ASSERT_EQ(run({"zkl", "setup", "--out", path("pk"), "--seed", "11",
                 "--insecure-test-profile"}),
            0);
  ASSERT_EQ(run({"zkl", "commit", "--pk", path("pk"), "--list", path("list"), "--com-out",
                 path("com"), "--state-out", path("st"), "--seed", "22"}),
            0);
  ASSERT_EQ(run({"zkl", "query", "--pk", path("pk"), "--state", path("st"), "--query",
                 path("order"), "--flag", "order", "--out", path("r1"), "--seed", "33"}),
            0);
  ASSERT_EQ(run({"zkl", "verify", "--pk", path("pk"), "--com", path("com"), "--query",
                 path("order"), "--flag", "order", "--response", path("r1")}),
            0);
  EXPECT_EQ(out_, "alice\ncarol\n");
  ASSERT_EQ(run({"zkl", "query", "--pk", path("pk"), "--state", path("st"), "--query",
                 path("member"), "--flag", "member", "--out", path("r2"), "--seed", "33"}),
            0);
  ASSERT_EQ(run({"zkl", "verify", "--pk", path("pk"), "--com", path("com"), "--query",
                 path("member"), "--flag", "member", "--response", path("r2")}),
            0);
  EXPECT_EQ(out_, "true\nfalse\n");

  // Absent elements drop out of the order instead of failing the query.
  ASSERT_EQ(run({"zkl", "query", "--pk", path("pk"), "--state", path("st"), "--query",
                 path("member"), "--flag", "order", "--out", path("r3")}),
            0);
  ASSERT_EQ(run({"zkl", "verify", "--pk", path("pk"), "--com", path("com"), "--query",
                 path("member"), "--flag", "order", "--response", path("r3")}),
            0);
  EXPECT_EQ(out_, "bob\n");
  EXPECT_EQ(run({"zkl", "query", "--pk", path("pk"), "--state", path("st"), "--query",
                 path("member"), "--flag", "sideways", "--out", path("r3")}),
            cli::kExitInvalidInput);
  // Answering one flag and verifying under the other fails.
  EXPECT_NE(run({"zkl", "verify", "--pk", path("pk"), "--com", path("com"), "--query",
                 path("member"), "--flag", "member", "--response", path("r1")}),
            cli::kExitAccept);
}

}  // namespace
}  // namespace ordlist

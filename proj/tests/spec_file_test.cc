// Copyright 2026 The gradedlnd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "gradedlnd/spec_file.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "gradedlnd/error.h"
#include "test_util.h"

namespace gradedlnd {
namespace {

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry :
       std::filesystem::directory_iterator(std::string(GRADEDLND_TEST_DATA) + "/corpus")) {
    if (entry.path().extension() == ".spec") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(SpecFileTest, CorpusRoundTrip) {
  const auto files = corpus();
  ASSERT_GE(files.size(), 20u);
  for (const auto& path : files) {
    SCOPED_TRACE(path.filename().string());
    const std::string text = testing::read_file(path.string());
    const SpecFile spec = parse_spec(text);
    const std::string printed = print_spec(spec);
    const SpecFile again = parse_spec(printed);
    EXPECT_TRUE(again == spec);
    EXPECT_EQ(print_spec(again), printed);
    EXPECT_TRUE(parse_spec(text) == spec);
  }
}

TEST(SpecFileTest, MinimalRing) {
  const SpecFile spec = parse_spec("ring\n  var x\n  var y weight=-3 inverted\nend\n");
  ASSERT_EQ(spec.ring->num_vars(), 2u);
  EXPECT_EQ(spec.ring->variable(0), (Variable{"x", 1, false}));
  EXPECT_EQ(spec.ring->variable(1), (Variable{"y", -3, true}));
  EXPECT_TRUE(spec.derivations.empty());
  EXPECT_FALSE(spec.witness.has_value());
  EXPECT_EQ(print_spec(spec), "ring\n  var x weight=1\n  var y weight=-3 inverted\nend\n");
}

TEST(SpecFileTest, Blocks) {
  const SpecFile spec = parse_spec(R"(# comment
ring
  var x
  var y   # trailing comment
end
derivation D
  D: x -> y; y -> 0
end
witness
  f: x
  t: y / x
  r: (x*y + y^2) / x^2
end
seeds
  y
end
)");
  ASSERT_EQ(spec.derivations.size(), 1u);
  EXPECT_EQ(spec.derivations[0].name, "D");
  ASSERT_TRUE(spec.derivations[0].images[0].has_value());
  ASSERT_TRUE(spec.witness.has_value());
  EXPECT_EQ(spec.witness->r.size(), 1u);
  EXPECT_EQ(spec.seeds.size(), 1u);
}

struct BadSpec {
  const char* text;
  ErrorCode code;
  int line;
  int column;
  const char* message_part;
};

TEST(SpecFileTest, Diagnostics) {
  const BadSpec cases[] = {
      {"ring\n  var x\n  var y weight=2\n  relation lead=x : x^2 + y^3\nend\n",
       ErrorCode::kInhomogeneousRelation, 4, 21, "2, 6"},
      {"ring\n  var x\nend\nderivation\n  x -> z\nend\n", ErrorCode::kUnknownVariable, 5, 8,
       "'z'"},
      {"ring\n  var x colour=2\nend\n", ErrorCode::kSyntaxError, 2, 9, "unknown key"},
      {"ring\n  var x\nend\nfoo\nend\n", ErrorCode::kSyntaxError, 4, 1, "unknown block"},
      {"ring\n  var x\n", ErrorCode::kSyntaxError, 3, 1, "unterminated"},
      {"derivation\nend\n", ErrorCode::kSyntaxError, 1, 1, "ring block"},
      {"ring\n  var x\n  var x\nend\n", ErrorCode::kSyntaxError, 3, 7, "duplicate"},
      {"ring\n  var x\nend\nwitness\n  f: x\n  f: x\nend\n", ErrorCode::kSyntaxError, 6, 3,
       "duplicate"},
      {"ring\n  var x\n  var y\n  var z\n  relation lead=x : x*y + z^2\nend\n",
       ErrorCode::kInvalidRelation, 5, 0, ""},
      {"ring\n  var x\nend\nseeds\n  x +\nend\n", ErrorCode::kSyntaxError, 5, 6, ""},
      {"ring\n  var x\nend\nderivation D E\nend\n", ErrorCode::kSyntaxError, 4, 14,
       "unexpected text"},
  };
  for (const BadSpec& c : cases) {
    SCOPED_TRACE(c.text);
    try {
      parse_spec(c.text);
      ADD_FAILURE() << "no error";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.code(), c.code);
      EXPECT_EQ(e.line(), c.line);
      if (c.column > 0) {
        EXPECT_EQ(e.column(), c.column);
      }
      EXPECT_NE(std::string(e.what()).find(c.message_part), std::string::npos) << e.what();
    }
  }
}

TEST(SpecFileTest, LaurentNamesRing) {
  const SpecFile spec = parse_spec("ring\n  var x weight=2\n  var y weight=3\nend\n");
  const RingPtr laurent = laurent_names_ring(*spec.ring);
  EXPECT_TRUE(laurent->variable(0).inverted);
  EXPECT_EQ(laurent->weights(), spec.ring->weights());
}

}  // namespace
}  // namespace gradedlnd

// Copyright 2026 The Hedonic Mechanisms Authors.
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

#include "hedonic/instances.h"

#include <algorithm>
#include <filesystem>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "hedonic/error.h"

namespace hedonic {
namespace {

const Rational kEps(1, 100);

std::vector<Arc> arcs_1based(std::initializer_list<std::tuple<int, int,
                                                                Rational>>
                                 list) {
  std::vector<Arc> out;
  for (const auto& [i, j, w] : list) out.push_back({AgentId(i - 1),
                                                    AgentId(j - 1), w});
  return out;
}

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

const std::string kHeader = "hedonic 1\nagents 3\nclass duplex\ngame ashg\n";

TEST(GeneratorTest, GeneralGap) {
  EXPECT_EQ(gen_general_gap(kEps, 1).profile.arcs(),
            arcs_1based({{1, 2, kEps}, {2, 3, Rational(-1)},
                         {3, 2, Rational(9, 10)}}));
  EXPECT_EQ(gen_general_gap(kEps, 2).profile.arcs(),
            arcs_1based({{1, 2, kEps}, {2, 3, -kEps},
                         {3, 2, Rational(9, 10)}}));
  EXPECT_THROW(gen_general_gap(Rational(1, 10), 1), ValidationError);
  EXPECT_THROW(gen_general_gap(Rational(0), 1), ValidationError);
  EXPECT_THROW(gen_general_gap(kEps, 3), ValidationError);
}

TEST(GeneratorTest, NonNegativeCycle) {
  const Rational a(1, 100);
  const Rational b(1, 10000);
  const Instance inst = gen_nonneg_cycle(4, a, b);
  EXPECT_EQ(inst.profile.arcs(),
            arcs_1based({{1, 2, a}, {2, 3, b}, {3, 4, a}, {4, 1, b}}));
  EXPECT_EQ(inst.kind, GameKind::kFhg);
  EXPECT_EQ(inst.profile.valuation_class(), ValuationClass::kNonNegative);
  EXPECT_EQ(gen_nonneg_cycle(6, a, b).profile.arcs().size(), 6u);
  EXPECT_THROW(gen_nonneg_cycle(5, a, b), ValidationError);
  EXPECT_THROW(gen_nonneg_cycle(2, a, b), ValidationError);
  EXPECT_THROW(gen_nonneg_cycle(4, a, a), ValidationError);
  EXPECT_THROW(gen_nonneg_cycle(4, a, Rational(1, 50)), ValidationError);
  EXPECT_THROW(gen_nonneg_cycle(4, Rational(1, 4), b), ValidationError);
}

TEST(GeneratorTest, DuplexStar) {
  const Instance v1 = gen_duplex_star(5, 1);
  EXPECT_EQ(v1.profile.arcs(),
            arcs_1based({{1, 4, Rational(1)},
                         {2, 4, Rational(1)},
                         {3, 4, Rational(1)},
                         {4, 1, Rational(-1)},
                         {4, 2, Rational(-1)},
                         {4, 3, Rational(-1)},
                         {4, 5, Rational(1)},
                         {5, 1, Rational(-1)},
                         {5, 2, Rational(-1)},
                         {5, 3, Rational(-1)}}));
  const Instance v2 = gen_duplex_star(5, 2);
  EXPECT_EQ(v2.profile.value(3, 0), 0);
  EXPECT_EQ(v2.profile.value(3, 4), 1);
  EXPECT_EQ(v2.profile.arcs().size(), 7u);
  EXPECT_THROW(gen_duplex_star(3, 1), ValidationError);
}

TEST(GeneratorTest, SevenCycles) {
  std::vector<Arc> cycle;
  for (AgentId i = 0; i < 7; ++i) cycle.push_back({i, (i + 1) % 7, 1});
  std::sort(cycle.begin(), cycle.end(), [](const Arc& x, const Arc& y) {
    return std::pair(x.from, x.to) < std::pair(y.from, y.to);
  });
  EXPECT_EQ(gen_simple_cycle7(1).profile.arcs(), cycle);
  const ValuationProfile chord = gen_simple_cycle7(2).profile;
  EXPECT_EQ(chord.arcs().size(), 8u);
  EXPECT_EQ(chord.value(1, 3), 1);
  EXPECT_EQ(chord.value(3, 1), 0);
}

TEST(GeneratorTest, FourCycleAndComplete) {
  const Instance four = gen_four_cycle();
  EXPECT_EQ(four.profile.arcs(),
            arcs_1based({{1, 2, Rational(1)}, {2, 3, Rational(1)},
                         {3, 4, Rational(1)}, {4, 1, Rational(1)}}));
  EXPECT_EQ(four.profile.valuation_class(), ValuationClass::kDuplex);
  EXPECT_EQ(gen_complete_reciprocal(6).profile.arcs().size(), 30u);
}

TEST(RandomTest, DensityExtremes) {
  for (auto cls : {ValuationClass::kGeneral, ValuationClass::kSimple}) {
    EXPECT_TRUE(gen_random(cls, 5, Rational(0), 7).profile.arcs().empty());
    EXPECT_EQ(gen_random(cls, 5, Rational(1), 7).profile.arcs().size(), 20u);
  }
  EXPECT_THROW(gen_random(ValuationClass::kSimple, 5, Rational(3, 2), 7),
               ValidationError);
}

TEST(RandomTest, SeedDeterministicAndValid) {
  for (auto cls : {ValuationClass::kGeneral, ValuationClass::kNonNegative,
                   ValuationClass::kDuplex, ValuationClass::kSimple}) {
    const Instance a = gen_random(cls, 6, Rational(1, 2), 123);
    EXPECT_EQ(a, gen_random(cls, 6, Rational(1, 2), 123));
    EXPECT_NE(a.profile, gen_random(cls, 6, Rational(1, 2), 124).profile);
    EXPECT_TRUE(validate(a.profile).empty());
    for (const Arc& arc : a.profile.arcs()) {
      EXPECT_LE(denominator(arc.weight), 100);
    }
  }
}

TEST(RngTest, BoundsAndExactBernoulli) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    const auto x = rng.between(-3, 3);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
    EXPECT_LT(rng.below(7), 7u);
  }
  for (int t = 0; t < 100; ++t) {
    EXPECT_FALSE(rng.bernoulli(Rational(0)));
    EXPECT_TRUE(rng.bernoulli(Rational(1)));
  }
}

TEST(FormatTest, SerializesSevenCycle) {
  const std::string text = serialize_instance(gen_simple_cycle7(1));
  EXPECT_EQ(text,
            "hedonic 1\nagents 7\nclass simple\ngame fhg\n"
            "# label: simple-cycle7 variant=1\n"
            "v 1 2 1/1\nv 2 3 1/1\nv 3 4 1/1\nv 4 5 1/1\nv 5 6 1/1\n"
            "v 6 7 1/1\nv 7 1 1/1\n");
}

TEST(FormatTest, RoundTripsGeneratedInstances) {
  std::vector<Instance> all = {
      gen_general_gap(kEps, 1), gen_general_gap(kEps, 2),
      gen_nonneg_cycle(8, Rational(1, 100), Rational(1, 10000)),
      gen_duplex_star(7, 1), gen_duplex_star(7, 2), gen_simple_cycle7(2),
      gen_four_cycle(), gen_complete_reciprocal(5)};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    all.push_back(gen_random(static_cast<ValuationClass>(seed % 4),
                             1 + seed % 8, Rational(2, 3), seed,
                             seed % 2 ? GameKind::kFhg : GameKind::kAshg));
  }
  for (const Instance& inst : all) {
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst) << inst.label;
  }
}

TEST(FormatTest, AcceptsCommentsAndBlankLines) {
  const Instance inst = parse_instance(
      "# leading comment\n\nhedonic 1\nagents 2\nclass simple # tag\n"
      "game ashg\nv 1 2 1   # one arc\n\n");
  EXPECT_EQ(inst.profile.value(0, 1), 1);
  EXPECT_EQ(inst.label, "");
}

TEST(FormatTest, ReportsErrorsWithLineNumbers) {
  EXPECT_NE(error_of(kHeader + "v 1 1 1\n").find("line 5"), std::string::npos);
  EXPECT_NE(error_of(kHeader + "v 1 1 1\n").find("diagonal"),
            std::string::npos);
  EXPECT_NE(error_of(kHeader + "v 1 2 1/2\n").find("class"),
            std::string::npos);
  EXPECT_NE(error_of(kHeader + "v 1 4 1\n").find("line 5"), std::string::npos);
  EXPECT_NE(error_of(kHeader + "v 1 2 1\nv 1 2 -1\n").find("line 6"),
            std::string::npos);
  EXPECT_NE(error_of("hedonic 2\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("hedonic 1\nclass simple\n").find("line 2"),
            std::string::npos);
  EXPECT_NE(error_of("hedonic 1\nagents 0\n").find("line 2"),
            std::string::npos);
  EXPECT_FALSE(error_of(kHeader + "v 1 2 0\n").empty());
  EXPECT_FALSE(error_of(kHeader + "w 1 2 1\n").empty());
  EXPECT_FALSE(error_of("hedonic 1\nagents 3\nclass duplex\n").empty());
}

TEST(FormatTest, FilesRoundTrip) {
  const auto path =
      std::filesystem::temp_directory_path() / "hedonic_instances_test.hg";
  const Instance inst = gen_duplex_star(6, 2);
  write_instance_file(path.string(), inst);
  EXPECT_EQ(read_instance_file(path.string()), inst);
  std::filesystem::remove(path);
  EXPECT_THROW(read_instance_file(path.string()), ValidationError);
}

TEST(CorpusTest, ShippedFilesParse) {
  std::size_t files = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(HEDONIC_CORPUS_DIR)) {
    if (entry.path().extension() != ".hg") continue;
    ++files;
    const Instance inst = read_instance_file(entry.path().string());
    EXPECT_TRUE(validate(inst.profile).empty()) << entry.path();
  }
  EXPECT_GE(files, 8u);
}

}  // namespace
}  // namespace hedonic

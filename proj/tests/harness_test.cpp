#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <regex>

#include "shardstab/harness.hpp"

using namespace shardstab;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(TypeSpec, Parsing) {
  EXPECT_EQ(parse_type_spec("A3").kind, TypeSpec::Kind::dynkin);
  EXPECT_EQ(parse_type_spec("A3").arrangement.size(), 6u);
  EXPECT_EQ(parse_type_spec("octagon").kind, TypeSpec::Kind::rank2);
  EXPECT_EQ(parse_type_spec("A2path").kind, TypeSpec::Kind::path_a2);
  auto custom = parse_type_spec("rank2:1,0;0,1;1,1");
  EXPECT_EQ(custom.kind, TypeSpec::Kind::rank2);
  EXPECT_EQ(custom.arrangement.size(), 3u);
  for (const char* bad : {"Z2", "rank2:", "rank2:1", "rank2:1,x", "rank2:1,2,3", "D2"})
    EXPECT_THROW(parse_type_spec(bad), std::invalid_argument) << bad;
}

TEST(Report, JsonShape) {
  VerificationReport r;
  r.type_label = "A2";
  CheckResult ok{"b.ok", Scope::exhaustive, true, 3, nullptr, 0.5};
  CheckResult bad{"a.bad", Scope::sampled, false, 1, json{{"phi", {"1/2", "0"}}}, 0.25};
  r.checks = {ok, bad};
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.find("a.bad"), nullptr);
  auto j = r.to_json();
  EXPECT_EQ(j["type"], "A2");
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["checks"][0]["name"], "a.bad");
  EXPECT_EQ(j["checks"][0]["scope"], "sampled");
  EXPECT_EQ(j["checks"][0]["counterexample"]["phi"][0], "1/2");
  EXPECT_FALSE(j.contains("timings"));
  EXPECT_EQ(r.to_json(true)["timings"]["b.ok"], 0.5);
}

TEST(Verify, LatticeCounts) {
  auto a2 = verify_lattice(parse_type_spec("A2"));
  EXPECT_TRUE(a2.passed());
  EXPECT_EQ(a2.find("lattice.axioms")->count, 216u);
  EXPECT_EQ(a2.find("lattice.semidistributive")->count, 216u);
  EXPECT_TRUE(verify_lattice(parse_type_spec("A1")).passed());
  auto a3 = verify_lattice(parse_type_spec("A3"));
  EXPECT_TRUE(a3.passed());
  EXPECT_EQ(a3.find("lattice.semidistributive")->count, 13824u);
}

TEST(Verify, Bijection) {
  for (auto [type, count] : {std::pair{"A2", 4u}, std::pair{"A3", 11u}, std::pair{"octagon", 6u}}) {
    auto r = verify_shard_bijection(parse_type_spec(type));
    EXPECT_TRUE(r.passed()) << type;
    EXPECT_EQ(r.find("bijection.shards")->count, count) << type;
  }
}

TEST(Verify, MainSuite) {
  auto a1 = verify_semistability(parse_type_spec("A1"));
  EXPECT_TRUE(a1.passed());
  auto a2 = verify_semistability(parse_type_spec("A2"));
  EXPECT_TRUE(a2.passed()) << a2.to_json().dump();
  EXPECT_EQ(a2.find("main.grid")->count, 16u);
  EXPECT_EQ(a2.find("ses.codim2")->count, 2u);
  EXPECT_THROW(verify_semistability(parse_type_spec("D4")), std::invalid_argument);
  EXPECT_THROW(verify_semistability(parse_type_spec("octagon")), std::invalid_argument);
}

TEST(Verify, HereditaryPicture) {
  auto r = verify_semistability(parse_type_spec("A2path"));
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
  auto all = run_verification(parse_type_spec("A2path"), "all");
  EXPECT_TRUE(all.passed());
  EXPECT_THROW(run_verification(parse_type_spec("A2"), "everything"), std::invalid_argument);
}

TEST(Verify, FailuresCarryCounterexamples) {
  // Primes that cannot agree make every enumeration throw; the checks must fail loudly.
  RunOptions options;
  options.primes = {};
  auto r = verify_semistability(parse_type_spec("A2path"), options);
  EXPECT_FALSE(r.passed());
  for (const auto& c : r.checks) {
    if (!c.passed) {
      EXPECT_FALSE(c.counterexample.is_null());
    }
  }
}

TEST(Configurations, CountsPerType) {
  EXPECT_EQ(codim2_configurations(build_brick_table(build_cartan('A', 2), kDefaultPrimes, false)).size(), 2u);
  EXPECT_EQ(codim2_configurations(build_brick_table(build_cartan('A', 3), kDefaultPrimes, false)).size(), 8u);
}

TEST(Configurations, GenericPointAvoidsOtherHyperplanes) {
  auto arr = reflection_arrangement(build_cartan('A', 3));
  for (const auto& flat : codim2_flats(arr)) {
    auto x = generic_point(arr, flat);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      bool member = std::find(flat.hyperplanes.begin(), flat.hyperplanes.end(), k) != flat.hyperplanes.end();
      EXPECT_EQ(arr.side(k, x) == 0, member);
    }
  }
}

TEST(Describe, BuildAndShards) {
  auto b = describe_build(parse_type_spec("A2"));
  EXPECT_EQ(b["algebra"]["dimension"], 4);
  EXPECT_EQ(b["weyl_group_order"], 6);
  EXPECT_EQ(b["quiver_arrows"][0], json::array({1, 2}));
  auto s = describe_shards(parse_type_spec("octagon"));
  EXPECT_EQ(s["chambers"].size(), 8u);
  EXPECT_EQ(s["shards"].size(), 6u);
  EXPECT_EQ(s["join_irreducibles"].size(), 6u);
  auto br = describe_bricks(parse_type_spec("A2"));
  std::set<std::string> names;
  for (const auto& e : br["bricks"]) names.insert(e["name"].get<std::string>());
  EXPECT_EQ(names, (std::set<std::string>{"S_1", "S_2", "P_1", "P_2"}));
  EXPECT_THROW(describe_bricks(parse_type_spec("octagon")), std::invalid_argument);
}

TEST(Render, A2Picture) {
  auto svg = render_rank2(parse_type_spec("A2"));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  // Two full lines and two half-lines: six rays.
  EXPECT_EQ(occurrences(svg, "<line "), 4u);
  for (const char* label : {"S<tspan", "P<tspan"}) EXPECT_EQ(occurrences(svg, label), 2u);
  EXPECT_EQ(occurrences(svg, ">1</tspan>"), 2u);
  EXPECT_EQ(occurrences(svg, ">2</tspan>"), 2u);
  EXPECT_EQ(svg, render_rank2(parse_type_spec("A2")));
}

TEST(Render, HalfLinesLeaveAGapAtTheOrigin) {
  auto svg = render_rank2(parse_type_spec("A2"));
  std::regex line(R"re(<line x1="([-0-9.]+)" y1="([-0-9.]+)")re");
  int gapped = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
    double dx = std::stod((*it)[1]) - 200, dy = std::stod((*it)[2]) - 200;
    double r = std::hypot(dx, dy);
    if (r > 1 && r < 50) ++gapped;
  }
  EXPECT_EQ(gapped, 2);
}

TEST(Render, OtherTypes) {
  auto octagon = render_rank2(parse_type_spec("octagon"));
  EXPECT_EQ(occurrences(octagon, "<line "), 6u);
  EXPECT_EQ(occurrences(octagon, "H<tspan"), 6u);
  auto a1 = render_rank2(parse_type_spec("A1"));
  EXPECT_EQ(occurrences(a1, "<line "), 1u);
  auto path = render_rank2(parse_type_spec("A2path"));
  EXPECT_EQ(occurrences(path, "<line "), 3u);
  EXPECT_THROW(render_rank2(parse_type_spec("A3")), std::invalid_argument);
}

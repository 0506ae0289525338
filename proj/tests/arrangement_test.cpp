#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "oracles.hpp"
#include "shardstab/arrangement.hpp"

using namespace shardstab;

namespace {

struct Model {
  WeylGroup group;
  ShardModel model;
  explicit Model(const CartanData& c) : group(c), model(build_shard_model(reflection_arrangement(c), &group)) {}
};

// Minimum of all G with G v lower = upper, by scanning every element.
std::size_t brute_j_label(const RegionPoset& p, const Cover& c) {
  std::vector<std::size_t> hits;
  for (std::size_t g = 0; g < p.size(); ++g)
    if (p.join(g, c.lower) == c.upper) hits.push_back(g);
  for (std::size_t g : hits)
    if (std::all_of(hits.begin(), hits.end(), [&](std::size_t h) { return p.leq(g, h); })) return g;
  return p.size();
}

}  // namespace

TEST(Arrangement, ReflectionNormals) {
  auto a2 = reflection_arrangement(build_cartan('A', 2));
  EXPECT_EQ(a2.normals, (std::vector<IntVector>{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(a2.base_point, (RationalVector{1, 1}));
  EXPECT_EQ(reflection_arrangement(build_cartan('A', 1)).size(), 1u);
  EXPECT_EQ(reflection_arrangement(build_cartan('D', 4)).size(), 12u);
}

TEST(Arrangement, Rank2Chambers) {
  auto octagon = octagon_arrangement();
  EXPECT_EQ(octagon.size(), 4u);
  EXPECT_EQ(chambers(octagon).size(), 8u);
  EXPECT_EQ(chambers(rank2_arrangement({{1, 0}})).size(), 2u);
  EXPECT_THROW(rank2_arrangement({{0, 0}}), std::invalid_argument);
}

TEST(Arrangement, A2ChambersAndRepresentatives) {
  auto c = build_cartan('A', 2);
  WeylGroup g(c);
  auto ch = chambers(reflection_arrangement(c), &g);
  ASSERT_EQ(ch.size(), 6u);
  EXPECT_EQ(ch[g.from_word(std::vector<int>{0})].rep_point, (RationalVector{-1, 2}));
  auto a1 = chambers(reflection_arrangement(build_cartan('A', 1)), nullptr);
  ASSERT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1[0].signs, std::vector<int>{1});
  EXPECT_EQ(a1[1].signs, std::vector<int>{-1});
}

TEST(Arrangement, Rank2PathMatchesReflectionPoset) {
  auto c = build_cartan('A', 2);
  WeylGroup g(c);
  auto refl = build_shard_model(reflection_arrangement(c), &g);
  auto plane = build_shard_model(rank2_arrangement({{1, 0}, {0, 1}, {1, 1}}, RationalVector{1, 1}));
  ASSERT_EQ(refl.poset.size(), plane.poset.size());
  // Match chambers by the sign of each normal.
  auto signs_by_normal = [](const ShardModel& m, std::size_t chamber) {
    std::map<IntVector, int> out;
    for (std::size_t k = 0; k < m.arrangement.size(); ++k) out[m.arrangement.normals[k]] = m.chambers[chamber].signs[k];
    return out;
  };
  std::map<std::map<IntVector, int>, std::size_t> plane_index;
  for (std::size_t x = 0; x < plane.poset.size(); ++x) plane_index[signs_by_normal(plane, x)] = x;
  for (std::size_t a = 0; a < refl.poset.size(); ++a)
    for (std::size_t b = 0; b < refl.poset.size(); ++b)
      EXPECT_EQ(refl.poset.leq(a, b),
                plane.poset.leq(plane_index.at(signs_by_normal(refl, a)), plane_index.at(signs_by_normal(refl, b))));
  EXPECT_EQ(refl.shards.size(), plane.shards.size());
}

TEST(Poset, A2WeakOrder) {
  Model m(build_cartan('A', 2));
  const auto& p = m.model.poset;
  EXPECT_EQ(p.covers().size(), 6u);
  // Two maximal chains of length 3.
  std::function<int(std::size_t)> chains = [&](std::size_t x) {
    if (p.upper_covers(x).empty()) return 1;
    int k = 0;
    for (auto c : p.upper_covers(x)) k += chains(p.covers()[c].upper);
    return k;
  };
  EXPECT_EQ(chains(p.bottom()), 2);
  EXPECT_EQ(m.group[p.top()].length, 3);
}

TEST(Poset, A1Chain) {
  Model m(build_cartan('A', 1));
  EXPECT_EQ(m.model.poset.size(), 2u);
  EXPECT_EQ(m.model.poset.covers().size(), 1u);
  EXPECT_TRUE(m.model.poset.leq(0, 1));
}

TEST(Poset, A3CoversAndJoinIrreduciblesMatchPermutations) {
  Model m(build_cartan('A', 3));
  int descent_total = 0, one_descent = 0;
  for (const auto& p : oracle::permutations(4)) {
    descent_total += oracle::descents(p);
    one_descent += oracle::descents(p) == 1;
  }
  EXPECT_EQ(m.model.poset.size(), 24u);
  EXPECT_EQ(m.model.poset.covers().size(), static_cast<std::size_t>(descent_total));
  EXPECT_EQ(descent_total, 36);
  EXPECT_EQ(m.model.join_irreducibles.size(), static_cast<std::size_t>(one_descent));
  EXPECT_EQ(one_descent, 11);
}

TEST(Poset, JoinIrreducibleCounts) {
  auto a2 = Model(build_cartan('A', 2));
  std::set<std::size_t> ji;
  for (const auto& j : a2.model.join_irreducibles) ji.insert(j.element);
  std::set<std::size_t> expected;
  for (std::vector<int> w : {std::vector<int>{0}, {1}, {0, 1}, {1, 0}}) expected.insert(a2.group.from_word(w));
  EXPECT_EQ(ji, expected);
  EXPECT_EQ(Model(build_cartan('A', 1)).model.join_irreducibles.size(), 1u);
  EXPECT_EQ(build_shard_model(octagon_arrangement()).join_irreducibles.size(), 6u);
}

TEST(Poset, JLabelMatchesBruteForce) {
  for (auto model : {Model(build_cartan('A', 2)).model, Model(build_cartan('A', 3)).model,
                     build_shard_model(octagon_arrangement())}) {
    const auto& p = model.poset;
    for (std::size_t c = 0; c < p.covers().size(); ++c) EXPECT_EQ(j_label(p, c), brute_j_label(p, p.covers()[c]));
    for (const auto& j : model.join_irreducibles) EXPECT_EQ(j_label(p, j.cover), j.element);
  }
  Model a2(build_cartan('A', 2));
  const auto& p = a2.model.poset;
  auto s1 = a2.group.from_word(std::vector<int>{0});
  EXPECT_EQ(j_label(p, *p.cover_index(p.bottom(), s1)), s1);
}

TEST(Flats, CountsMatchBruteForce) {
  EXPECT_TRUE(codim2_flats(reflection_arrangement(build_cartan('A', 1))).empty());
  auto a2 = codim2_flats(reflection_arrangement(build_cartan('A', 2)));
  ASSERT_EQ(a2.size(), 1u);
  EXPECT_EQ(a2[0].hyperplanes, (std::vector<std::size_t>{0, 1, 2}));
  for (char f : {'A', 'D'}) {
    auto arr = reflection_arrangement(build_cartan(f, f == 'A' ? 3 : 4));
    std::set<std::set<std::size_t>> lib;
    for (const auto& flat : codim2_flats(arr)) lib.insert({flat.hyperplanes.begin(), flat.hyperplanes.end()});
    EXPECT_EQ(lib, oracle::codim2_flats(arr.normals));
    if (f == 'A') {
      EXPECT_EQ(lib.size(), 7u);
    }
  }
}

TEST(Flats, SplitSets) {
  auto a2 = reflection_arrangement(build_cartan('A', 2));
  auto flat = codim2_flats(a2)[0];
  EXPECT_EQ(split_set(a2, flat).split, (std::vector<std::size_t>{2}));
  auto octagon = octagon_arrangement();
  EXPECT_EQ(split_set(octagon, codim2_flats(octagon)[0]).split, (std::vector<std::size_t>{1, 2}));
  auto a3 = reflection_arrangement(build_cartan('A', 3));
  for (const auto& f : codim2_flats(a3)) {
    if (f.hyperplanes.size() == 2) {
      EXPECT_TRUE(split_set(a3, f).split.empty());
    }
  }
}

TEST(Shards, Counts) {
  auto a2 = Model(build_cartan('A', 2)).model;
  ASSERT_EQ(a2.shards.size(), 4u);
  int whole = 0, half = 0;
  for (const auto& s : a2.shards) {
    if (s.cuts.empty()) ++whole;
    else if (s.hyperplane == 2 && s.cuts.size() == 1) ++half;
  }
  EXPECT_EQ(whole, 2);
  EXPECT_EQ(half, 2);
  EXPECT_EQ(Model(build_cartan('A', 1)).model.shards.size(), 1u);
  EXPECT_EQ(Model(build_cartan('A', 3)).model.shards.size(), 11u);
  EXPECT_EQ(build_shard_model(octagon_arrangement()).shards.size(), 6u);
}

TEST(Shards, CoverAssignmentsInA2) {
  Model a2(build_cartan('A', 2));
  const auto& m = a2.model;
  const auto& p = m.poset;
  auto s1 = a2.group.from_word(std::vector<int>{0});
  auto first = m.cover_shard[*p.cover_index(p.bottom(), s1)];
  EXPECT_EQ(m.shards[first].hyperplane, 0u);
  EXPECT_TRUE(m.shards[first].cuts.empty());
  // The top chamber is walled by the simple hyperplanes, so its lower covers
  // carry whole lines.
  for (auto c : p.lower_covers(p.top())) {
    EXPECT_NE(p.covers()[c].hyperplane, 2u);
    EXPECT_TRUE(m.shards[m.cover_shard[c]].cuts.empty());
  }
  // s_1 < s_1 s_2 and s_2 < s_2 s_1 cross (1,1)-perp on opposite half-lines.
  std::set<std::size_t> halves;
  for (auto [u, w] : {std::pair{std::vector<int>{0}, std::vector<int>{0, 1}}, std::pair{std::vector<int>{1}, std::vector<int>{1, 0}}}) {
    auto c = *p.cover_index(a2.group.from_word(u), a2.group.from_word(w));
    EXPECT_EQ(p.covers()[c].hyperplane, 2u);
    EXPECT_EQ(m.shards[m.cover_shard[c]].cuts.size(), 1u);
    halves.insert(m.cover_shard[c]);
  }
  EXPECT_EQ(halves.size(), 2u);
  EXPECT_EQ(shards(reflection_arrangement(build_cartan('A', 1)), nullptr).size(), 1u);
}

TEST(Shards, ClosureMembership) {
  Model a3(build_cartan('A', 3));
  const auto& m = a3.model;
  StabilityFunctional zero(RationalVector(3, Rational(0)));
  for (const auto& s : m.shards) {
    EXPECT_TRUE(shard_closure_contains(m.arrangement, s, zero));
    EXPECT_TRUE(shard_closure_contains(m.arrangement, s, StabilityFunctional(s.witness)));
    for (const auto& t : m.shards) {
      if (&t != &s && t.hyperplane == s.hyperplane) {
        EXPECT_FALSE(shard_closure_contains(m.arrangement, s, StabilityFunctional(t.witness)));
      }
    }
  }
}

TEST(Regions, DeletionRestrictionMatchesChamberCount) {
  for (char f : {'A', 'D'})
    for (int n : {2, 3, 4}) {
      if (f == 'D' && n < 4) continue;
      auto c = build_cartan(f, n);
      auto arr = reflection_arrangement(c);
      std::vector<RationalVector> fs;
      for (const auto& v : arr.normals) fs.push_back(to_rational(v));
      EXPECT_EQ(count_regions(fs, n), WeylGroup(c).size());
    }
  auto octagon = octagon_arrangement();
  std::vector<RationalVector> fs;
  for (const auto& v : octagon.normals) fs.push_back(to_rational(v));
  EXPECT_EQ(count_regions(fs, 2), 8u);
}

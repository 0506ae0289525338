#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "shardstab/coxeter.hpp"

using namespace shardstab;

namespace {

std::vector<std::vector<int>> nested(const Matrix<int>& m) {
  std::vector<std::vector<int>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r));
  return out;
}

}  // namespace

TEST(Cartan, A2MatrixAndArrow) {
  auto c = build_cartan('A', 2);
  EXPECT_EQ(nested(c.cartan), (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
  ASSERT_EQ(c.quiver_arrows.size(), 1u);
  EXPECT_EQ(c.quiver_arrows[0], (Arrow{0, 1}));
  ASSERT_EQ(c.doubled_arrows.size(), 2u);
  EXPECT_EQ(c.doubled_arrows[1], (Arrow{1, 0}));
}

TEST(Cartan, A1) {
  auto c = build_cartan('A', 1);
  EXPECT_EQ(nested(c.cartan), (std::vector<std::vector<int>>{{2}}));
  EXPECT_TRUE(c.quiver_arrows.empty());
}

TEST(Cartan, D4BranchNodeAndPositiveDefinite) {
  auto c = build_cartan('D', 4);
  for (int v : {0, 2, 3}) EXPECT_EQ(c.cartan(1, v), -1);
  EXPECT_EQ(c.cartan(0, 2), 0);
  EXPECT_EQ(c.cartan(2, 3), 0);
  for (const auto& a : c.quiver_arrows) EXPECT_EQ(a.target, 1);
  // Sylvester: all leading principal minors positive.
  auto m = nested(c.cartan);
  std::vector<shardstab::Rational> minors;
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::vector<int>> sub;
    for (std::size_t i = 0; i < k; ++i) sub.emplace_back(m[i].begin(), m[i].begin() + k);
    minors.push_back(oracle::determinant(sub));
  }
  EXPECT_EQ(minors, (std::vector<shardstab::Rational>{2, 3, 4, 4}));
}

TEST(Cartan, ParseRejectsBadTypes) {
  EXPECT_EQ(DynkinType::parse("E6").label(), "E6");
  EXPECT_THROW(DynkinType::parse("D3"), std::invalid_argument);
  EXPECT_THROW(DynkinType::parse("E9"), std::invalid_argument);
  EXPECT_THROW(DynkinType::parse("B2"), std::invalid_argument);
  EXPECT_THROW(DynkinType::parse("A0"), std::invalid_argument);
  EXPECT_THROW(DynkinType::parse(""), std::invalid_argument);
}

TEST(Roots, A2) {
  auto roots = positive_roots(build_cartan('A', 2));
  std::vector<IntVector> coords;
  for (const auto& r : roots) coords.push_back(r.coords);
  EXPECT_EQ(coords, (std::vector<IntVector>{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(positive_roots(build_cartan('A', 1)).size(), 1u);
}

TEST(Roots, CountsMatchClosureAndCoxeterNumber) {
  struct Case {
    char family;
    int rank, coxeter;
  };
  for (auto [f, n, h] : {Case{'A', 3, 4}, Case{'A', 5, 6}, Case{'D', 4, 6}, Case{'D', 5, 8}, Case{'E', 6, 12}}) {
    auto c = build_cartan(f, n);
    auto roots = positive_roots(c);
    EXPECT_EQ(roots.size(), static_cast<std::size_t>(n * h / 2)) << f << n;
    std::set<std::vector<int>> lib;
    for (const auto& r : roots) lib.insert(r.coords);
    EXPECT_EQ(lib, oracle::root_closure(nested(c.cartan))) << f << n;
  }
  auto a4 = positive_roots(build_cartan('A', 4));
  std::set<std::vector<int>> lib;
  for (const auto& r : a4) lib.insert(r.coords);
  auto expect = oracle::type_a_roots(4);
  EXPECT_EQ(lib, std::set<std::vector<int>>(expect.begin(), expect.end()));
}

TEST(Weyl, A2LengthMultiset) {
  WeylGroup g(build_cartan('A', 2));
  std::multiset<int> lengths;
  for (const auto& e : g.elements()) lengths.insert(e.length);
  EXPECT_EQ(lengths, (std::multiset<int>{0, 1, 1, 2, 2, 3}));
  EXPECT_EQ(WeylGroup(build_cartan('A', 1)).size(), 2u);
}

TEST(Weyl, TypeALengthsMatchPermutationInversions) {
  for (int n : {2, 3, 4}) {
    WeylGroup g(build_cartan('A', n));
    std::map<int, int> lib, perm;
    for (const auto& e : g.elements()) ++lib[e.length];
    for (const auto& p : oracle::permutations(n + 1)) ++perm[oracle::inversions(p)];
    EXPECT_EQ(lib, perm) << "A" << n;
  }
}

TEST(Weyl, A3LongestElement) {
  WeylGroup g(build_cartan('A', 3));
  EXPECT_EQ(g.size(), 24u);
  int max_length = 0, at_max = 0;
  for (const auto& e : g.elements()) max_length = std::max(max_length, e.length);
  for (const auto& e : g.elements()) at_max += e.length == max_length;
  EXPECT_EQ(max_length, 6);
  EXPECT_EQ(at_max, 1);
  EXPECT_EQ(g[g.longest()].length, 6);
}

TEST(Weyl, D4Order) {
  WeylGroup g(build_cartan('D', 4));
  EXPECT_EQ(g.size(), 192u);
  EXPECT_EQ(g[g.longest()].length, 12);
}

TEST(Weyl, ActionOnClasses) {
  auto c = build_cartan('A', 2);
  auto s1 = simple_reflection_matrix(c, 0);
  EXPECT_EQ(act_on_class(s1, std::vector<int>{0, 1}), (IntVector{1, 1}));
  EXPECT_EQ(act_on_class(s1, std::vector<int>{1, 0}), (IntVector{-1, 0}));
  WeylGroup g(c);
  EXPECT_EQ(act_on_class(g[g.identity()], RootVector{{3, -2}}).coords, (IntVector{3, -2}));
}

TEST(Weyl, ActionOnFunctionals) {
  auto c = build_cartan('A', 2);
  auto phi = StabilityFunctional::from_ints(std::vector<int>{1, 1});
  EXPECT_EQ(reflect_functional(c, 0, phi).coords, (RationalVector{-1, 2}));
  auto fixed = StabilityFunctional::from_ints(std::vector<int>{0, 5});
  EXPECT_EQ(reflect_functional(c, 0, fixed), fixed);
  auto x = StabilityFunctional::from_ints(std::vector<int>{3, -7});
  EXPECT_EQ(reflect_functional(c, 0, reflect_functional(c, 0, x)), x);
}

TEST(Weyl, ReducedWords) {
  WeylGroup a2(build_cartan('A', 2));
  EXPECT_EQ(reduced_words(a2, a2.longest()), (std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(reduced_words(a2, a2.identity()), (std::vector<std::vector<int>>{{}}));
  for (int n : {3, 4}) {
    WeylGroup g(build_cartan('A', n));
    oracle::Perm longest;
    for (int i = n; i >= 0; --i) longest.push_back(i);
    std::map<oracle::Perm, std::uint64_t> memo;
    const auto words = reduced_words(g, g.longest()).size();
    EXPECT_EQ(words, oracle::reduced_word_count(longest, memo));
    EXPECT_EQ(words, oracle::staircase_tableaux(n + 1));
  }
}

TEST(Weyl, ReducedWordCountsMatchPermutationsForEveryElement) {
  WeylGroup g(build_cartan('A', 3));
  std::map<std::uint64_t, int> lib, perm;
  for (std::size_t w = 0; w < g.size(); ++w) ++lib[reduced_words(g, w).size()];
  std::map<oracle::Perm, std::uint64_t> memo;
  for (const auto& p : oracle::permutations(4)) ++perm[oracle::reduced_word_count(p, memo)];
  EXPECT_EQ(lib, perm);
}

// Invariants, checked exhaustively where small and on seeded random samples
// otherwise.

#include <gtest/gtest.h>

#include <random>

#include "shardstab/harness.hpp"

using namespace shardstab;

namespace {

class PerType : public ::testing::TestWithParam<const char*> {};

std::vector<std::size_t> ascents(const WeylGroup& g, std::size_t w) {
  std::vector<std::size_t> out;
  for (int i = 0; i < static_cast<int>(g.rank()); ++i)
    if (g[g.right_multiply(w, i)].length > g[w].length) out.push_back(i);
  return out;
}

}  // namespace

TEST_P(PerType, LengthChangesByOne) {
  WeylGroup g(build_cartan(DynkinType::parse(GetParam())));
  for (std::size_t w = 0; w < g.size(); ++w)
    for (int i = 0; i < static_cast<int>(g.rank()); ++i)
      EXPECT_EQ(std::abs(g[g.right_multiply(w, i)].length - g[w].length), 1);
}

TEST_P(PerType, PositiveRootsCountLongestLength) {
  WeylGroup g(build_cartan(DynkinType::parse(GetParam())));
  EXPECT_EQ(static_cast<int>(g.roots().size()), g[g.longest()].length);
}

TEST_P(PerType, RootsAreStableUnderTheGroup) {
  WeylGroup g(build_cartan(DynkinType::parse(GetParam())));
  std::set<IntVector> roots;
  for (const auto& r : g.roots()) {
    roots.insert(r.coords);
    IntVector neg = r.coords;
    for (auto& x : neg) x = -x;
    roots.insert(neg);
  }
  for (const auto& w : g.elements())
    for (const auto& r : g.roots()) EXPECT_TRUE(roots.count(act_on_class(w, r).coords));
}

TEST_P(PerType, FacetPointsLieInExactlyOneShard) {
  WeylGroup g(build_cartan(DynkinType::parse(GetParam())));
  auto m = build_shard_model(reflection_arrangement(g.cartan()), &g);
  for (const auto& c : m.poset.covers()) {
    auto q = facet_point(m.arrangement, m.chambers, c);
    int inside = 0;
    for (const auto& s : m.shards) inside += s.hyperplane == c.hyperplane && shard_interior_contains(m.arrangement, s, q);
    EXPECT_EQ(inside, 1);
  }
}

TEST_P(PerType, LatticeSuitesPass) {
  auto spec = parse_type_spec(GetParam());
  auto lattice = verify_lattice(spec);
  auto bijection = verify_shard_bijection(spec);
  EXPECT_TRUE(lattice.passed()) << lattice.to_json().dump();
  EXPECT_TRUE(bijection.passed()) << bijection.to_json().dump();
  const std::size_t n = lattice.find("lattice.axioms") ? WeylGroup(*spec.cartan).size() : 0;
  EXPECT_EQ(lattice.find("lattice.axioms")->count, n * n * n);
}

INSTANTIATE_TEST_SUITE_P(Types, PerType, ::testing::Values("A1", "A2", "A3", "A4", "D4"));

TEST(Coxeter, FunctionalActionAlongReducedWords) {
  for (const char* t : {"A1", "A2", "A3"}) {
    auto c = build_cartan(DynkinType::parse(t));
    WeylGroup g(c);
    std::mt19937_64 rng(11);
    for (const auto& w : g.elements())
      for (int trial = 0; trial < 4; ++trial) {
        RationalVector x;
        for (int i = 0; i < c.rank(); ++i) x.push_back(Rational(static_cast<long>(rng() % 11) - 5));
        StabilityFunctional phi(x), stepped(x);
        for (int i : w.reduced_word) stepped = reflect_functional(c, i, stepped);
        EXPECT_EQ(act_on_functional(w, phi), stepped) << t;
      }
  }
}

TEST(Ideals, AscentsShrinkDescentsFix) {
  for (const char* t : {"A2", "A3"}) {
    auto c = build_cartan(DynkinType::parse(t));
    auto alg = build_algebra(c);
    WeylGroup g(c);
    auto ideals = element_ideals(alg, g);
    for (std::size_t w = 0; w < g.size(); ++w) {
      auto up = ascents(g, w);
      for (int i = 0; i < c.rank(); ++i) {
        auto prod = ideal_product(alg, ideals[w], ideal_of_vertex(alg, i));
        bool ascent = std::find(up.begin(), up.end(), static_cast<std::size_t>(i)) != up.end();
        if (ascent) {
          EXPECT_EQ(prod, ideals[g.right_multiply(w, i)]);
          EXPECT_LT(prod.dimension(), ideals[w].dimension());
          EXPECT_TRUE(contains(ideals[w], prod));
        } else {
          EXPECT_EQ(prod, ideals[w]);
        }
      }
      EXPECT_TRUE(is_two_sided(alg, ideals[w]));
    }
  }
}

class Stability : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { table_ = new BrickTable(build_brick_table(build_cartan('A', 3))); }
  static void TearDownTestSuite() {
    delete table_;
    table_ = nullptr;
  }
  static BrickTable* table_;
};

BrickTable* Stability::table_ = nullptr;

TEST_F(Stability, DirectAndPredictedAgreeOnRandomFunctionals) {
  std::mt19937_64 rng(5);
  const auto& arr = table_->model.arrangement;
  for (int trial = 0; trial < 200; ++trial) {
    RationalVector x(3);
    for (auto& v : x) v = Rational(static_cast<long>(rng() % 9) - 4);
    // Half the samples are pushed onto a random hyperplane, where bricks can be semistable.
    if (trial % 2) {
      const auto& n = arr.normals[rng() % arr.size()];
      Rational along = dot(std::span<const Rational>(x), std::span<const int>(n));
      Rational norm = 0;
      for (int v : n) norm += v * v;
      for (std::size_t i = 0; i < 3; ++i) x[i] -= along / norm * n[i];
    }
    auto sets = semistable_bricks_at(StabilityFunctional(x), *table_);
    EXPECT_TRUE(sets.agree()) << to_string(x[0]) << "," << to_string(x[1]) << "," << to_string(x[2]);
  }
}

TEST_F(Stability, OtherShardsOfTheSameHyperplaneDestabilise) {
  const auto& m = table_->model;
  for (const auto& e : table_->entries) {
    for (std::size_t s = 0; s < m.shards.size(); ++s) {
      if (s != e.shard && m.shards[s].hyperplane == e.hyperplane) {
        EXPECT_FALSE(is_semistable(*e.submodules, StabilityFunctional(m.shards[s].witness)));
      }
    }
  }
}

TEST_F(Stability, ChamberInteriorsHaveNoSemistableModules) {
  auto mods = standard_modules(table_->algebra);
  auto reg = regular_module(table_->algebra);
  for (const auto& ch : table_->model.chambers) {
    StabilityFunctional phi(ch.rep_point);
    for (const auto& e : table_->entries) EXPECT_FALSE(is_semistable(*e.submodules, phi));
    for (const auto& p : mods.projectives) EXPECT_FALSE(is_semistable(p, phi));
    EXPECT_FALSE(is_semistable(reg, phi));
  }
}

TEST_F(Stability, FiltrationFactorsAreSemistableBricksSummingToTheClass) {
  std::mt19937_64 rng(9);
  const auto& entries = table_->entries;
  for (int trial = 0; trial < 12; ++trial) {
    const auto& a = entries[rng() % entries.size()];
    const auto& b = entries[rng() % entries.size()];
    // At the origin anything goes; at a witness only that shard's brick.
    bool origin = trial % 2 == 0;
    QuiverRep m = origin ? direct_sum(a.brick, b.brick) : direct_sum(a.brick, a.brick);
    StabilityFunctional phi =
        origin ? StabilityFunctional(RationalVector(3, Rational(0))) : StabilityFunctional(table_->model.shards[a.shard].witness);
    auto parts = brick_filtration(m, phi);
    IntVector total(3, 0);
    for (const auto& f : parts) {
      EXPECT_TRUE(is_brick(f));
      EXPECT_TRUE(is_semistable(f, phi));
      for (int v = 0; v < 3; ++v) total[v] += f.dims[v];
    }
    EXPECT_EQ(total, m.dims);
  }
}

TEST(Reports, RerunsAreByteIdentical) {
  RunOptions options;
  options.seed = 3;
  auto spec = parse_type_spec("A2");
  EXPECT_EQ(run_verification(spec, "all", options).to_json().dump(), run_verification(spec, "all", options).to_json().dump());
}

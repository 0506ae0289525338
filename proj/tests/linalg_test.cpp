#include <gtest/gtest.h>

#include "shardstab/linalg.hpp"
#include "shardstab/matrix.hpp"
#include "shardstab/rational.hpp"

using namespace shardstab;

namespace {

RationalMatrix rows(std::vector<std::vector<int>> r) {
  RationalMatrix m(0, r.empty() ? 0 : r[0].size());
  for (const auto& v : r) m.append_row(to_rational(v));
  return m;
}

}  // namespace

TEST(Rational, PrintsAndParsesFractions) {
  EXPECT_EQ(to_string(parse_rational("3/6")), "1/2");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("x/2"), std::invalid_argument);
}

TEST(Rational, DotProducts) {
  RationalVector a = {Rational(1, 2), Rational(2)};
  std::vector<int> b = {4, -1};
  EXPECT_EQ(dot(std::span<const Rational>(a), std::span<const int>(b)), Rational(0));
}

TEST(Linalg, RankAndNullspace) {
  auto m = rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  auto n = nullspace(m);
  ASSERT_EQ(n.rows(), 1u);
  for (std::size_t r = 0; r < m.rows(); ++r)
    EXPECT_EQ(dot(std::span<const Rational>(m.row(r)), std::span<const Rational>(n.row(0))), 0);
}

TEST(Linalg, DeterminantMatchesCofactorExpansion) {
  auto m = rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  // 2(4-1) - (-1)(-2-0) = 6 - 2
  EXPECT_EQ(determinant(m), Rational(4));
  EXPECT_EQ(determinant(rows({{1, 2}, {2, 4}})), Rational(0));
}

TEST(Linalg, SolveFindsExactSolutions) {
  auto m = rows({{1, 1}, {1, -1}});
  auto x = solve(m, {Rational(3), Rational(1)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve(rows({{1, 1}, {1, 1}}), {Rational(1), Rational(2)}));
}

TEST(Linalg, RowSpaceMembership) {
  auto m = rows({{1, 0, 1}, {0, 1, 1}});
  EXPECT_TRUE(in_row_space(m, to_rational(std::vector<int>{2, 3, 5})));
  EXPECT_FALSE(in_row_space(m, to_rational(std::vector<int>{1, 1, 1})));
}

TEST(Linalg, RowCoordinatesRecoverCoefficients) {
  auto basis = rows({{1, 1, 0}, {0, 1, 1}});
  RowCoordinates coords(basis);
  auto c = coords.coords(to_rational(std::vector<int>{2, 5, 3}));
  EXPECT_EQ(c, (RationalVector{2, 3}));
  EXPECT_FALSE(coords.try_coords(to_rational(std::vector<int>{1, 0, 0})));
  EXPECT_THROW(coords.coords(to_rational(std::vector<int>{1, 0, 0})), std::domain_error);
}

TEST(Linalg, QuotientSpaceDimension) {
  auto upper = rows({{1, 0, 0}, {0, 1, 0}});
  auto lower = rows({{1, 1, 0}});
  QuotientSpace q(upper, lower);
  EXPECT_EQ(q.dimension(), 1u);
  // (1,1,0) is zero in the quotient, (1,0,0) is not.
  EXPECT_EQ(q.coords(to_rational(std::vector<int>{1, 1, 0})), RationalVector{0});
  EXPECT_NE(q.coords(to_rational(std::vector<int>{1, 0, 0})), RationalVector{0});
}

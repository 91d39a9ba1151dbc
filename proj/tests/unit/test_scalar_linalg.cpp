#include <random>

#include <gtest/gtest.h>

#include "ddalab/linalg.hpp"

using namespace ddalab;

namespace {

const Field Q = Field::rationals();

Matrix int_matrix(const Field& f, std::vector<std::vector<long long>> rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = f.from_int(rows[i][j]);
  return m;
}

Matrix random_matrix(const Field& f, std::mt19937& rng, std::size_t r, std::size_t c, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

}  // namespace

TEST(Scalar, RationalArithmeticIsExact) {
  Scalar a = Q.parse("1/3"), b = Q.parse("1/6");
  EXPECT_EQ((a + b).to_string(), "1/2");
  EXPECT_EQ((a * b).to_string(), "1/18");
  EXPECT_EQ((a / b).to_string(), "2/1");
  EXPECT_EQ(Q.parse("-4/6").to_string(), "-2/3");
}

TEST(Scalar, PrimeFieldArithmetic) {
  Field f7 = Field::prime(7);
  EXPECT_TRUE((f7.from_int(3) * f7.from_int(5)).is_one());
  EXPECT_EQ(f7.from_int(-1).residue(), 6u);
  EXPECT_EQ(f7.parse("1/2").residue(), 4u);
  EXPECT_THROW(f7.parse("1/7"), std::domain_error);
  EXPECT_THROW(Field::prime(6), std::invalid_argument);
}

TEST(Scalar, MixingFieldsThrows) {
  EXPECT_THROW(Q.one() + Field::prime(5).one(), field_mismatch);
}

TEST(Scalar, ParseRejectsGarbage) { EXPECT_THROW(Q.parse("x/2"), std::invalid_argument); }

TEST(LinAlg, RankOfRepeatedRow) {
  auto r = rank_kernel_image(int_matrix(Q, {{1, 1}, {1, 1}}));
  EXPECT_EQ(r.rank, 1u);
  ASSERT_EQ(r.kernel.size(), 1u);
  EXPECT_EQ(to_string(r.kernel[0]), "[-1/1, 1/1]");
}

TEST(LinAlg, SolveScalarEquation) {
  auto x = solve_linear(int_matrix(Q, {{2}}), Vec{Q.from_int(3)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0].to_string(), "3/2");
}

TEST(LinAlg, InconsistentSystemHasNoSolution) {
  EXPECT_FALSE(solve_linear(int_matrix(Q, {{1, 1}, {1, 1}}), Vec{Q.from_int(1), Q.from_int(2)}));
}

TEST(LinAlg, QuotientOfThreeSpaceByLine) {
  QuotientSpace q = quotient_by(Q, 3, {Vec{Q.one(), -Q.one(), Q.zero()}});
  EXPECT_EQ(q.dim(), 2u);
  // e1 and e2 are identified.
  EXPECT_EQ(q.project(unit_vec(Q, 3, 0)), q.project(unit_vec(Q, 3, 1)));
}

TEST(LinAlg, InverseOfSingularMatrixIsAbsent) {
  EXPECT_FALSE(inverse(int_matrix(Q, {{1, 2}, {2, 4}})));
  auto inv = inverse(int_matrix(Q, {{2, 1}, {1, 1}}));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, int_matrix(Q, {{1, -1}, {-1, 2}}));
}

TEST(LinAlgProperty, RankNullityAndKernel) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix a = random_matrix(Q, rng, r, c, trial % 2 ? 1 : 3);
    auto rki = rank_kernel_image(a);
    EXPECT_EQ(rki.rank + rki.kernel.size(), c);
    for (const auto& k : rki.kernel) EXPECT_TRUE(is_zero(a.apply(k)));
    EXPECT_EQ(rank(a), rank(a.transpose()));
  }
}

TEST(LinAlgProperty, SolutionsSatisfyTheSystem) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = random_matrix(Q, rng, 4, 3);
    Vec x0 = random_matrix(Q, rng, 3, 1).column(0);
    Vec b = a.apply(x0);
    auto x = solve_linear(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a.apply(*x), b);
  }
}

TEST(LinAlgProperty, QuotientProjectionSection) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 5, k = rng() % 4;
    std::vector<Vec> rel;
    for (std::size_t i = 0; i < k; ++i) rel.push_back(random_matrix(Q, rng, n, 1, 1).column(0));
    QuotientSpace q = quotient_by(Q, n, rel);
    EXPECT_EQ(q.dim(), n - rank(Q, n, rel));
    EXPECT_EQ(q.projection() * q.section(), Matrix::identity(Q, q.dim()));
    for (const auto& r : rel) EXPECT_TRUE(is_zero(q.project(r)));
    EXPECT_TRUE(q.kills(q.projection()));
  }
}

TEST(LinAlgProperty, PrimeFieldRankNeverExceedsRationalRank) {
  std::mt19937 rng(23);
  Field f5 = Field::prime(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<long long>> rows(4, std::vector<long long>(4));
    for (auto& row : rows)
      for (auto& x : row) x = static_cast<long long>(rng() % 11) - 5;
    EXPECT_LE(rank(int_matrix(f5, rows)), rank(int_matrix(Q, rows)));
  }
}

TEST(LinAlgProperty, InverseRoundTrip) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = random_matrix(Q, rng, 3, 3);
    auto inv = inverse(a);
    if (rank(a) < 3) {
      EXPECT_FALSE(inv);
      continue;
    }
    ASSERT_TRUE(inv);
    EXPECT_EQ(a * *inv, Matrix::identity(Q, 3));
  }
}

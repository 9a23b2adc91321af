// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "taulab/linalg.hpp"

namespace {

using taulab::Field;
using taulab::Matrix;
using taulab::Subspace;
using taulab::Vector;

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c,
                     std::mt19937& rng) {
  std::uniform_int_distribution<taulab::Scalar> d(0, f.characteristic() - 1);
  Vector e(r * c);
  for (auto& x : e) {
    x = d(rng);
  }
  return {f, r, c, std::move(e)};
}

oracle::Mat to_rows(const Matrix& m) {
  oracle::Mat out = oracle::zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = static_cast<int>(m(i, j));
    }
  }
  return out;
}

TEST(Field, ArithmeticAndInverses) {
  const Field f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(0), 0u);
  for (taulab::Scalar a = 1; a < 7; ++a) {
    EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  }
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.pow(3, 6), 1u);
  EXPECT_THROW((void)f.inv(0), taulab::Error);
  EXPECT_THROW(Field(4), taulab::Error);
}

TEST(Rref, IdentityOverF2) {
  const Field f(2);
  const auto r = taulab::rref(Matrix::identity(f, 3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.reduced, Matrix::identity(f, 3));
}

TEST(Rref, ZeroMatrix) {
  const Field f(2);
  const auto r = taulab::rref(Matrix(f, 2, 2));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_TRUE(r.reduced.is_zero());
}

TEST(Rref, AllOnesOverF2) {
  const Field f(2);
  const auto r = taulab::rref(Matrix(f, 2, 2, {1, 1, 1, 1}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.reduced, Matrix(f, 2, 2, {1, 1, 0, 0}));
  // Undo by elementary operations: adding row 0 to row 1 recovers the input.
  Matrix back = r.reduced;
  back(1, 0) = f.add(back(1, 0), back(0, 0));
  back(1, 1) = f.add(back(1, 1), back(0, 1));
  EXPECT_EQ(back, Matrix(f, 2, 2, {1, 1, 1, 1}));
}

TEST(Rref, ZeroRowsAndColumnsAreValid) {
  const Field f(3);
  EXPECT_EQ(taulab::rref(Matrix(f, 0, 4)).rank, 0u);
  EXPECT_EQ(taulab::rref(Matrix(f, 3, 0)).rank, 0u);
  EXPECT_EQ(taulab::kernel_basis(Matrix(f, 0, 4)).dim(), 4u);
}

TEST(Kernel, IdentityHasZeroKernel) {
  EXPECT_TRUE(taulab::kernel_basis(Matrix::identity(Field(2), 2)).is_zero());
}

TEST(Kernel, ZeroRowIsFullSpace) {
  const auto k = taulab::kernel_basis(Matrix(Field(2), 1, 2));
  EXPECT_EQ(k, Subspace::full(Field(2), 2));
}

TEST(Kernel, OnesRowMatchesExhaustiveSearch) {
  const Field f(2);
  const Matrix m(f, 1, 2, {1, 1});
  const auto k = taulab::kernel_basis(m);
  std::vector<Vector> annihilated;
  oracle::for_each_vector(2, 2, [&](const std::vector<int>& v) {
    if ((v[0] + v[1]) % 2 == 0) {
      annihilated.push_back({static_cast<taulab::Scalar>(v[0]),
                             static_cast<taulab::Scalar>(v[1])});
    }
  });
  ASSERT_EQ(annihilated.size(), 2u);  // 0 and (1,1)
  EXPECT_EQ(k.dim(), 1u);
  for (const auto& v : annihilated) {
    EXPECT_TRUE(k.contains(v));
  }
  EXPECT_EQ(k, Subspace::span(f, 2, std::vector<Vector>{{1, 1}}));
}

TEST(Solve, IdentityReturnsRhs) {
  const Vector b{1, 0, 1};
  EXPECT_EQ(taulab::solve(Matrix::identity(Field(2), 3), b), b);
}

TEST(Solve, ZeroMatrixNonzeroRhsIsAbsent) {
  EXPECT_FALSE(taulab::solve(Matrix(Field(2), 2, 2), Vector{1, 0}).has_value());
}

TEST(Solve, LowerTriangularMatchesExhaustiveSearch) {
  const Field f(2);
  const Matrix a(f, 2, 2, {1, 0, 1, 1});
  const auto x = taulab::solve(a, Vector{1, 0});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (Vector{1, 1}));
  std::size_t solutions = 0;
  oracle::for_each_vector(2, 2, [&](const std::vector<int>& v) {
    if (v[0] % 2 == 1 && (v[0] + v[1]) % 2 == 0) {
      ++solutions;
    }
  });
  EXPECT_EQ(solutions, 1u);
}

TEST(Solve, ShapeMismatchThrows) {
  EXPECT_THROW((void)taulab::solve(Matrix(Field(2), 2, 2), Vector{1}),
               taulab::Error);
}

TEST(Subspace, SumWithZeroAndSelfIntersection) {
  const Field f(3);
  const auto u = Subspace::span(f, 3, std::vector<Vector>{{1, 2, 0}, {0, 1, 1}});
  const Subspace zero(f, 3);
  EXPECT_EQ(u.sum(zero), u);
  EXPECT_EQ(u.intersection(u), u);
}

TEST(Subspace, CoordinateAxes) {
  const Field f(2);
  const auto x = Subspace::span(f, 2, std::vector<Vector>{{1, 0}});
  const auto y = Subspace::span(f, 2, std::vector<Vector>{{0, 1}});
  EXPECT_EQ(x.sum(y), Subspace::full(f, 2));
  EXPECT_TRUE(x.intersection(y).is_zero());
}

TEST(Subspace, CanonicalFormIgnoresGenerators) {
  const Field f(5);
  const auto a = Subspace::span(f, 3, std::vector<Vector>{{1, 1, 0}, {0, 1, 1}});
  const auto b = Subspace::span(f, 3, std::vector<Vector>{{1, 2, 1}, {2, 2, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
}

TEST(Subspace, AmbientMismatchThrows) {
  const Field f(2);
  EXPECT_THROW((void)Subspace(f, 2).sum(Subspace(f, 3)), taulab::Error);
}

class LinalgProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(LinalgProperties, RankNullityAndRrefIdempotence) {
  const Field f(GetParam());
  std::mt19937 rng(1234 + GetParam());
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = rng() % 7;
    const std::size_t c = rng() % 7;
    const Matrix m = random_matrix(f, r, c, rng);
    const auto red = taulab::rref(m);
    EXPECT_EQ(red.rank, oracle::rank(to_rows(m), static_cast<int>(f.characteristic())));
    EXPECT_EQ(taulab::rref(red.reduced).reduced, red.reduced);
    const auto k = taulab::kernel_basis(m);
    EXPECT_EQ(k.dim() + red.rank, c);
    for (const auto& v : k.vectors()) {
      EXPECT_TRUE(taulab::is_zero_vector(m.apply(v)));
    }
  }
}

TEST_P(LinalgProperties, SolveAgreesWithRankTest) {
  const Field f(GetParam());
  std::mt19937 rng(99 + GetParam());
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 5;
    const std::size_t c = 1 + rng() % 5;
    const Matrix a = random_matrix(f, r, c, rng);
    const Matrix b = random_matrix(f, r, 1, rng);
    const auto x = taulab::solve(a, b.column(0));
    const bool consistent = taulab::rank(a) == taulab::rank(a.hstack(b));
    EXPECT_EQ(x.has_value(), consistent);
    if (x) {
      EXPECT_EQ(a.apply(*x), b.column(0));
    }
  }
}

TEST_P(LinalgProperties, DimensionFormulaForSubspaces) {
  const Field f(GetParam());
  std::mt19937 rng(7 + GetParam());
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Subspace u(random_matrix(f, rng() % 5, n, rng));
    const Subspace v(random_matrix(f, rng() % 5, n, rng));
    const auto s = u.sum(v);
    const auto i = u.intersection(v);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + v.dim());
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(u.contains(i));
    EXPECT_TRUE(v.contains(i));
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, LinalgProperties, ::testing::Values(2u, 3u, 5u, 7u));

}  // namespace

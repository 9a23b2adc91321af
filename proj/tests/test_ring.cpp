// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"

namespace {

using namespace taulab;

/// Algebra with basis b_0..b_{n-1} from a product rule on basis indices.
StructureConstantAlgebra from_table(std::uint32_t p, std::size_t n,
                                    const std::vector<std::vector<Vector>>& t,
                                    Vector one) {
  std::vector<Vector> products;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      products.push_back(t[i][j]);
    }
  }
  return {Field(p), n, std::move(products), std::move(one)};
}

StructureConstantAlgebra prime_field(std::uint32_t p) {
  return from_table(p, 1, {{{1}}}, {1});
}

/// F_p[x]/(x^2) on the basis 1, x.
StructureConstantAlgebra dual_numbers(std::uint32_t p) {
  return from_table(p, 2, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {1, 0});
}

/// F_2[x]/(x^2 + x + 1) = F_4 on the basis 1, x.
StructureConstantAlgebra field_of_four() {
  return from_table(2, 2, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}}, {1, 0});
}

/// 2x2 matrices over F_p on E11, E12, E21, E22.
StructureConstantAlgebra matrix_algebra(std::uint32_t p) {
  std::vector<std::vector<Vector>> t(4, std::vector<Vector>(4, Vector(4, 0)));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t r1 = i / 2, c1 = i % 2, r2 = j / 2, c2 = j % 2;
      if (c1 == r2) {
        t[i][j][r1 * 2 + c2] = 1;
      }
    }
  }
  return from_table(p, 4, t, {1, 0, 0, 1});
}

std::vector<std::vector<std::vector<int>>> table_of(const StructureConstantAlgebra& a) {
  std::vector<std::vector<std::vector<int>>> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      std::vector<int> v;
      for (auto x : a.product(i, j)) {
        v.push_back(static_cast<int>(x));
      }
      out[i].push_back(std::move(v));
    }
  }
  return out;
}

std::size_t oracle_radical_dim(const StructureConstantAlgebra& a) {
  return oracle::radical_dim(static_cast<int>(a.field().characteristic()),
                             a.dim(), table_of(a));
}

/// How many of `parts` are isomorphic to x, by the oracle.
std::size_t count_iso(const fixtures::TestAlgebra& t,
                      const std::vector<Representation>& parts,
                      const Representation& x) {
  std::size_t n = 0;
  for (const auto& p : parts) {
    n += oracle::isomorphic(t.data, fixtures::to_oracle(p), fixtures::to_oracle(x))
             ? 1
             : 0;
  }
  return n;
}

TEST(StructureConstants, AxiomsAreChecked) {
  // Non-associative: b0 b0 = b1 but everything else zero, with no identity.
  EXPECT_THROW(from_table(2, 2, {{{0, 1}, {0, 0}}, {{0, 0}, {0, 0}}}, {1, 0}),
               Error);
  EXPECT_THROW(StructureConstantAlgebra(Field(2), 2, {}, {1, 0}), Error);
}

TEST(Endomorphisms, SmallCases) {
  const auto t = fixtures::a2();
  const auto s1 = Representation::simple(t.algebra, 0);
  EXPECT_EQ(endomorphism_algebra(s1).dim(), 1u);
  EXPECT_EQ(endomorphism_algebra(direct_sum(s1, s1)).dim(), 4u);
  EXPECT_EQ(endomorphism_algebra(projective(t.algebra, 0)).dim(), 1u);
  EXPECT_EQ(endomorphism_algebra(Representation::zero(t.algebra)).dim(), 0u);
}

TEST(Endomorphisms, ActionMatchesProducts) {
  const auto t = fixtures::a3_zero_relation(3);
  const auto m = direct_sum({projective(t.algebra, 0), projective(t.algebra, 1),
                             Representation::simple(t.algebra, 1)},
                            t.algebra);
  const auto e = endomorphism_algebra(m);
  for (std::size_t i = 0; i < e.dim(); ++i) {
    for (std::size_t j = 0; j < e.dim(); ++j) {
      EXPECT_EQ(e.act(e.product(i, j)).flatten(),
                e.act(e.unit(i)).after(e.act(e.unit(j))).flatten());
    }
  }
  EXPECT_EQ(e.act(e.identity()).flatten(), Morphism::identity(m).flatten());
}

TEST(Radical, Field) {
  const auto r = jacobson_radical(prime_field(5));
  EXPECT_TRUE(r.radical.is_zero());
  EXPECT_EQ(r.nilpotency_index, 1u);
}

TEST(Radical, DualNumbers) {
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const auto r = jacobson_radical(dual_numbers(p));
    EXPECT_EQ(r.radical, Subspace::span(Field(p), 2, std::vector<Vector>{{0, 1}}));
    EXPECT_EQ(r.nilpotency_index, 2u);
  }
}

TEST(Radical, SimpleAlgebrasHaveZeroRadical) {
  EXPECT_TRUE(jacobson_radical(field_of_four()).radical.is_zero());
  EXPECT_TRUE(jacobson_radical(matrix_algebra(2)).radical.is_zero());
  EXPECT_TRUE(jacobson_radical(matrix_algebra(3)).radical.is_zero());
}

TEST(Radical, EndOfProjectivePlusSimpleOverA2) {
  const auto t = fixtures::a2();
  const auto m = direct_sum(projective(t.algebra, 0),
                            Representation::simple(t.algebra, 0));
  const auto e = endomorphism_algebra(m);
  ASSERT_EQ(e.dim(), 3u);
  const auto r = jacobson_radical(e);
  EXPECT_EQ(r.radical.dim(), 1u);
  EXPECT_EQ(r.radical.dim(), oracle_radical_dim(e));
  EXPECT_TRUE(is_two_sided_ideal(e, r.radical));
  EXPECT_EQ(r.nilpotency_index, 2u);
  // The radical element is the epimorphism P1 -> S1, which is not invertible
  // and kills the S1 summand.
  const auto x = e.act(r.radical.vectors().front());
  EXPECT_FALSE(x.is_zero());
  EXPECT_FALSE(x.is_isomorphism());
}

TEST(Radical, ZeroAlgebraIsRejected) {
  EXPECT_THROW((void)jacobson_radical(StructureConstantAlgebra(Field(2), 0, {}, {})),
               Error);
}

TEST(BlockCount, Basics) {
  EXPECT_EQ(block_count(prime_field(3)), 1u);
  EXPECT_EQ(block_count(product_algebra(prime_field(3), prime_field(3))), 2u);
  EXPECT_EQ(block_count(field_of_four()), 1u);
  EXPECT_EQ(block_count(matrix_algebra(5)), 1u);
  EXPECT_EQ(block_count(dual_numbers(2)), 1u);
  const auto t = fixtures::a2();
  const auto s1 = Representation::simple(t.algebra, 0);
  const auto m = direct_sum({projective(t.algebra, 0), s1, s1}, t.algebra);
  EXPECT_EQ(block_count(endomorphism_algebra(m)), 2u);
  EXPECT_EQ(decompose(m).size(), 3u);
}

TEST(BlockCount, ProductsAdd) {
  const std::vector<StructureConstantAlgebra> algebras{
      prime_field(2), dual_numbers(2), field_of_four(), matrix_algebra(2)};
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      EXPECT_EQ(block_count(product_algebra(a, b)), block_count(a) + block_count(b));
    }
  }
}

TEST(SummandTypes, Counts) {
  const auto b = fixtures::a3_zero_relation();
  EXPECT_EQ(summand_type_count(regular_module(b.algebra)), 3u);
  const auto a = fixtures::a2();
  const auto s1 = Representation::simple(a.algebra, 0);
  EXPECT_EQ(summand_type_count(direct_sum(s1, s1)), 1u);
  EXPECT_EQ(summand_type_count(direct_sum(projective(a.algebra, 0), s1)), 2u);
  EXPECT_EQ(summand_type_count(Representation::zero(a.algebra)), 0u);
}

TEST(Decompose, A2ProjectivePlusSimple) {
  const auto t = fixtures::a2();
  const auto p1 = projective(t.algebra, 0);
  const auto s2 = Representation::simple(t.algebra, 1);
  const auto parts = decompose(direct_sum(p1, s2));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(count_iso(t, parts, p1), 1u);
  EXPECT_EQ(count_iso(t, parts, s2), 1u);
  for (const auto& x : parts) {
    EXPECT_EQ(block_count(endomorphism_algebra(x)), 1u);
  }
}

TEST(Decompose, SimpleIsItsOwnDecomposition) {
  const auto t = fixtures::a2();
  const auto s1 = Representation::simple(t.algebra, 0);
  const auto parts = decompose(s1);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts.front().dims(), s1.dims());
}

TEST(Decompose, RegularModuleOfZeroRelationAlgebra) {
  const auto t = fixtures::a3_zero_relation();
  const auto parts = decompose(regular_module(t.algebra));
  ASSERT_EQ(parts.size(), 3u);
  for (std::size_t v = 0; v < 3; ++v) {
    EXPECT_EQ(count_iso(t, parts, projective(t.algebra, v)), 1u);
  }
}

TEST(Decompose, HiddenSplitting) {
  // S1 ⊕ S2 written in a basis that mixes nothing across vertices is easy;
  // here P1 ⊕ P1 over A2 with arrow matrix [[1,1],[0,1]] is isomorphic to
  // P1 ⊕ P1 but not block diagonal.
  const auto t = fixtures::a2(3);
  const Field& f = t.algebra->field();
  const Representation m(t.algebra, {2, 2}, {Matrix(f, 2, 2, {1, 1, 0, 1})});
  const auto parts = decompose(m);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(count_iso(t, parts, projective(t.algebra, 0)), 2u);
  EXPECT_TRUE(is_isomorphic(m, direct_sum(projective(t.algebra, 0),
                                          projective(t.algebra, 0))));
}

TEST(Isomorphism, Examples) {
  const auto t = fixtures::a2();
  const auto p1 = projective(t.algebra, 0);
  const auto s = direct_sum(Representation::simple(t.algebra, 0),
                            Representation::simple(t.algebra, 1));
  EXPECT_TRUE(is_isomorphic(p1, p1));
  EXPECT_FALSE(is_isomorphic(p1, Representation::simple(t.algebra, 0)));
  EXPECT_EQ(p1.dims(), s.dims());
  EXPECT_FALSE(is_isomorphic(p1, s));
  EXPECT_THROW((void)is_isomorphic(p1, projective(fixtures::a3().algebra, 0)), Error);
}

class RingProperties : public ::testing::TestWithParam<int> {
 protected:
  fixtures::TestAlgebra algebra() const {
    return fixtures::acceptance_algebras()[static_cast<std::size_t>(GetParam())];
  }

  /// Sums of two or three oracle indecomposables, some repeated.
  std::vector<Representation> sums(const fixtures::TestAlgebra& t) const {
    const auto carrier = oracle::indecomposables(t.data, 3);
    std::vector<Representation> out;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      const auto x = fixtures::from_oracle(t.algebra, carrier[i]);
      const auto y = fixtures::from_oracle(
          t.algebra, carrier[(i * 3 + 1) % carrier.size()]);
      const auto z = fixtures::from_oracle(
          t.algebra, carrier[(i * 5 + 2) % carrier.size()]);
      out.push_back(direct_sum(x, y));
      out.push_back(direct_sum({x, y, z}, t.algebra));
      out.push_back(direct_sum(x, x));
    }
    return out;
  }
};

TEST_P(RingProperties, RadicalIsCertifiedAndMatchesOracle) {
  const auto t = algebra();
  for (const auto& m : sums(t)) {
    const auto e = endomorphism_algebra(m);
    const auto r = jacobson_radical(e);
    EXPECT_TRUE(is_two_sided_ideal(e, r.radical));
    const auto q = quotient_algebra(e, r.radical);
    EXPECT_TRUE(jacobson_radical(q.algebra).radical.is_zero());
    EXPECT_LE(r.nilpotency_index, e.dim());
    if (e.dim() <= 9) {
      EXPECT_EQ(r.radical.dim(), oracle_radical_dim(e)) << m.to_text();
    }
  }
}

TEST_P(RingProperties, DecomposeReconstructs) {
  const auto t = algebra();
  for (const auto& m : sums(t)) {
    const auto parts = decompose(m);
    std::vector<std::size_t> total(m.dims().size(), 0);
    for (const auto& x : parts) {
      EXPECT_TRUE(oracle::indecomposable(t.data, fixtures::to_oracle(x)));
      EXPECT_EQ(block_count(endomorphism_algebra(x)), 1u);
      for (std::size_t v = 0; v < total.size(); ++v) {
        total[v] += x.dim(v);
      }
    }
    EXPECT_EQ(total, m.dims());
    const auto rebuilt = direct_sum(parts, t.algebra);
    EXPECT_TRUE(oracle::isomorphic(t.data, fixtures::to_oracle(rebuilt),
                                   fixtures::to_oracle(m)));
    EXPECT_TRUE(is_isomorphic(rebuilt, m));
    EXPECT_EQ(summand_type_count(direct_sum(m, m)), summand_type_count(m));
    EXPECT_EQ(summand_types(m).size(), summand_type_count(m));
  }
}

TEST_P(RingProperties, IsomorphismIsAnEquivalence) {
  const auto t = algebra();
  const auto family = sums(t);
  const std::size_t n = family.size();
  std::vector<std::vector<bool>> iso(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      iso[i][j] = is_isomorphic(family[i], family[j]);
      if (family[i].total_dim() <= 4) {
        EXPECT_EQ(iso[i][j], oracle::isomorphic(t.data, fixtures::to_oracle(family[i]),
                                                fixtures::to_oracle(family[j])));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_TRUE(iso[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(iso[i][j], iso[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (iso[i][j] && iso[j][k]) {
          EXPECT_TRUE(iso[i][k]);
        }
      }
    }
  }
}

TEST_P(RingProperties, BlockCountOfProductOfEndomorphismRings) {
  const auto t = algebra();
  const auto family = sums(t);
  for (std::size_t i = 0; i + 1 < family.size(); i += 2) {
    const auto a = endomorphism_algebra(family[i]);
    const auto b = endomorphism_algebra(family[i + 1]);
    EXPECT_EQ(block_count(product_algebra(a, b)), block_count(a) + block_count(b));
  }
}

INSTANTIATE_TEST_SUITE_P(Algebras, RingProperties, ::testing::Range(0, 4));

TEST(RingCharacteristics, LargerEndomorphismRing) {
  // End(S1^3 ⊕ P1^2) over A2 has dimension 9 + 4 + 3*2 = 19.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto t = fixtures::a2(p);
    const auto s = Representation::simple(t.algebra, 0);
    const auto pr = projective(t.algebra, 0);
    const auto m = direct_sum({s, s, s, pr, pr}, t.algebra);
    const auto e = endomorphism_algebra(m);
    EXPECT_EQ(e.dim(), 19u);
    const auto r = jacobson_radical(e);
    EXPECT_EQ(r.radical.dim(), 6u);
    EXPECT_EQ(r.nilpotency_index, 2u);
    EXPECT_EQ(block_count(e), 2u);
    EXPECT_EQ(decompose(m).size(), 5u);
  }
}

}  // namespace

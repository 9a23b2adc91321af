// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"

namespace {

using namespace taulab;

bool iso(const fixtures::TestAlgebra& t, const Representation& x,
         const Representation& y) {
  return oracle::isomorphic(t.data, fixtures::to_oracle(x), fixtures::to_oracle(y));
}

std::vector<Representation> carrier(const fixtures::TestAlgebra& t, std::size_t bound) {
  std::vector<Representation> out;
  for (const auto& r : oracle::indecomposables(t.data, bound)) {
    out.push_back(fixtures::from_oracle(t.algebra, r));
  }
  return out;
}

TEST(Resolution, ProjectiveStopsImmediately) {
  const auto t = fixtures::a2();
  const auto r = projective_resolution(projective(t.algebra, 0), 5);
  EXPECT_TRUE(r.terminated);
  EXPECT_EQ(r.length(), 1u);
  EXPECT_TRUE(r.syzygies[0].module.is_zero());
  EXPECT_EQ(r.tops[0], (std::vector<std::size_t>{0}));
}

TEST(Resolution, SimpleOverZeroRelationAlgebra) {
  // 0 -> P3 -> P2 -> P1 -> S1 -> 0.
  const auto t = fixtures::a3_zero_relation();
  const auto r = projective_resolution(Representation::simple(t.algebra, 0), 6);
  ASSERT_TRUE(r.terminated);
  ASSERT_EQ(r.length(), 3u);
  EXPECT_EQ(r.tops[0], (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.tops[1], (std::vector<std::size_t>{1}));
  EXPECT_EQ(r.tops[2], (std::vector<std::size_t>{2}));
  EXPECT_TRUE(r.differentials[0].is_surjective());
  EXPECT_TRUE(r.differentials[2].is_injective());
  for (std::size_t i = 1; i < r.length(); ++i) {
    EXPECT_TRUE(r.differentials[i - 1].after(r.differentials[i]).is_zero());
    EXPECT_EQ(image(r.differentials[i]).module.dims(),
              r.syzygies[i - 1].module.dims());
  }
}

TEST(Resolution, PrefixIsExplicit) {
  const auto t = fixtures::cyclic_nakayama();
  // Over the cyclic algebra with J^2 = 0 every simple has infinite pd.
  const auto r = projective_resolution(Representation::simple(t.algebra, 0), 4);
  EXPECT_FALSE(r.terminated);
  EXPECT_EQ(r.length(), 4u);
  EXPECT_NO_THROW((void)r.tops_at(3));
  EXPECT_THROW((void)r.tops_at(4), Error);
  try {
    (void)r.tops_at(7);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("unknown beyond prefix"), std::string::npos);
  }
}

TEST(Presentation, ShapesOverA2) {
  const auto t = fixtures::a2();
  const auto s1 = Representation::simple(t.algebra, 0);
  const auto pres = minimal_projective_presentation(s1);
  EXPECT_EQ(pres.tops0, (std::vector<std::size_t>{0}));
  EXPECT_EQ(pres.tops1, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(pres.eps.after(pres.d1).is_zero());
  EXPECT_TRUE(iso(t, cokernel(pres.d1).module, s1));
  const auto p = minimal_projective_presentation(projective(t.algebra, 0));
  EXPECT_TRUE(p.tops1.empty());
  EXPECT_TRUE(p.p1.is_zero());
}

TEST(ProjectiveDimension, Values) {
  const auto a2 = fixtures::a2();
  EXPECT_EQ(projective_dimension(projective(a2.algebra, 0)).to_string(), "0");
  EXPECT_EQ(projective_dimension(Representation::simple(a2.algebra, 0)).to_string(), "1");
  EXPECT_EQ(projective_dimension(Representation::zero(a2.algebra)).to_string(), "0");
  const auto b = fixtures::a3_zero_relation();
  const auto pd = projective_dimension(Representation::simple(b.algebra, 0));
  ASSERT_TRUE(pd.is_exact());
  EXPECT_EQ(*pd.exact, 2u);
  EXPECT_EQ(projective_dimension(Representation::simple(b.algebra, 1)).to_string(), "1");
}

TEST(ProjectiveDimension, InfiniteIsReportedAsLowerBound) {
  const auto t = fixtures::cyclic_nakayama();
  const auto pd = projective_dimension(Representation::simple(t.algebra, 0));
  EXPECT_FALSE(pd.is_exact());
  EXPECT_EQ(pd.lower_bound, kDefaultMaxLength + 1);
  EXPECT_EQ(pd.to_string(), ">= 13");
  EXPECT_EQ(projective_dimension(Representation::simple(t.algebra, 0), 3).to_string(),
            ">= 4");
}

TEST(Ext, A2Simples) {
  const auto t = fixtures::a2();
  const auto s1 = Representation::simple(t.algebra, 0);
  const auto s2 = Representation::simple(t.algebra, 1);
  EXPECT_EQ(ext_dim(s1, s2, 1), 1u);
  EXPECT_EQ(ext_dim(s2, s1, 1), 0u);
  EXPECT_EQ(ext_dim(s1, s1, 1), 0u);
  EXPECT_EQ(ext_dim(s1, s2, 2), 0u);
  EXPECT_EQ(ext_dim(s1, s2, 0), 0u);
  EXPECT_EQ(ext_dim(s1, s1, 0), 1u);
}

TEST(Ext, ZeroRelationAlgebra) {
  const auto t = fixtures::a3_zero_relation();
  const auto s1 = Representation::simple(t.algebra, 0);
  const auto s3 = Representation::simple(t.algebra, 2);
  EXPECT_EQ(ext_dim(s1, s1, 1), 0u);
  EXPECT_EQ(ext_dim(s1, s1, 2), 0u);
  EXPECT_EQ(ext_dim(s1, s3, 2), 1u);
  EXPECT_EQ(ext_dim(s1, Representation::simple(t.algebra, 1), 1), 1u);
}

TEST(Ext, ProjectiveAndInjectiveVanishing) {
  for (const auto& t : fixtures::acceptance_algebras()) {
    const auto mods = carrier(t, 3);
    for (std::size_t v = 0; v < t.algebra->vertex_count(); ++v) {
      const auto p = projective(t.algebra, v);
      const auto i = injective(t.algebra, v);
      for (const auto& m : mods) {
        EXPECT_EQ(ext_dim(p, m, 1), 0u) << t.name;
        EXPECT_EQ(ext_dim(p, m, 2), 0u) << t.name;
        EXPECT_EQ(ext_dim(m, i, 1), 0u) << t.name;
      }
    }
  }
}

TEST(Translate, A2) {
  const auto t = fixtures::a2();
  const auto s1 = Representation::simple(t.algebra, 0);
  const auto s2 = Representation::simple(t.algebra, 1);
  EXPECT_TRUE(iso(t, ar_translate(s1), s2));
  EXPECT_TRUE(ar_translate(s2).is_zero());
  EXPECT_TRUE(ar_translate(projective(t.algebra, 0)).is_zero());
  EXPECT_EQ(ar_translate(s1).algebra(), t.algebra);
}

TEST(Translate, TransposeLivesOverOpposite) {
  const auto t = fixtures::a3_zero_relation();
  const auto tr = transpose(Representation::simple(t.algebra, 0));
  EXPECT_TRUE(tr.algebra()->same_as(*opposite(t.algebra)));
  EXPECT_FALSE(tr.is_zero());
  EXPECT_TRUE(transpose(projective(t.algebra, 1)).is_zero());
}

TEST(Duality, DoubleDualIsIdentity) {
  for (const auto& t : fixtures::acceptance_algebras()) {
    for (const auto& m : carrier(t, 3)) {
      const auto dm = dual(m);
      EXPECT_TRUE(dm.algebra()->same_as(*opposite(t.algebra)));
      EXPECT_EQ(dm.total_dim(), m.total_dim());
      EXPECT_TRUE(iso(t, dual(dm), m)) << t.name << "\n" << m.to_text();
    }
  }
}

TEST(StableHom, SimpleOverA2) {
  const auto t = fixtures::a2();
  const auto s2 = Representation::simple(t.algebra, 1);
  EXPECT_EQ(stable_hom_dim(s2, s2), 1u);
  // S1 is injective, so nothing from it survives.
  const auto s1 = Representation::simple(t.algebra, 0);
  EXPECT_EQ(stable_hom_dim(s1, s1), 0u);
}

class HomologicalProperties : public ::testing::TestWithParam<int> {
 protected:
  fixtures::TestAlgebra algebra() const {
    return fixtures::acceptance_algebras()[static_cast<std::size_t>(GetParam())];
  }
};

TEST_P(HomologicalProperties, Ext1MatchesOracle) {
  const auto t = algebra();
  const auto mods = carrier(t, 4);
  for (const auto& m : mods) {
    for (const auto& n : mods) {
      EXPECT_EQ(ext_dim(m, n, 1),
                oracle::ext1_dim(t.data, fixtures::to_oracle(m), fixtures::to_oracle(n)))
          << m.to_text() << n.to_text();
    }
  }
}

TEST_P(HomologicalProperties, ExtIsAdditive) {
  const auto t = algebra();
  const auto mods = carrier(t, 3);
  for (std::size_t i = 0; i < mods.size(); ++i) {
    const auto& x = mods[i];
    const auto& y = mods[(i + 1) % mods.size()];
    const auto xy = direct_sum(x, y);
    for (const auto& n : mods) {
      for (std::size_t d : {1u, 2u}) {
        EXPECT_EQ(ext_dim(xy, n, d), ext_dim(x, n, d) + ext_dim(y, n, d));
        EXPECT_EQ(ext_dim(n, xy, d), ext_dim(n, x, d) + ext_dim(n, y, d));
      }
    }
  }
}

TEST_P(HomologicalProperties, DimensionShifting) {
  // Ext^{i+1}(m, n) = Ext^i(Ω m, n) for i >= 1, and Ext^2 via the oracle.
  const auto t = algebra();
  const auto mods = carrier(t, 3);
  for (const auto& m : mods) {
    const auto r = projective_resolution(m, 3);
    if (r.length() < 2) {
      continue;
    }
    const auto& omega = r.syzygies[0].module;
    for (const auto& n : mods) {
      EXPECT_EQ(ext_dim(m, n, 2), ext_dim(omega, n, 1));
      EXPECT_EQ(ext_dim(m, n, 2), oracle::ext1_dim(t.data, fixtures::to_oracle(omega),
                                                   fixtures::to_oracle(n)));
      EXPECT_EQ(ext_dim(m, n, 3), ext_dim(omega, n, 2));
    }
  }
}

TEST_P(HomologicalProperties, AuslanderReitenFormula) {
  const auto t = algebra();
  const auto mods = carrier(t, 4);
  for (const auto& m : mods) {
    const auto tm = ar_translate(m);
    EXPECT_EQ(tm.is_zero(), is_projective(m)) << m.to_text();
    for (const auto& n : mods) {
      EXPECT_EQ(ext_dim(m, n, 1), stable_hom_dim(n, tm));
    }
  }
}

TEST_P(HomologicalProperties, TranslateOfIndecomposableNonProjective) {
  const auto t = algebra();
  for (const auto& m : carrier(t, 4)) {
    if (is_projective(m)) {
      continue;
    }
    const auto tm = ar_translate(m);
    EXPECT_TRUE(oracle::indecomposable(t.data, fixtures::to_oracle(tm)));
    EXPECT_FALSE(is_injective(tm));
  }
}

TEST_P(HomologicalProperties, PdMatchesResolutionAndExt) {
  const auto t = algebra();
  const auto mods = carrier(t, 4);
  for (const auto& m : mods) {
    const auto pd = projective_dimension(m);
    if (!pd.is_exact()) {
      continue;
    }
    const std::size_t d = *pd.exact;
    bool some = false;
    for (std::size_t v = 0; v < t.algebra->vertex_count(); ++v) {
      const auto s = Representation::simple(t.algebra, v);
      EXPECT_EQ(ext_dim(m, s, d + 1), 0u);
      some = some || ext_dim(m, s, d) > 0;
    }
    EXPECT_TRUE(some) << m.to_text();
  }
}

INSTANTIATE_TEST_SUITE_P(Algebras, HomologicalProperties, ::testing::Range(0, 4));

TEST(Ext, LargerPrime) {
  const auto t = fixtures::a3(5);
  const auto mods = carrier(t, 3);
  for (const auto& m : mods) {
    for (const auto& n : mods) {
      EXPECT_EQ(ext_dim(m, n, 1),
                oracle::ext1_dim(t.data, fixtures::to_oracle(m), fixtures::to_oracle(n)));
    }
  }
}

}  // namespace

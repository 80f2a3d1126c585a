#include "weylface/weyl.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "weylface/errors.hpp"

namespace weylface {
namespace {

using testing::g2;
using testing::so_even;
using testing::so_star;
using testing::sp;

TEST(WeylElementTest, ApplyConvention) {
  const Weight rho{2, 1};
  EXPECT_EQ(apply(WeylElement::identity(2), rho), rho);
  EXPECT_EQ(apply(WeylElement({1, 0}, {1, -1}), rho), (Weight{1, -2}));
  // Three-cycle: coordinate j lands on perm[j].
  EXPECT_EQ(apply(WeylElement({1, 2, 0}, {1, 1, 1}), Weight{5, 6, 7}),
            (Weight{7, 5, 6}));
}

TEST(WeylElementTest, RejectsMalformed) {
  EXPECT_THROW(WeylElement({0, 0}, {1, 1}), InvalidParameter);
  EXPECT_THROW(WeylElement({0, 1}, {1, 2}), InvalidParameter);
  EXPECT_THROW(WeylElement({0, 1}, {1}), InvalidParameter);
  EXPECT_THROW(apply(WeylElement::identity(3), Weight{1, 2}),
               DimensionMismatch);
}

TEST(WeylElementTest, CompositionAndInverseAct) {
  const Weight mu{5, -3, 2, 7};
  const auto group = weyl_group(sp(4));
  for (std::size_t i = 0; i < group.closure.size(); i += 37) {
    const auto& a = group.closure[i];
    for (std::size_t j = 0; j < group.closure.size(); j += 53) {
      const auto& b = group.closure[j];
      ASSERT_EQ(apply(a * b, mu), apply(a, apply(b, mu)));
    }
    ASSERT_EQ(apply(a.inverse(), apply(a, mu)), mu);
    ASSERT_TRUE((a * a.inverse()).is_identity());
  }
}

TEST(WeylElementTest, G2ElementMapsRho1ToRho2) {
  const RootDatum d = g2();
  const auto group = weyl_group(d);
  const bool found = std::any_of(
      group.closure.begin(), group.closure.end(), [&](const WeylElement& w) {
        return apply(w, Weight{-1, -2, 3}) == Weight{1, -3, 2};
      });
  EXPECT_TRUE(found);
}

TEST(ReflectionTest, MatchesFormula) {
  for (const auto& d : testing::sweep_data()) {
    const Weight mu = d.family() == Family::kG2 ? Weight{4, -7, 3}
                                                : [&] {
                                                    Weight w = d.rho();
                                                    w[0] += 3;
                                                    return w;
                                                  }();
    for (const auto& r : d.positive_roots()) {
      const WeylElement s = reflection(r.weight, d);
      EXPECT_TRUE(belongs_to_weyl_group(s, d));
      EXPECT_EQ(apply(s, mu), reflect(mu, r.weight))
          << describe(d.params()) << " root " << to_string(r.weight);
      EXPECT_EQ(apply(s, r.weight), -r.weight);
      EXPECT_TRUE((s * s).is_identity());
    }
  }
}

TEST(ReflectionTest, RejectsNonRoots) {
  EXPECT_THROW(reflection(Weight{1, 0}, sp(2)), InvalidParameter);
  EXPECT_THROW(reflection(Weight{2, 0, 0, 0}, so_star(4)), InvalidParameter);
}

TEST(OrbitTest, Examples) {
  const auto sp2 = orbit(Weight{2, 1}, sp(2));
  EXPECT_THAT(sp2, ::testing::UnorderedElementsAre(
                       Weight{2, 1}, Weight{2, -1}, Weight{-2, 1},
                       Weight{-2, -1}, Weight{1, 2}, Weight{1, -2},
                       Weight{-1, 2}, Weight{-1, -2}));
  const auto g = orbit(Weight{-1, -2, 3}, g2());
  EXPECT_EQ(g.size(), 12u);
  EXPECT_TRUE(std::binary_search(g.begin(), g.end(), Weight{1, -3, 2}));
  EXPECT_TRUE(std::binary_search(g.begin(), g.end(), Weight{2, -3, 1}));
  EXPECT_EQ(orbit(so_star(4).rho(), so_star(4)).size(), 192u);
}

TEST(OrbitTest, MatchesReferenceEnumeration) {
  for (const auto& d : testing::sweep_data()) {
    const auto orb = orbit(d.rho(), d);
    const auto ref = testing::reference_orbit(d);
    EXPECT_EQ(WeightSet(orb.begin(), orb.end()), ref) << describe(d.params());
    EXPECT_EQ(orb.size(), weyl_group_order(d)) << describe(d.params());
  }
}

TEST(OrbitTest, ResourceCap) {
  EXPECT_THROW(orbit(sp(5).rho(), sp(5), 100), ResourceLimit);
  EXPECT_THROW(generate_subgroup(sp(5).simple_roots(), sp(5), 100),
               ResourceLimit);
}

TEST(OrbitTest, SingularWeightHasSmallerOrbit) {
  const auto orb = orbit(Weight{1, 0, 0}, sp(3));
  EXPECT_EQ(orb.size(), 6u);
}

TEST(SubgroupTest, Examples) {
  const RootDatum d2 = sp(2);
  EXPECT_EQ(generate_subgroup({}, d2).order(), 1u);
  const std::vector<Root> one{{Weight{1, 1}, false}};
  EXPECT_EQ(generate_subgroup(one, d2).order(), 2u);

  // Roots vanishing on (1,0,0,-1) in so*(8).
  const RootDatum d4 = so_star(4);
  std::vector<Root> zero;
  for (const auto& r : d4.positive_roots()) {
    if (pairing(r.weight, Weight{1, 0, 0, -1}) == 0) zero.push_back(r);
  }
  EXPECT_EQ(generate_subgroup(zero, d4).order(), 8u);
}

TEST(SubgroupTest, WholeGroupOrders) {
  for (const auto& d : testing::sweep_data()) {
    if (d.rank() > 5) continue;
    EXPECT_EQ(weyl_group(d).order(), weyl_group_order(d))
        << describe(d.params());
  }
}

TEST(SubgroupTest, GroupAxiomsExhaustive) {
  for (const RootDatum& d : {sp(2), sp(3), so_even(2, 2), so_even(3, 1),
                             so_star(4), g2()}) {
    const auto group = weyl_group(d);
    ASSERT_TRUE(group.contains(WeylElement::identity(d.dimension())));
    for (const auto& a : group.closure) {
      ASSERT_TRUE(belongs_to_weyl_group(a, d));
      ASSERT_TRUE(group.contains(a.inverse())) << describe(d.params());
      for (const auto& b : group.closure) {
        ASSERT_TRUE(group.contains(a * b)) << describe(d.params());
      }
    }
    // Associativity on a spread of triples.
    for (std::size_t i = 0; i < group.order(); i += 7) {
      for (std::size_t j = 0; j < group.order(); j += 11) {
        for (std::size_t k = 0; k < group.order(); k += 13) {
          const auto& a = group.closure[i];
          const auto& b = group.closure[j];
          const auto& c = group.closure[k];
          ASSERT_EQ((a * b) * c, a * (b * c));
        }
      }
    }
  }
}

TEST(SubgroupTest, SpFourGroupAxioms) {
  const RootDatum d = sp(4);
  const auto group = weyl_group(d);
  ASSERT_EQ(group.order(), 384u);
  for (const auto& a : group.closure) {
    ASSERT_TRUE(group.contains(a.inverse()));
    for (std::size_t j = 0; j < group.order(); j += 5) {
      ASSERT_TRUE(group.contains(a * group.closure[j]));
    }
  }
}

TEST(SubgroupTest, OrbitStabilizerRelation) {
  for (const auto& d : testing::sweep_data()) {
    if (d.rank() > 5) continue;
    const auto group = weyl_group(d);
    const std::size_t stab = stabilizer_order(group, d.rho());
    EXPECT_EQ(orbit(d.rho(), d).size() * stab, group.order())
        << describe(d.params());
    EXPECT_EQ(stab, 1u) << describe(d.params());
  }
}

TEST(LengthTest, Basics) {
  const RootDatum d = sp(3);
  EXPECT_EQ(length(WeylElement::identity(3), d), 0);
  for (const auto& r : d.simple_roots()) {
    EXPECT_EQ(length(reflection(r.weight, d), d), 1);
  }
  // The longest element -1 negates every positive root.
  EXPECT_EQ(length(WeylElement({0, 1, 2}, {-1, -1, -1}), d), 9);
}

TEST(IsW1Test, Examples) {
  const RootDatum d = sp(2);
  EXPECT_TRUE(is_w1(WeylElement::identity(2), d));
  EXPECT_FALSE(is_w1(WeylElement({1, 0}, {1, 1}), d));   // rho -> (1,2)
  EXPECT_TRUE(is_w1(WeylElement({1, 0}, {1, -1}), d));   // rho -> (1,-2)
}

// w rho is k-dominant iff w is the unique shortest element of W_k w.
TEST(IsW1Test, MatchesShortestCosetRepresentative) {
  for (const RootDatum& d : {sp(2), sp(3), sp(4), so_even(2, 2),
                             so_even(3, 1), so_even(1, 3), so_star(4), g2()}) {
    const auto group = weyl_group(d);
    const auto wk = generate_subgroup(d.compact_positive_roots(), d);
    std::size_t w1_count = 0;
    for (const auto& w : group.closure) {
      const int lw = length(w, d);
      bool unique_min = true;
      for (const auto& x : wk.closure) {
        if (x.is_identity()) continue;
        if (length(x * w, d) <= lw) {
          unique_min = false;
          break;
        }
      }
      ASSERT_EQ(is_w1(w, d), unique_min) << describe(d.params());
      if (unique_min) ++w1_count;
    }
    EXPECT_EQ(w1_count * wk.order(), group.order()) << describe(d.params());
  }
}

}  // namespace
}  // namespace weylface

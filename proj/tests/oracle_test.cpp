#include "weylface/oracle.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "weylface/errors.hpp"

namespace weylface {
namespace {

using ::testing::UnorderedElementsAre;
using testing::g2;
using testing::so_even;
using testing::so_star;
using testing::sp;

TEST(ArgmaxTest, Examples) {
  EXPECT_EQ(face_by_argmax(Weight{0, 0}, sp(2)).size(), 8u);
  EXPECT_THAT(face_by_argmax(Weight{1, -2, 1}, g2()),
              UnorderedElementsAre(Weight{2, -3, 1}, Weight{1, -3, 2}));
  EXPECT_THAT(face_by_argmax(Weight{1, -1}, sp(2)),
              UnorderedElementsAre(Weight{2, -1}, Weight{1, -2}));
  EXPECT_THROW(face_by_argmax(Weight{1, 0, 0, 0, 0}, sp(5), 10),
               ResourceLimit);
}

TEST(ArgmaxTest, StableUnderLeviWeylGroup) {
  std::mt19937_64 rng(3);
  for (const RootDatum& d : {sp(3), so_even(2, 2), so_star(4), g2()}) {
    const auto orb = orbit(d.rho(), d);
    for (int i = 0; i < 40; ++i) {
      const Weight h = testing::random_weight(rng, d, 2);
      const WeightSet face = face_by_argmax(h, orb);
      std::vector<Root> zero;
      for (const auto& r : d.positive_roots()) {
        if (pairing(r.weight, h) == 0) zero.push_back(r);
      }
      const auto wl = generate_subgroup(zero, d);
      for (const auto& w : wl.closure) {
        for (const auto& v : face) {
          ASSERT_TRUE(face.count(apply(w, v))) << to_string(h);
        }
      }
    }
  }
}

TEST(CertifyFaceTest, SpRankTwoAllPass) {
  const RootDatum d = sp(2);
  for (const auto& desc : enumerate_admissible(d)) {
    const FaceReport r = certify_face(desc, d);
    EXPECT_TRUE(r.passed()) << to_string(desc);
    EXPECT_GE(r.checks.size(), 9u);
  }
}

TEST(CertifyFaceTest, G2AllPass) {
  const RootDatum d = g2();
  for (const auto& desc : enumerate_admissible(d)) {
    EXPECT_TRUE(certify_face(desc, d).passed()) << to_string(desc);
  }
}

TEST(CertifyFaceTest, ItemizesLeviFailure) {
  const RootDatum d = so_star(4);
  const FaceReport r =
      certify_face(make_descriptor(d.params(), {{1, 1}}), d);
  EXPECT_FALSE(r.passed());
  for (const auto& c : r.checks) {
    if (c.name == "levi_factors") {
      EXPECT_FALSE(c.passed);
      EXPECT_THAT(c.detail, ::testing::HasSubstr("compact"));
    } else {
      EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    }
  }
}

TEST(CertifyAllTest, SweepPasses) {
  for (const auto& d : testing::sweep_data()) {
    if (d.rank() > 5) continue;
    VerifyOptions opts;
    opts.jobs = 4;
    const VerifyReport r = certify_all(d, opts);
    EXPECT_TRUE(r.passed()) << describe(d.params());
    EXPECT_EQ(r.orbit_size, weyl_group_order(d));
  }
}

TEST(CertifyAllTest, DeterministicAcrossJobCounts) {
  const RootDatum d = so_even(3, 2);
  VerifyOptions one;
  VerifyOptions many;
  many.jobs = 6;
  const VerifyReport a = certify_all(d, one);
  const VerifyReport b = certify_all(d, many);
  ASSERT_EQ(a.faces.size(), b.faces.size());
  for (std::size_t i = 0; i < a.faces.size(); ++i) {
    EXPECT_EQ(a.faces[i].descriptor, b.faces[i].descriptor);
    EXPECT_EQ(a.faces[i].checks, b.faces[i].checks);
  }
  EXPECT_EQ(a.bijection.checks, b.bijection.checks);
  EXPECT_EQ(a.bijection.samples, b.bijection.samples);
}

TEST(CertifyBijectionTest, Injective) {
  for (const RootDatum& d : {sp(3), so_star(4), g2()}) {
    const auto orb = orbit(d.rho(), d);
    const auto ds = enumerate_admissible(d);
    const BijectionReport r = certify_bijection(d, ds, orb, 99, 100);
    EXPECT_TRUE(r.passed()) << describe(d.params());
    EXPECT_EQ(r.seed, 99u);
    EXPECT_EQ(r.samples, 100u);
  }
}

TEST(CertifyBijectionTest, DetectsDuplicateDescriptors) {
  const RootDatum d = sp(2);
  const auto orb = orbit(d.rho(), d);
  auto ds = enumerate_admissible(d);
  ds.push_back(ds.back());
  const BijectionReport r = certify_bijection(d, ds, orb);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.checks[0].passed);
  EXPECT_FALSE(r.checks[1].passed);
}

TEST(KDominanceSweepTest, BothDirections) {
  for (const RootDatum& d : {sp(2), sp(3), sp(4), so_even(2, 2),
                             so_even(3, 1), so_star(4), g2()}) {
    const auto orb = orbit(d.rho(), d);
    const SweepResult r =
        sweep_k_dominance_criterion(d, std::min(d.rank(), 4), orb);
    EXPECT_GT(r.k_dominant, 0u);
    EXPECT_LT(r.k_dominant, r.checked);
    EXPECT_TRUE(r.mismatches.empty())
        << describe(d.params()) << " " << to_string(r.mismatches.front());
  }
}

TEST(BruteForceTest, G2HasSixParabolics) {
  EXPECT_EQ(brute_force_admissible_parabolics(g2(), 3).size(), 6u);
}

}  // namespace
}  // namespace weylface

#include "profile_checks.hpp"
#include "random_complexes.hpp"

#include "towercalc/complex/constructions.hpp"
#include "towercalc/errors.hpp"
#include "towercalc/hofib/hofib.hpp"
#include "towercalc/sections/model_checks.hpp"
#include "towercalc/trunc/truncation.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace towercalc;
using namespace towercalc::complex;
using namespace towercalc::hofib;
using exactalg::Integer;

namespace {

oracle::ScrambledComplex random_free(std::mt19937_64& rng) {
  return oracle::scrambled_complex(rng, 0, oracle::draw(rng, 0, 4),
                                   static_cast<int>(oracle::draw(rng, 1, 7)));
}

}  // namespace

TEST(BuildHofib, Spheres) {
  for (long m = 0; m <= 3; ++m)
    for (long k = -1; k <= 4; ++k) {
      const auto s = build_hofib_section(sphere(m), k);
      EXPECT_TRUE(is_quasi_iso(s.unit).passed);
      EXPECT_TRUE(sections::is_cofibration(s.unit).passed);
      EXPECT_TRUE(sections::is_fibration(s.projection()).passed);
      const auto fiber = homology(hofib_fiber(s).complex);
      // k >= m: P_k X ~ X and the fiber is acyclic; k < m: the fiber is X.
      if (k >= m) {
        EXPECT_EQ(group_at(homology(s.cospan.x0), m), FpAbelianGroup(1, {}));
        for (const auto& [i, g] : fiber) EXPECT_TRUE(g.is_zero()) << m << " " << k << " " << i;
      } else {
        EXPECT_TRUE(s.cospan.x0.length() == 0 || homology(s.cospan.x0).empty() ||
                    group_at(homology(s.cospan.x0), m).is_zero());
        EXPECT_EQ(group_at(fiber, m), FpAbelianGroup(1, {}));
      }
    }
}

TEST(BuildHofib, MooreAcrossTheCut) {
  // Z --2--> Z in degrees k+1, k. C_k X has H_{k+1} = 0 and is acyclic; the
  // fiber of X' -> P_k X has the same homology although P_k X = Z/2[k].
  for (long k = 0; k <= 2; ++k) {
    const auto x = moore(2, k);
    const auto s = build_hofib_section(x, k);
    EXPECT_EQ(group_at(homology(s.cospan.x0), k), FpAbelianGroup::cyclic(2));
    const auto fiber = homology(hofib_fiber(s).complex);
    const auto cover = homology(trunc::connective_cover(x, k).complex);
    for (long i = k - 2; i <= k + 3; ++i) EXPECT_EQ(group_at(fiber, i), group_at(cover, i)) << i;
    // One degree lower the whole Moore complex sits in the fiber.
    const auto below = homology(hofib_fiber(build_hofib_section(x, k - 1)).complex);
    EXPECT_EQ(group_at(below, k), FpAbelianGroup::cyclic(2));
  }
  EXPECT_THROW(build_hofib_section(concentrated(FpAbelianGroup::cyclic(3), 0), 0), NotCofibrant);
}

TEST(BuildHofib, RandomFiberMatchesCover) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = random_free(rng);
    const long k = oracle::draw(rng, -1, s.complex.max_degree() + 1);
    const auto section = build_hofib_section(s.complex, k);
    EXPECT_TRUE(sections::is_fibration(section.projection()).passed);
    // Oracle: the part of the generated homology in degrees > k.
    expect_profile(homology(hofib_fiber(section).complex),
                   clip(s.homology, k + 1, s.complex.max_degree() + 1), k - 2,
                   s.complex.max_degree() + 2);
  }
}

TEST(Compatibility, Examples) {
  for (long k = 0; k <= 2; ++k) {
    EXPECT_TRUE(compatibility_check(k, {sphere(k + 1)}).passed);
    EXPECT_TRUE(compatibility_check(k, {sphere(k)}).passed);
    // H_k = Z/3 and H_{k+2} = Z: neither colocal nor P_k-acyclic.
    const auto x = direct_sum(moore(3, k), sphere(k + 2));
    EXPECT_TRUE(compatibility_check(k, {x}).passed);
    EXPECT_FALSE(trunc::is_Pn_weq(ChainMap::zero(zero_complex(), x), k).passed);
    EXPECT_EQ(trunc::is_Pn_weq(ChainMap::zero(zero_complex(), x), k).first_failure()->degree, k);
  }
  EXPECT_THROW(compatibility_check(0, {concentrated(FpAbelianGroup::cyclic(2), 1)}), NotCofibrant);
}

TEST(Compatibility, RandomCorpus) {
  std::mt19937_64 rng(62);
  std::vector<ChainComplex> corpus;
  for (int i = 0; i < 60; ++i) corpus.push_back(random_free(rng).complex);
  for (long k = -1; k <= 4; ++k) {
    const auto cert = compatibility_check(k, corpus);
    EXPECT_TRUE(cert.passed) << cert.render();
  }
}

TEST(DerivedCounit, ExamplesAndRandom) {
  for (long m = 0; m <= 2; ++m)
    for (long k = -1; k <= 3; ++k) EXPECT_TRUE(derived_counit_check(sphere(m), k).passed);
  for (long p : {2, 3, 4})
    for (long k = 0; k <= 2; ++k) {
      const auto cert = derived_counit_check(moore(p, k), k);
      EXPECT_TRUE(cert.passed) << cert.render();
    }
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = random_free(rng);
    const long k = oracle::draw(rng, -1, s.complex.max_degree() + 1);
    const auto cert = derived_counit_check(s.complex, k);
    EXPECT_TRUE(cert.passed) << cert.render();
  }
}

TEST(LayerEquivalence, Examples) {
  for (long k = 0; k <= 2; ++k) {
    const auto x = direct_sum(sphere(k + 1), sphere(k + 3));
    EXPECT_TRUE(layer_equivalence_check(x, k).passed);
    EXPECT_TRUE(layer_equivalence_check(sphere(k + 2), k).passed);
    const auto cert = layer_equivalence_check(moore(4, k + 1), k);
    EXPECT_TRUE(cert.passed) << cert.render();
    EXPECT_NE(cert.detail.find("Z/4"), std::string::npos) << cert.detail;
  }
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = random_free(rng);
    const long k = oracle::draw(rng, -1, s.complex.max_degree());
    const auto cert = layer_equivalence_check(s.complex, k);
    EXPECT_TRUE(cert.passed) << cert.render();
  }
}

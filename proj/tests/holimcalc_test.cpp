#include "profile_checks.hpp"
#include "random_complexes.hpp"

#include "towercalc/complex/constructions.hpp"
#include "towercalc/errors.hpp"
#include "towercalc/holimcalc/holim.hpp"
#include "towercalc/sections/model_checks.hpp"
#include "towercalc/trunc/truncation.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace towercalc;
using namespace towercalc::complex;
using namespace towercalc::holimcalc;
using exactalg::Integer;
using exactalg::IntegerMatrix;
using sections::postnikov_tower;

namespace {

TowerSection constant_tower(const ChainComplex& x, long m) {
  std::vector<ChainComplex> levels(static_cast<std::size_t>(m + 1), x);
  std::vector<ChainMap> maps(static_cast<std::size_t>(m), ChainMap::identity(x));
  return {levels, maps, {}, 0};
}

oracle::ScrambledComplex random_free(std::mt19937_64& rng) {
  return oracle::scrambled_complex(rng, 0, oracle::draw(rng, 0, 4),
                                   static_cast<int>(oracle::draw(rng, 1, 7)));
}

}  // namespace

TEST(TowerLimit, Examples) {
  const auto x = moore(6, 1);
  EXPECT_EQ(tower_limit(constant_tower(x, 3)).complex, x);
  const auto t = postnikov_tower(x, 4);
  const auto lim = tower_limit(t);
  EXPECT_EQ(lim.complex, trunc::postnikov_section(x, 2).complex);
  ASSERT_EQ(lim.projections.size(), 5u);
  EXPECT_TRUE(equal_maps(lim.projections[0], t.composite(4, 0)));

  // Claiming stability from level 0 for Z[2] is false at level 2.
  const auto s = postnikov_tower(sphere(2), 4);
  const TowerSection fake(s.levels(), s.maps(), s.tags(), 0);
  try {
    tower_limit(fake);
    FAIL() << "expected StabilizationViolated";
  } catch (const StabilizationViolated& e) {
    EXPECT_EQ(e.index(), 2u);
  }
  EXPECT_THROW(tower_limit(postnikov_tower(sphere(5), 3)), StabilizationViolated);
}

TEST(Milnor, PostnikovTowers) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const auto s = random_free(rng);
    const long top = s.complex.max_degree();
    const auto t = postnikov_tower(s.complex, top + 1);
    const auto lim = tower_limit(t);
    expect_profile(homology(lim.complex), s.homology, -1, top + 2);
    for (long i = -1; i <= top + 2; ++i) {
      const auto cert = milnor_check(t, i);
      EXPECT_TRUE(cert.passed) << cert.render();
    }
  }
  EXPECT_TRUE(milnor_check(constant_tower(moore(3, 0), 2), 0).passed);
  EXPECT_TRUE(milnor_check(postnikov_tower(sphere(1), 2), 9).passed);
}

TEST(Milnor, TimesPTowerIsRejected) {
  // Z <-p- Z <-p- ... : images p^k Z never stabilize, so lim^1 = Z_p / Z != 0.
  const auto z = sphere(0);
  for (long p : {2, 3}) {
    std::vector<ChainComplex> levels(6, z);
    std::vector<ChainMap> maps(5, ChainMap(z, z, {IntegerMatrix{{p}}}));
    const TowerSection t(levels, maps, std::vector<sections::LevelStructure>(6));
    EXPECT_EQ(homology_diagnostic(t, 0, 5), exactalg::MittagLefflerVerdict::not_stabilized_within(5));
    EXPECT_EQ(homology_diagnostic(t, 1, 5).stabilized, true);
    EXPECT_THROW(milnor_check(t, 0), StabilizationViolated);
    const TowerSection claimed(levels, maps, std::vector<sections::LevelStructure>(6), 0);
    EXPECT_THROW(milnor_check(claimed, 0), StabilizationViolated);
  }
}

TEST(Hypercomplete, ExamplesAndRandom) {
  EXPECT_TRUE(hypercomplete_check(sphere(3)).passed);
  for (long p : {2, 3, 5}) EXPECT_TRUE(hypercomplete_check(moore(p, 0)).passed);
  EXPECT_TRUE(hypercomplete_check(zero_complex()).passed);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = random_free(rng);
    const Integer t = oracle::draw(rng, 2, 6);
    const auto x = rng() % 2 ? s.complex : oracle::reduce_mod(s.complex, t);
    const auto cert = hypercomplete_check(x);
    EXPECT_TRUE(cert.passed) << cert.render();
  }
}

TEST(GeneratorCommutation, Examples) {
  const auto x = moore(2, 2);
  for (long n = 0; n <= 4; ++n) {
    EXPECT_TRUE(generator_commutation_check(0, x, n).passed) << n;
    EXPECT_TRUE(generator_commutation_check(1, x, n).passed) << n;
  }
  // i beyond the span: both sides vanish in degrees >= 0.
  EXPECT_TRUE(generator_commutation_check(7, x, 3).passed);
  EXPECT_THROW(generator_commutation_check(0, concentrated(FpAbelianGroup::cyclic(2), 0), 0),
               TorsionSource);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_free(rng);
    for (long i = 0; i <= 2; ++i)
      for (long n = 0; n <= s.complex.max_degree(); ++n) {
        const auto cert = generator_commutation_check(i, s.complex, n);
        EXPECT_TRUE(cert.passed) << cert.render();
      }
  }
}

TEST(UctLadder, DegenerateSource) {
  // M = Z[0]: Hom(M, N) = N, no Ext corners.
  const auto n_complex = direct_sum(moore(2, 0), shift(sphere(0), 2));
  const auto report = uct_ladder(sphere(0), n_complex, 1);
  EXPECT_TRUE(report.certificate.passed) << report.certificate.render();
  EXPECT_EQ(report.concentration, 0);
  for (const auto& row : report.rows) {
    EXPECT_TRUE(row.ext_corner.is_zero());
    EXPECT_EQ(row.direct, group_at(homology(n_complex), row.k));
  }
  EXPECT_TRUE(report.discrepancy->is_zero());
}

TEST(UctLadder, ExtObstructionAppears) {
  for (long n = 0; n <= 2; ++n) {
    const auto report = uct_ladder(moore(2, n), moore(2, n + 1), n);
    EXPECT_TRUE(report.certificate.passed) << report.certificate.render();
    EXPECT_EQ(report.concentration, n);
    EXPECT_EQ(*report.discrepancy, FpAbelianGroup::cyclic(2));
    // H_0(Hom(M, N)) = Ext(Z/2, Z/2) while the truncated side is 0.
    for (const auto& row : report.rows)
      if (row.k == 0) {
        EXPECT_EQ(row.direct, FpAbelianGroup::cyclic(2));
        EXPECT_TRUE(row.direct_truncated.is_zero());
      }
  }
}

TEST(UctLadder, TorsionFreeTargetAgreesAtN) {
  const auto m = moore(3, 0);
  const auto n_complex = direct_sum(sphere(0), direct_sum(sphere(1), moore(0, 1)));
  const auto report = uct_ladder(m, n_complex, 1);
  EXPECT_TRUE(report.certificate.passed) << report.certificate.render();
  EXPECT_FALSE(report.discrepancy->is_zero());  // Ext(Z/3, Z) = Z/3 from H_2 = Z
  const auto sphere_target = uct_ladder(sphere(1), n_complex, 1);
  EXPECT_TRUE(sphere_target.discrepancy->is_zero());
  for (const auto& row : sphere_target.rows)
    if (row.k == 0) EXPECT_EQ(row.direct, row.direct_truncated);
}

TEST(UctLadder, RandomInstances) {
  std::mt19937_64 rng(44);
  int obstructed = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = oracle::scrambled_complex(rng, 0, 1, 2).complex;
    const auto s = random_free(rng);
    const long n = oracle::draw(rng, 0, 3);
    const auto report = uct_ladder(m, s.complex, n);
    EXPECT_TRUE(report.certificate.passed) << report.certificate.render();
    if (report.discrepancy && !report.discrepancy->is_zero()) ++obstructed;
  }
  EXPECT_EQ(uct_ladder(zero_complex(), sphere(0), 0).rows.size(), 0u);
  (void)obstructed;
}

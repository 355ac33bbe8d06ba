#pragma once

#include "towercalc/certificate.hpp"
#include "towercalc/exactalg/group_tower.hpp"
#include "towercalc/sections/sections.hpp"

#include <optional>
#include <vector>

namespace towercalc::holimcalc {

using complex::ChainComplex;
using complex::ChainMap;
using exactalg::FpAbelianGroup;
using sections::TowerSection;

struct TowerLimit {
  ChainComplex complex;
  /// lim -> X_i for every level i.
  std::vector<ChainMap> projections;
};

/// The limit of a tower whose structure maps are isomorphisms from the declared
/// stabilization level on: the top level, with the composite projections.
/// Throws StabilizationViolated if nothing is declared, or naming the first
/// level X_{i+1} above it whose map to X_i is not an isomorphism.
TowerLimit tower_limit(const TowerSection& t);

/// Milnor sequence in degree i: the towers H_{i+1}(X_.) and H_i(X_.) stabilize
/// (so lim^1 vanishes), images stabilize, and H_i(lim) -> lim H_i(X_.) is an
/// isomorphism. Throws StabilizationViolated like tower_limit.
Certificate milnor_check(const TowerSection& t, long i);

/// Mittag-Leffler diagnostic of the tower H_i(X_.), needing no declared
/// stabilization. Requires horizon <= number of structure maps.
exactalg::MittagLefflerVerdict homology_diagnostic(const TowerSection& t, long i,
                                                   std::size_t horizon);

/// X -> lim of its Postnikov tower of length max(top, 0) + 1 is a
/// quasi-isomorphism, and its composites with the projections are the
/// truncation quotients.
Certificate hypercomplete_check(const ChainComplex& x);

/// H_k(Hom(Z[i], P_n X)) agrees with H_k(Hom(Z[i], X)) for k <= n - i and
/// vanishes above, for every k >= 0. Throws TorsionSource if X has relations.
Certificate generator_commutation_check(long i, const ChainComplex& x, long n);

/// One degree k of the universal coefficient comparison for Hom(M, N) and
/// Hom(M, P_n N). Corners are the sums over j of Hom(H_j M, H_{j+k} N) and
/// Ext(H_j M, H_{j+k+1} N).
struct LadderRow {
  long k = 0;
  FpAbelianGroup hom_corner, ext_corner;
  FpAbelianGroup hom_corner_truncated, ext_corner_truncated;
  FpAbelianGroup direct;            // H_k(Hom(M, N))
  FpAbelianGroup direct_truncated;  // H_k(Hom(M, P_n N))
};

struct LadderReport {
  long n = 0;
  /// The single degree carrying H_*(M) (0 when M is acyclic); empty when
  /// H_*(M) lives in several degrees.
  std::optional<long> concentration;
  std::vector<LadderRow> rows;
  /// Ext(H_c M, H_{n+1} N), the obstruction at k = n - c.
  std::optional<FpAbelianGroup> discrepancy;
  Certificate certificate;
};

/// Certifies (a) the split universal coefficient sequence in every degree on
/// both sides; and, when H_*(M) sits in one degree c, (b) H_k(Hom(M, P_n N)) = 0
/// for k > n - c, (c) equality with H_k(Hom(M, N)) for k < n - c, (d) equality
/// at k = n - c exactly when the Ext corner vanishes. Throws TorsionSource if
/// M has relations.
LadderReport uct_ladder(const ChainComplex& m, const ChainComplex& n_complex, long n);

}  // namespace towercalc::holimcalc

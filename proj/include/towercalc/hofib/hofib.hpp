#pragma once

#include "towercalc/certificate.hpp"
#include "towercalc/complex/constructions.hpp"
#include "towercalc/sections/sections.hpp"

#include <vector>

namespace towercalc::hofib {

using complex::ChainComplex;
using complex::ChainMap;

/// The cospan * -> P_k X <- X' with X -> X' -> P_k X factoring the truncation
/// quotient: X' = X + D with D a sum of disks, one per generator of P_k X.
struct HofibSection {
  long k = 0;
  sections::CospanSection cospan;
  /// X -> X': injective with free cokernel D, a quasi-isomorphism.
  ChainMap unit;

  const ChainComplex& fibrant_replacement() const noexcept { return cospan.x2; }
  /// X' -> P_k X, surjective in every degree.
  const ChainMap& projection() const noexcept { return cospan.right; }
};

/// Throws NotCofibrant if X has relations.
HofibSection build_hofib_section(const ChainComplex& x, long k);

/// The degreewise fiber of X' -> P_k X, the pullback of the cospan.
complex::ComplexPullback hofib_fiber(const HofibSection& s);

/// For each X in the corpus, X is colocal for Z[k+1] (C_k X -> X is a
/// quasi-isomorphism) if and only if 0 -> X is a P_k equivalence. Throws
/// NotCofibrant on a complex with relations.
Certificate compatibility_check(long k, const std::vector<ChainComplex>& corpus);

/// X -> X' is a trivial cofibration, X' -> P_k X is surjective, and the map
/// C_k X -> fiber(X' -> P_k X) induced by C_k X -> X -> X' is a
/// quasi-isomorphism. Throws NotCofibrant.
Certificate derived_counit_check(const ChainComplex& x, long k);

/// The fiber of the hofib section of (a cofibrant replacement of) P_{k+1} X at
/// k has homology H_{k+1}(X) in degree k + 1 and nothing else. Throws NotCofibrant.
Certificate layer_equivalence_check(const ChainComplex& x, long k);

}  // namespace towercalc::hofib

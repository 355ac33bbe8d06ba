#pragma once

#include "towercalc/complex/chain_complex.hpp"

#include <vector>

namespace towercalc::complex {

/// Degreewise free F with a quasi-isomorphism q : F -> X.
///
/// F_k = Z^{g_k} + Z^{r_{k-1}}, where the r_{k-1} extra generators hit a basis
/// Rb_{k-1} of the relation lattice of X_{k-1}:
///   D(x, y) = (d x + Rb y, -h x - rho y),
/// with d d = Rb h and d Rb = Rb rho. q(x, y) = x. A free X comes back
/// unchanged with q = id.
struct CofibrantReplacement {
  ChainComplex complex;
  ChainMap map;
  /// Rb_k for k = source min_degree .. max_degree (columns are a basis).
  long basis_min_degree = 0;
  std::vector<IntegerMatrix> relation_bases;

  IntegerMatrix relation_basis(long k) const;
};

CofibrantReplacement cofibrant_replacement(const ChainComplex& x);

/// A map F : X -> Y lifted to the replacements, Phi(x, y) = (F x, sigma y + tau x),
/// so that qy o Phi = F o qx.
ChainMap lift_map(const ChainMap& f, const CofibrantReplacement& qx,
                  const CofibrantReplacement& qy);

}  // namespace towercalc::complex

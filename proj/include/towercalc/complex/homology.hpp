#pragma once

#include "towercalc/certificate.hpp"
#include "towercalc/complex/chain_complex.hpp"

#include <map>

namespace towercalc::complex {

using exactalg::Subquotient;

/// Degree -> H_k, zero groups omitted.
using HomologyProfile = std::map<long, FpAbelianGroup>;

/// H_k(X) = Z_k / B_k as a subquotient of the generators of degree k, where
/// Z_k = {x : d x in relations} and B_k = im d_{k+1} + relations.
Subquotient homology_at(const ChainComplex& x, long k);

HomologyProfile homology(const ChainComplex& x);

/// Only the degrees in [lo, hi].
HomologyProfile homology(const ChainComplex& x, long lo, long hi);

/// H_k of the profile (zero if absent).
FpAbelianGroup group_at(const HomologyProfile& h, long k);

/// H_k(f) on the normal-form generators of both sides.
GroupMap induced_map(const ChainMap& f, long k);

/// Connecting map H_k(C) -> H_{k-1}(A) of a short exact sequence
/// 0 -> A --i--> B --p--> C -> 0 of complexes: lift, differentiate, pull back.
GroupMap connecting_map(const ChainMap& i, const ChainMap& p, long k);

/// H_k(f) is an isomorphism for every k in [lo, hi]. The failing leaf names the
/// least witness degree.
Certificate homology_isomorphism(const ChainMap& f, long lo, long hi, std::string check);

/// H_k(f) iso in every degree.
Certificate is_quasi_iso(const ChainMap& f);

/// Degree span [lo, hi] covering both ends of a map.
std::pair<long, long> degree_span(const ChainMap& f);

/// True when all homology vanishes.
bool is_acyclic(const ChainComplex& x);

}  // namespace towercalc::complex

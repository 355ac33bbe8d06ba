#pragma once

#include "towercalc/certificate.hpp"
#include "towercalc/complex/chain_complex.hpp"

namespace towercalc::trunc {

using complex::ChainComplex;
using complex::ChainMap;

/// P_n X with the quotient q : X -> P_n X.
struct PostnikovSection {
  ChainComplex complex;
  ChainMap quotient;
};

/// C_k X with the inclusion j : C_k X -> X.
struct ConnectiveCover {
  ChainComplex complex;
  ChainMap inclusion;
};

/// Good truncation above n: P_i = X_i for i < n, P_n = X_n / im d_{n+1},
/// P_i = 0 for i > n. Zero when n is below the bottom degree.
PostnikovSection postnikov_section(const ChainComplex& x, long n);

/// The quotient of quotients P_{n+1} X -> P_n X.
ChainMap postnikov_map(const ChainComplex& x, long n);

/// Good truncation from below: C_i = X_i for i >= k + 2, C_{k+1} = ker d_{k+1},
/// C_i = 0 for i <= k. The whole of X when k is below the bottom degree.
ConnectiveCover connective_cover(const ChainComplex& x, long k);

/// H_i(X) = 0 for every i > n; a failure names the least offending degree.
Certificate is_n_type(const ChainComplex& x, long n);

/// H_i(f) is an isomorphism for every i <= n.
Certificate is_Pn_weq(const ChainMap& f, long n);

/// For 0 -> C_k X -> X -> X / C_k X -> 0: q o j = 0, X / C_k X is
/// quasi-isomorphic to P_k X, and the homology long exact sequence is exact.
Certificate fiber_sequence_check(const ChainComplex& x, long k);

/// The Postnikov layer C_k P_{k+1} X.
ChainComplex layer(const ChainComplex& x, long k);

/// The layer has homology concentrated in degree k + 1, equal to H_{k+1}(X).
Certificate layer_check(const ChainComplex& x, long k);

}  // namespace towercalc::trunc

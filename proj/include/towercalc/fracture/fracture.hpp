#pragma once

#include "towercalc/certificate.hpp"
#include "towercalc/complex/chain_complex.hpp"
#include "towercalc/fracture/localization.hpp"
#include "towercalc/sections/sections.hpp"

#include <map>
#include <vector>

namespace towercalc::fracture {

using complex::ChainComplex;

/// Disjoint finite prime sets J and K. Checks require J and K to cover the
/// torsion primes of their input; primes outside that scope play no role.
struct PrimePartition {
  PrimeSet j, k;

  /// Throws std::invalid_argument if J and K meet or contain a non-prime.
  PrimePartition(PrimeSet j, PrimeSet k);

  bool covers(const PrimeSet& scope) const;
  /// Throws PartitionTooSmall naming the first uncovered prime.
  void require_covers(const PrimeSet& scope, const std::string& who) const;
  std::string to_string() const;

  /// Every split of `scope` into (J, K), J running through the subsets of scope.
  static std::vector<PrimePartition> all_splits(const PrimeSet& scope);
};

/// Torsion primes of every homology group of x.
PrimeSet homology_torsion_primes(const ChainComplex& x);

/// H_i(X) (x) Z_J in every degree where H_i(X) is nonzero.
std::map<long, LocalizedGroup> localize_homology(const ChainComplex& x, const LocalRing& ring);

/// 0 -> A -> A_J + A_K -> A_Q -> 0 is exact. Torsion: A_tors -> T_J + T_K is an
/// isomorphism, and the pullback of T_J -> 0 <- T_K is A_tors. Free part:
/// rk A = rk A_J = rk A_K = rk A_Q, so rk A = rk A_J + rk A_K - rk A_Q.
/// Throws PartitionTooSmall if P does not cover the torsion primes of A.
Certificate algebraic_fracture_check(const FpAbelianGroup& a, const PrimePartition& p);

/// The pullback of A_J -> A_Q <- A_K as an abelian group: torsion from
/// pullback_group, rank from the bookkeeping above.
FpAbelianGroup reassemble(const FpAbelianGroup& a, const PrimePartition& p);

/// The algebraic fracture check on H_i(X) in every degree, and the splicing of
/// the resulting short exact sequences into a Mayer-Vietoris sequence with
/// zero connecting maps. Throws PartitionTooSmall.
Certificate arithmetic_square_check(const ChainComplex& x, const PrimePartition& p);

/// Model checks for a cospan X_J -> X_Q <- X_K. Fibrant side: both legs
/// surjective in degrees >= 1 and each vertex local for its tag (homology
/// torsion supported on the tag primes). Cofibrant side: degreewise free
/// vertices and legs that are weak equivalences in the structure of X_0.
Certificate cospan_model_check(const sections::CospanSection& s);

}  // namespace towercalc::fracture

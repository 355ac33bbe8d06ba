#pragma once

#include "towercalc/exactalg/group_map.hpp"

#include <set>
#include <string>
#include <vector>

namespace towercalc::fracture {

using exactalg::FpAbelianGroup;
using exactalg::GroupMap;
using exactalg::Integer;

using PrimeSet = std::set<long>;

/// Z_J: the integers with every prime outside J inverted. J = {} is Q.
struct LocalRing {
  PrimeSet primes;

  bool is_rational() const noexcept { return primes.empty(); }
  std::string name() const;
  friend bool operator==(const LocalRing&, const LocalRing&) = default;
};

/// A finitely generated Z_J-module in normal form: rank plus torsion
/// invariant factors supported on J.
struct LocalizedGroup {
  LocalRing ring;
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const noexcept { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const LocalizedGroup&, const LocalizedGroup&) = default;
};

/// The part of a positive integer supported on the given primes.
Integer primary_part(Integer order, const PrimeSet& primes);

/// Prime divisors of a positive integer.
PrimeSet prime_divisors(Integer order);

/// Primes dividing some torsion coefficient of the group.
PrimeSet torsion_primes(const FpAbelianGroup& a);

/// A (x) Z_J.
LocalizedGroup localize(const FpAbelianGroup& a, const LocalRing& ring);

/// Kernel and cokernel of f vanish after tensoring with Z_J.
bool is_local_isomorphism(const GroupMap& f, const LocalRing& ring);

}  // namespace towercalc::fracture

#include "towercalc/fracture/localization.hpp"

#include <sstream>
#include <stdexcept>

namespace towercalc::fracture {

std::string LocalRing::name() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  os << "Z_(";
  bool first = true;
  for (long p : primes) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  os << ")";
  return os.str();
}

std::string LocalizedGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << ring.name() << "/" << t;
    first = false;
  }
  if (rank > 0) {
    os << (first ? "" : " + ") << ring.name();
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Integer primary_part(Integer order, const PrimeSet& primes) {
  if (order < 0) order = -order;
  Integer part = 1;
  for (long p : primes)
    while (order % p == 0) {
      order /= p;
      part *= p;
    }
  return part;
}

PrimeSet prime_divisors(Integer order) {
  if (order < 0) order = -order;
  if (order == 0) throw std::invalid_argument("prime_divisors: zero");
  PrimeSet out;
  for (long p = 2; Integer(p) * p <= order; ++p)
    if (order % p == 0) {
      out.insert(p);
      while (order % p == 0) order /= p;
    }
  if (order > 1) {
    if (!order.fits_slong_p()) throw std::invalid_argument("prime_divisors: prime factor too large");
    out.insert(order.get_si());
  }
  return out;
}

PrimeSet torsion_primes(const FpAbelianGroup& a) {
  PrimeSet out;
  for (const auto& t : a.torsion()) out.merge(prime_divisors(t));
  return out;
}

LocalizedGroup localize(const FpAbelianGroup& a, const LocalRing& ring) {
  std::vector<Integer> parts;
  if (!ring.is_rational())
    for (const auto& t : a.torsion()) {
      Integer part = primary_part(t, ring.primes);
      if (part > 1) parts.push_back(part);
    }
  // Invariant factors divide each other, and so do their J-parts.
  return {ring, a.rank(), std::move(parts)};
}

bool is_local_isomorphism(const GroupMap& f, const LocalRing& ring) {
  const auto kic = exactalg::kernel_image_cokernel(f);
  return localize(kic.kernel, ring).is_zero() && localize(kic.cokernel, ring).is_zero();
}

}  // namespace towercalc::fracture

#include "towercalc/fracture/fracture.hpp"

#include "towercalc/complex/homology.hpp"
#include "towercalc/errors.hpp"
#include "towercalc/sections/model_checks.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace towercalc::fracture {

using exactalg::IntegerMatrix;
using exactalg::Presentation;

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string show(const PrimeSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (long p : s) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  os << "}";
  return os.str();
}

// Z/t_1 + ... + Z/t_s on s generators; factors equal to 1 kill their generator.
Presentation cyclic_sum(const std::vector<Integer>& orders) {
  const std::size_t s = orders.size();
  return {s, IntegerMatrix::diagonal(s, s, orders)};
}

std::vector<Integer> local_orders(const FpAbelianGroup& a, const PrimeSet& primes) {
  std::vector<Integer> out;
  for (const auto& t : a.torsion()) out.push_back(primary_part(t, primes));
  return out;
}

FpAbelianGroup torsion_group(const LocalizedGroup& g) { return {0, g.torsion}; }

}  // namespace

PrimePartition::PrimePartition(PrimeSet j_, PrimeSet k_) : j(std::move(j_)), k(std::move(k_)) {
  for (const auto* s : {&j, &k})
    for (long p : *s)
      if (!is_prime(p)) throw std::invalid_argument("PrimePartition: " + std::to_string(p) + " is not prime");
  for (long p : j)
    if (k.count(p)) throw std::invalid_argument("PrimePartition: " + std::to_string(p) + " lies in J and K");
}

bool PrimePartition::covers(const PrimeSet& scope) const {
  for (long p : scope)
    if (!j.count(p) && !k.count(p)) return false;
  return true;
}

void PrimePartition::require_covers(const PrimeSet& scope, const std::string& who) const {
  for (long p : scope)
    if (!j.count(p) && !k.count(p))
      throw PartitionTooSmall(who + ": prime " + std::to_string(p) + " is in neither J = " +
                              show(j) + " nor K = " + show(k));
}

std::string PrimePartition::to_string() const { return "J = " + show(j) + ", K = " + show(k); }

std::vector<PrimePartition> PrimePartition::all_splits(const PrimeSet& scope) {
  const std::vector<long> primes(scope.begin(), scope.end());
  if (primes.size() >= 8 * sizeof(unsigned long) - 1)
    throw std::invalid_argument("PrimePartition::all_splits: scope too large");
  std::vector<PrimePartition> out;
  for (unsigned long mask = 0; mask < (1UL << primes.size()); ++mask) {
    PrimeSet j, k;
    for (std::size_t i = 0; i < primes.size(); ++i) (mask >> i & 1 ? j : k).insert(primes[i]);
    out.emplace_back(std::move(j), std::move(k));
  }
  return out;
}

PrimeSet homology_torsion_primes(const ChainComplex& x) {
  PrimeSet out;
  for (const auto& [i, h] : complex::homology(x)) out.merge(torsion_primes(h));
  return out;
}

std::map<long, LocalizedGroup> localize_homology(const ChainComplex& x, const LocalRing& ring) {
  std::map<long, LocalizedGroup> out;
  for (const auto& [i, h] : complex::homology(x))
    if (!h.is_zero()) out.emplace(i, localize(h, ring));
  return out;
}

FpAbelianGroup reassemble(const FpAbelianGroup& a, const PrimePartition& p) {
  p.require_covers(torsion_primes(a), "reassemble");
  const LocalizedGroup aj = localize(a, LocalRing{p.j});
  const LocalizedGroup ak = localize(a, LocalRing{p.k});
  const LocalizedGroup aq = localize(a, LocalRing{});
  const FpAbelianGroup tj = torsion_group(aj), tk = torsion_group(ak);
  const auto pb = exactalg::pullback_group(
      exactalg::GroupMap::zero(tj.presentation(), Presentation::free(0)),
      exactalg::GroupMap::zero(tk.presentation(), Presentation::free(0)));
  const std::size_t rank = aj.rank + ak.rank - aq.rank;
  return {rank, pb.group.torsion()};
}

Certificate algebraic_fracture_check(const FpAbelianGroup& a, const PrimePartition& p) {
  p.require_covers(torsion_primes(a), "algebraic_fracture_check");
  const LocalizedGroup aj = localize(a, LocalRing{p.j});
  const LocalizedGroup ak = localize(a, LocalRing{p.k});
  const LocalizedGroup aq = localize(a, LocalRing{});
  Certificate out = Certificate::pass("fracture square for " + a.to_string(),
                                      "A_J = " + aj.to_string() + ", A_K = " + ak.to_string() +
                                          ", A_Q = " + aq.to_string());

  // The torsion of A maps to T_J + T_K by sending each cyclic generator to
  // its images in both primary parts.
  const std::size_t s = a.torsion().size();
  std::vector<Integer> both = local_orders(a, p.j);
  for (const auto& t : local_orders(a, p.k)) both.push_back(t);
  IntegerMatrix m(2 * s, s);
  for (std::size_t i = 0; i < s; ++i) m(i, i) = m(s + i, i) = 1;
  const exactalg::GroupMap split(cyclic_sum(a.torsion()), cyclic_sum(both), m);
  out.add(exactalg::is_isomorphism(split)
              ? Certificate::pass("A_tors -> T_J + T_K is an isomorphism")
              : Certificate::fail("A_tors -> T_J + T_K is an isomorphism"));

  const FpAbelianGroup reassembled = reassemble(a, p);
  const std::string detail = "pullback " + reassembled.to_string() + ", A = " + a.to_string();
  out.add(reassembled == a ? Certificate::pass("pullback of A_J -> A_Q <- A_K is A", detail)
                           : Certificate::fail("pullback of A_J -> A_Q <- A_K is A", detail));

  const bool ranks = aj.rank == a.rank() && ak.rank == a.rank() && aq.rank == a.rank() &&
                     aq.torsion.empty();
  out.add(ranks ? Certificate::pass("rank bookkeeping",
                                    std::to_string(a.rank()) + " = " + std::to_string(aj.rank) +
                                        " + " + std::to_string(ak.rank) + " - " +
                                        std::to_string(aq.rank))
                : Certificate::fail("rank bookkeeping", "ranks differ after localizing"));
  return out;
}

Certificate arithmetic_square_check(const ChainComplex& x, const PrimePartition& p) {
  const complex::HomologyProfile h = complex::homology(x);
  PrimeSet scope;
  for (const auto& [i, g] : h) scope.merge(torsion_primes(g));
  p.require_covers(scope, "arithmetic_square_check");

  Certificate out = Certificate::pass("arithmetic square", p.to_string());
  Certificate degrees = Certificate::pass("short exact sequences in every degree");
  for (const auto& [i, g] : h) {
    Certificate c = algebraic_fracture_check(g, p);
    c.check = "H_" + std::to_string(i) + ": " + c.check;
    c.at_degree(i);
    degrees.add(std::move(c));
  }
  const bool exact = degrees.passed;
  out.add(std::move(degrees));
  // Short exact sequences in every degree leave nothing for the connecting
  // maps of the Mayer-Vietoris sequence to hit.
  out.add(exact ? Certificate::pass("Mayer-Vietoris sequence with zero connecting maps")
                : Certificate::fail("Mayer-Vietoris sequence with zero connecting maps",
                                    "a degree fails to be short exact"));
  return out;
}

Certificate cospan_model_check(const sections::CospanSection& s) {
  Certificate out = Certificate::pass("fracture cospan");

  Certificate fibrant = Certificate::pass("fibrant");
  const std::pair<const char*, const complex::ChainMap*> legs[] = {{"left", &s.left},
                                                                   {"right", &s.right}};
  long index = 1;
  for (const auto& [name, leg] : legs) {
    Certificate c = sections::is_fibration(*leg);
    c.check = std::string(name) + " leg is a fibration";
    c.at_level(index);
    fibrant.add(std::move(c));
    index += 1;
  }
  // Tags are stored in the order X_1, X_0, X_2.
  const std::tuple<long, const ChainComplex*, std::size_t> vertices[] = {
      {1, &s.x1, 0}, {0, &s.x0, 1}, {2, &s.x2, 2}};
  for (const auto& [v, x, slot] : vertices) {
    const auto& tag = s.tags[slot];
    if (tag.kind != sections::LevelStructure::Kind::Local) continue;
    for (const auto& [i, g] : complex::homology(*x)) {
      PrimeSet stray;
      for (long q : torsion_primes(g))
        if (!tag.ring.primes.count(q)) stray.insert(q);
      if (!stray.empty()) {
        auto fail = Certificate::fail("X_" + std::to_string(v) + " is " + tag.ring.name() + "-local",
                                      "H_" + std::to_string(i) + " has torsion at " + show(stray));
        fail.at_level(v).at_degree(i);
        fibrant.add(std::move(fail));
        break;
      }
    }
  }
  out.add(std::move(fibrant));

  Certificate cofibrant = Certificate::pass("cofibrant");
  for (const auto& [v, x, slot] : vertices)
    if (auto d = x->first_relation_degree()) {
      auto fail = Certificate::fail("X_" + std::to_string(v) + " is degreewise free",
                                    "relations in degree " + std::to_string(*d));
      fail.at_level(v).at_degree(*d);
      cofibrant.add(std::move(fail));
    }
  index = 1;
  for (const auto& [name, leg] : legs) {
    Certificate c = sections::is_weak_equivalence(*leg, s.tags[1]);
    c.check = std::string(name) + " leg is a " + s.tags[1].name() + " equivalence";
    c.at_level(index);
    cofibrant.add(std::move(c));
    index += 1;
  }
  out.add(std::move(cofibrant));
  return out;
}

}  // namespace towercalc::fracture

#include "towercalc/complex/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace towercalc::complex {

using exactalg::hstack;
using exactalg::LinearSystem;
using exactalg::preimage_lattice;

Subquotient homology_at(const ChainComplex& x, long k) {
  const std::size_t g = x.generators(k);
  if (g == 0) return {};
  const IntegerMatrix cycles = preimage_lattice(x.differential(k), x.relation_lattice(k - 1));
  const IntegerMatrix boundaries = hstack(x.differential(k + 1), x.relation_lattice(k));
  return {cycles, boundaries};
}

HomologyProfile homology(const ChainComplex& x, long lo, long hi) {
  HomologyProfile out;
  lo = std::max(lo, x.min_degree());
  hi = std::min(hi, x.max_degree());
  for (long k = lo; k <= hi; ++k) {
    FpAbelianGroup h = homology_at(x, k).group();
    if (!h.is_zero()) out.emplace(k, std::move(h));
  }
  return out;
}

HomologyProfile homology(const ChainComplex& x) {
  return homology(x, x.min_degree(), x.max_degree());
}

FpAbelianGroup group_at(const HomologyProfile& h, long k) {
  auto it = h.find(k);
  return it == h.end() ? FpAbelianGroup() : it->second;
}

GroupMap induced_map(const ChainMap& f, long k) {
  const Subquotient hx = homology_at(f.source(), k);
  const Subquotient hy = homology_at(f.target(), k);
  const IntegerMatrix fk = f.component(k);
  const std::size_t n = hx.group().generator_count();
  std::vector<IntegerVector> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cols.push_back(hy.coordinates(fk * hx.generator(i)));
  return GroupMap::between(hx.group(), hy.group(),
                           IntegerMatrix::from_columns(hy.group().generator_count(), cols));
}

GroupMap connecting_map(const ChainMap& i, const ChainMap& p, long k) {
  const ChainComplex& a = i.source();
  const ChainComplex& b = i.target();
  const ChainComplex& c = p.target();
  const Subquotient hc = homology_at(c, k);
  const Subquotient ha = homology_at(a, k - 1);
  const LinearSystem lift(hstack(p.component(k), c.relation_lattice(k)));
  const LinearSystem pull(hstack(i.component(k - 1), b.relation_lattice(k - 1)));
  const std::size_t gb = b.generators(k);
  const std::size_t ga = a.generators(k - 1);
  const IntegerMatrix db = b.differential(k);
  std::vector<IntegerVector> cols;
  for (std::size_t j = 0; j < hc.group().generator_count(); ++j) {
    auto bw = lift.solve(hc.generator(j));
    if (!bw) throw std::logic_error("connecting_map: p is not surjective");
    const IntegerVector bvec(bw->begin(), bw->begin() + static_cast<long>(gb));
    auto aw = pull.solve(db * bvec);
    if (!aw) throw std::logic_error("connecting_map: sequence is not exact in the middle");
    const IntegerVector avec(aw->begin(), aw->begin() + static_cast<long>(ga));
    cols.push_back(ha.coordinates(avec));
  }
  return GroupMap::between(hc.group(), ha.group(),
                           IntegerMatrix::from_columns(ha.group().generator_count(), cols));
}

Certificate homology_isomorphism(const ChainMap& f, long lo, long hi, std::string check) {
  for (long k = lo; k <= hi; ++k) {
    const GroupMap h = induced_map(f, k);
    if (!exactalg::is_isomorphism(h)) {
      auto fail = Certificate::fail(std::move(check),
                                    "H_" + std::to_string(k) + ": " +
                                        exactalg::group_from_presentation(h.source()).to_string() +
                                        " -> " +
                                        exactalg::group_from_presentation(h.target()).to_string() +
                                        " is not an isomorphism");
      fail.at_degree(k);
      return fail;
    }
  }
  return Certificate::pass(std::move(check));
}

std::pair<long, long> degree_span(const ChainMap& f) {
  const ChainComplex& s = f.source();
  const ChainComplex& t = f.target();
  if (s.length() == 0 && t.length() == 0) return {0, -1};
  if (s.length() == 0) return {t.min_degree(), t.max_degree()};
  if (t.length() == 0) return {s.min_degree(), s.max_degree()};
  return {std::min(s.min_degree(), t.min_degree()), std::max(s.max_degree(), t.max_degree())};
}

Certificate is_quasi_iso(const ChainMap& f) {
  auto [lo, hi] = degree_span(f);
  return homology_isomorphism(f, lo, hi, "quasi-isomorphism");
}

bool is_acyclic(const ChainComplex& x) { return homology(x).empty(); }

}  // namespace towercalc::complex

#include "towercalc/trunc/truncation.hpp"

#include "towercalc/complex/homology.hpp"
#include "towercalc/exactalg/lattice.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace towercalc::trunc {

using complex::group_at;
using complex::homology;
using complex::homology_at;
using complex::induced_map;
using exactalg::FpAbelianGroup;
using exactalg::IntegerMatrix;
using exactalg::Presentation;
using exactalg::Subquotient;

namespace {

// p with the columns of `extra` added as relations.
Presentation with_relations(const Presentation& p, const IntegerMatrix& extra) {
  if (extra.cols() == 0) return p;
  const IntegerMatrix rows = extra.transpose();
  if (p.relations.rows() == 0) return {p.generators, rows};
  return {p.generators, exactalg::vstack(p.relations, rows)};
}

std::vector<IntegerMatrix> identities(const ChainComplex& x, long lo, long hi) {
  std::vector<IntegerMatrix> out;
  for (long k = lo; k <= hi; ++k) out.push_back(IntegerMatrix::identity(x.generators(k)));
  return out;
}

std::string deg(long k) { return "H_" + std::to_string(k); }

}  // namespace

PostnikovSection postnikov_section(const ChainComplex& x, long n) {
  if (x.length() == 0 || n < x.min_degree()) {
    ChainComplex zero;
    return {zero, ChainMap::zero(x, zero)};
  }
  const long top = std::min(n, x.max_degree());
  std::vector<Presentation> degrees;
  std::vector<IntegerMatrix> diffs;
  for (long k = x.min_degree(); k <= top; ++k) {
    degrees.push_back(k == n ? with_relations(x.at(k), x.differential(k + 1)) : x.at(k));
    if (k > x.min_degree()) diffs.push_back(x.differential(k));
  }
  ChainComplex p(x.min_degree(), std::move(degrees), std::move(diffs));
  std::vector<IntegerMatrix> q = identities(x, x.min_degree(), top);
  for (long k = top + 1; k <= x.max_degree(); ++k) q.emplace_back(0, x.generators(k));
  ChainMap quotient(x, p, std::move(q));
  return {std::move(p), std::move(quotient)};
}

ChainMap postnikov_map(const ChainComplex& x, long n) {
  const ChainComplex upper = postnikov_section(x, n + 1).complex;
  const ChainComplex lower = postnikov_section(x, n).complex;
  std::vector<IntegerMatrix> comps;
  for (long k = upper.min_degree(); k <= upper.max_degree(); ++k)
    comps.push_back(lower.in_range(k) ? IntegerMatrix::identity(upper.generators(k))
                                      : IntegerMatrix(0, upper.generators(k)));
  return {upper, lower, std::move(comps)};
}

ConnectiveCover connective_cover(const ChainComplex& x, long k) {
  if (k < x.min_degree()) return {x, ChainMap::identity(x)};
  if (k >= x.max_degree()) {
    ChainComplex zero;
    return {zero, ChainMap::zero(zero, x)};
  }
  const long bottom = k + 1;
  const Subquotient kernel(
      exactalg::preimage_lattice(x.differential(bottom), x.relation_lattice(k)),
      x.relation_lattice(bottom));
  const IntegerMatrix& basis = kernel.numerator_basis();
  std::vector<Presentation> degrees{kernel.presentation_on_basis()};
  std::vector<IntegerMatrix> diffs;
  std::vector<IntegerMatrix> j{basis};
  for (long i = bottom + 1; i <= x.max_degree(); ++i) {
    degrees.push_back(x.at(i));
    if (i == bottom + 1) {
      const IntegerMatrix d = x.differential(i);
      IntegerMatrix coords(basis.cols(), d.cols());
      for (std::size_t c = 0; c < d.cols(); ++c) {
        const auto v = kernel.basis_coordinates(d.column(c));
        for (std::size_t r = 0; r < v.size(); ++r) coords(r, c) = v[r];
      }
      diffs.push_back(std::move(coords));
    } else {
      diffs.push_back(x.differential(i));
    }
    j.push_back(IntegerMatrix::identity(x.generators(i)));
  }
  ChainComplex c(bottom, std::move(degrees), std::move(diffs));
  ChainMap inclusion(c, x, std::move(j));
  return {std::move(c), std::move(inclusion)};
}

Certificate is_n_type(const ChainComplex& x, long n) {
  const std::string check = "is " + std::to_string(n) + "-type";
  for (long k = std::max(n + 1, x.min_degree()); k <= x.max_degree(); ++k) {
    const FpAbelianGroup h = homology_at(x, k).group();
    if (!h.is_zero()) {
      auto fail = Certificate::fail(check, deg(k) + " = " + h.to_string());
      fail.at_degree(k);
      return fail;
    }
  }
  return Certificate::pass(check);
}

Certificate is_Pn_weq(const ChainMap& f, long n) {
  const auto [lo, hi] = complex::degree_span(f);
  return complex::homology_isomorphism(f, lo, std::min(hi, n),
                                       "P_" + std::to_string(n) + "-equivalence");
}

Certificate fiber_sequence_check(const ChainComplex& x, long k) {
  Certificate out = Certificate::pass("fiber sequence C_" + std::to_string(k) + " -> X -> P_" +
                                      std::to_string(k));
  const ConnectiveCover cover = connective_cover(x, k);
  const PostnikovSection post = postnikov_section(x, k);

  const ChainMap composite = cover.inclusion.then(post.quotient);
  out.add(complex::equal_maps(composite, ChainMap::zero(cover.complex, post.complex))
              ? Certificate::pass("q o j = 0")
              : Certificate::fail("q o j = 0", "composite is nonzero"));

  if (x.length() == 0) return out;
  // X / C_k X, degreewise.
  std::vector<Presentation> degrees;
  for (long i = x.min_degree(); i <= x.max_degree(); ++i)
    degrees.push_back(with_relations(x.at(i), cover.inclusion.component(i)));
  const ChainComplex quotient(x.min_degree(), std::move(degrees), x.differentials());
  const ChainMap p(x, quotient, identities(x, x.min_degree(), x.max_degree()));

  std::vector<IntegerMatrix> comparison;
  for (long i = x.min_degree(); i <= x.max_degree(); ++i)
    comparison.push_back(post.complex.in_range(i) ? IntegerMatrix::identity(x.generators(i))
                                                  : IntegerMatrix(0, x.generators(i)));
  Certificate qi = complex::is_quasi_iso(ChainMap(quotient, post.complex, comparison));
  qi.check = "X / C_k X -> P_k X is a quasi-isomorphism";
  out.add(std::move(qi));

  Certificate les = Certificate::pass("long exact sequence");
  const ChainMap& j = cover.inclusion;
  for (long i = x.min_degree(); i <= x.max_degree() + 1; ++i) {
    const auto hj = induced_map(j, i);
    const auto hp = induced_map(p, i);
    const auto delta = complex::connecting_map(j, p, i);
    const auto hj_low = induced_map(j, i - 1);
    const std::pair<const char*, bool> spots[] = {
        {"at H_i(X)", exactalg::is_exact_at_middle(hj, hp)},
        {"at H_i(X / C)", exactalg::is_exact_at_middle(hp, delta)},
        {"at H_{i-1}(C)", exactalg::is_exact_at_middle(delta, hj_low)}};
    for (const auto& [where, ok] : spots)
      if (!ok) {
        auto fail = Certificate::fail("exactness", std::string("fails ") + where);
        fail.at_degree(i);
        les.add(std::move(fail));
      }
  }
  out.add(std::move(les));
  return out;
}

ChainComplex layer(const ChainComplex& x, long k) {
  return connective_cover(postnikov_section(x, k + 1).complex, k).complex;
}

Certificate layer_check(const ChainComplex& x, long k) {
  const std::string check = "layer at " + std::to_string(k + 1);
  const ChainComplex l = layer(x, k);
  const auto h = homology(l);
  for (const auto& [i, g] : h)
    if (i != k + 1) {
      auto fail = Certificate::fail(check, deg(i) + " = " + g.to_string() + " outside degree " +
                                               std::to_string(k + 1));
      fail.at_degree(i);
      return fail;
    }
  const FpAbelianGroup expected = homology_at(x, k + 1).group();
  if (group_at(h, k + 1) != expected) {
    auto fail = Certificate::fail(check, deg(k + 1) + " = " + group_at(h, k + 1).to_string() +
                                             ", expected " + expected.to_string());
    fail.at_degree(k + 1);
    return fail;
  }
  return Certificate::pass(check, deg(k + 1) + " = " + expected.to_string());
}

}  // namespace towercalc::trunc

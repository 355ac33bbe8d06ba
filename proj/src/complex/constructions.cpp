#include "towercalc/complex/constructions.hpp"

#include "towercalc/errors.hpp"
#include "towercalc/exactalg/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace towercalc::complex {

using exactalg::block_diagonal;
using exactalg::hstack;
using exactalg::preimage_lattice;
using exactalg::scaled;
using exactalg::Subquotient;
using exactalg::vstack;

namespace {

ChainComplex build(long lo, long hi, const std::function<Presentation(long)>& at,
                   const std::function<IntegerMatrix(long)>& d) {
  if (hi < lo) return {};
  std::vector<Presentation> degrees;
  std::vector<IntegerMatrix> diffs;
  for (long k = lo; k <= hi; ++k) {
    degrees.push_back(at(k));
    if (k > lo) diffs.push_back(d(k));
  }
  return {lo, std::move(degrees), std::move(diffs)};
}

// [lo, hi] of the union of two degree ranges, skipping zero complexes.
std::pair<long, long> span(const ChainComplex& a, const ChainComplex& b) {
  if (a.length() == 0) return {b.min_degree(), b.max_degree()};
  if (b.length() == 0) return {a.min_degree(), a.max_degree()};
  return {std::min(a.min_degree(), b.min_degree()), std::max(a.max_degree(), b.max_degree())};
}

Integer sign_of(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

Presentation direct_sum(const Presentation& a, const Presentation& b) {
  const IntegerMatrix ra = a.relations.rows() == 0 ? IntegerMatrix(0, a.generators) : a.relations;
  const IntegerMatrix rb = b.relations.rows() == 0 ? IntegerMatrix(0, b.generators) : b.relations;
  return {a.generators + b.generators, block_diagonal(ra, rb)};
}

ChainComplex shift(const ChainComplex& x, long n) {
  if (x.length() == 0) return {};
  const Integer s = sign_of(n);
  std::vector<IntegerMatrix> diffs;
  for (const auto& d : x.differentials()) diffs.push_back(scaled(d, s));
  return {x.min_degree() + n, x.degrees(), std::move(diffs)};
}

ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y) {
  if (x.length() == 0) return y;
  if (y.length() == 0) return x;
  auto [lo, hi] = span(x, y);
  return build(
      lo, hi, [&](long k) { return direct_sum(x.at(k), y.at(k)); },
      [&](long k) { return block_diagonal(x.differential(k), y.differential(k)); });
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  const ChainComplex sx = x.length() == 0 ? x : shift(x, 1);
  auto [lo, hi] = span(sx, y);
  return build(
      lo, hi, [&](long k) { return direct_sum(x.at(k - 1), y.at(k)); },
      [&](long k) {
        const IntegerMatrix top =
            hstack(-x.differential(k - 1), IntegerMatrix(x.generators(k - 2), y.generators(k)));
        const IntegerMatrix bottom = hstack(f.component(k - 1), y.differential(k));
        return vstack(top, bottom);
      });
}

ChainComplex hom_complex(const ChainComplex& m, const ChainComplex& n) {
  if (auto bad = m.first_relation_degree())
    throw TorsionSource(static_cast<int>(*bad), "hom_complex: source has relations in degree " +
                                                    std::to_string(*bad));
  if (m.length() == 0 || n.length() == 0) return {};
  const long lo = n.min_degree() - m.max_degree();
  const long hi = n.max_degree() - m.min_degree();

  // offsets[k - lo][i - m.min] = first generator of the block Hom(M_i, N_{i+k}).
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::size_t> totals;
  for (long k = lo; k <= hi; ++k) {
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (long i = m.min_degree(); i <= m.max_degree(); ++i) {
      off.push_back(total);
      total += m.generators(i) * n.generators(i + k);
    }
    offsets.push_back(std::move(off));
    totals.push_back(total);
  }
  auto offset = [&](long k, long i) {
    return offsets[static_cast<std::size_t>(k - lo)][static_cast<std::size_t>(i - m.min_degree())];
  };
  auto total = [&](long k) { return totals[static_cast<std::size_t>(k - lo)]; };

  auto at = [&](long k) {
    std::vector<IntegerVector> rows;
    for (long i = m.min_degree(); i <= m.max_degree(); ++i) {
      const Presentation target = n.at(i + k);
      const std::size_t b = target.generators;
      for (std::size_t rel = 0; rel < target.relations.rows(); ++rel)
        for (std::size_t j = 0; j < m.generators(i); ++j) {
          IntegerVector row(total(k));
          for (std::size_t s = 0; s < b; ++s)
            row[offset(k, i) + j * b + s] = target.relations(rel, s);
          rows.push_back(std::move(row));
        }
    }
    IntegerMatrix rel(rows.size(), total(k));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < total(k); ++c) rel(r, c) = rows[r][c];
    return Presentation(total(k), rel);
  };

  auto diff = [&](long k) {
    IntegerMatrix d(total(k - 1), total(k));
    const Integer sign = sign_of(k + 1);
    for (long i = m.min_degree(); i <= m.max_degree(); ++i) {
      const std::size_t a = m.generators(i);
      const std::size_t b = n.generators(i + k);
      const std::size_t b_low = n.generators(i + k - 1);
      const IntegerMatrix dn = n.differential(i + k);
      const IntegerMatrix dm = m.differential(i + 1);
      const std::size_t a_up = m.generators(i + 1);
      for (std::size_t j = 0; j < a; ++j)
        for (std::size_t r = 0; r < b; ++r) {
          const std::size_t col = offset(k, i) + j * b + r;
          // d_N o E lands in Hom(M_i, N_{i+k-1}).
          for (std::size_t s = 0; s < b_low; ++s)
            d(offset(k - 1, i) + j * b_low + s, col) += dn(s, r);
          // E o d_M lands in Hom(M_{i+1}, N_{i+k}).
          if (i + 1 <= m.max_degree())
            for (std::size_t c = 0; c < a_up; ++c)
              d(offset(k - 1, i + 1) + c * b + r, col) += sign * dm(j, c);
        }
    }
    return d;
  };
  return build(lo, hi, at, diff);
}

ComplexPullback degreewise_pullback(const ChainMap& f, const ChainMap& g) {
  if (!(f.target() == g.target()))
    throw IllFormedMap("degreewise_pullback: maps have different targets");
  const ChainComplex& a = f.source();
  const ChainComplex& b = g.source();
  const ChainComplex& c = f.target();
  auto [lo, hi] = span(a, b);
  if (hi < lo) {
    ChainComplex zero;
    return {zero, ChainMap::zero(zero, a), ChainMap::zero(zero, b)};
  }
  std::vector<Subquotient> pieces;
  for (long k = lo; k <= hi; ++k) {
    const std::size_t ga = a.generators(k);
    const std::size_t gb = b.generators(k);
    if (ga + gb == 0) {
      pieces.emplace_back();
      continue;
    }
    const IntegerMatrix difference = hstack(f.component(k), -g.component(k));
    const IntegerMatrix lattice =
        c.generators(k) == 0 ? IntegerMatrix(0, 0) : c.relation_lattice(k);
    const IntegerMatrix numerator = preimage_lattice(difference, lattice);
    const IntegerMatrix denominator = block_diagonal(
        a.generators(k) == 0 ? IntegerMatrix(0, 0) : a.relation_lattice(k),
        b.generators(k) == 0 ? IntegerMatrix(0, 0) : b.relation_lattice(k));
    pieces.emplace_back(numerator, denominator);
  }
  auto piece = [&](long k) -> const Subquotient& { return pieces[static_cast<std::size_t>(k - lo)]; };
  ChainComplex p = build(
      lo, hi, [&](long k) { return piece(k).presentation_on_basis(); },
      [&](long k) {
        const IntegerMatrix& basis = piece(k).numerator_basis();
        const IntegerMatrix dsum = block_diagonal(a.differential(k), b.differential(k));
        IntegerMatrix d(piece(k - 1).numerator_basis().cols(), basis.cols());
        for (std::size_t col = 0; col < basis.cols(); ++col) {
          const IntegerVector image = dsum * basis.column(col);
          const IntegerVector coords =
              piece(k - 1).ambient_dimension() == 0 ? IntegerVector{} : piece(k - 1).basis_coordinates(image);
          for (std::size_t r = 0; r < coords.size(); ++r) d(r, col) = coords[r];
        }
        return d;
      });
  std::vector<IntegerMatrix> first, second;
  for (long k = lo; k <= hi; ++k) {
    const IntegerMatrix& basis = piece(k).numerator_basis();
    const std::size_t ga = a.generators(k);
    const std::size_t gb = b.generators(k);
    if (basis.rows() == 0) {
      first.emplace_back(ga, basis.cols());
      second.emplace_back(gb, basis.cols());
    } else {
      first.push_back(basis.row_range(0, ga));
      second.push_back(basis.row_range(ga, ga + gb));
    }
  }
  ChainMap to_first(p, a, std::move(first));
  ChainMap to_second(p, b, std::move(second));
  return {std::move(p), std::move(to_first), std::move(to_second)};
}

ChainMap pullback_corner(const ComplexPullback& pb, const ChainMap& a, const ChainMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == pb.to_first.target()) ||
      !(b.target() == pb.to_second.target()))
    throw IllFormedMap("pullback_corner: maps do not form a cone over the cospan");
  const ChainComplex& z = a.source();
  std::vector<IntegerMatrix> comps;
  for (long k = z.min_degree(); k <= z.max_degree(); ++k) {
    const IntegerMatrix basis = vstack(pb.to_first.component(k), pb.to_second.component(k));
    const IntegerMatrix image = vstack(a.component(k), b.component(k));
    if (basis.cols() == 0) {
      if (!image.is_zero()) throw IllFormedMap("pullback_corner: square does not commute");
      comps.emplace_back(0, z.generators(k));
      continue;
    }
    try {
      comps.push_back(exactalg::LinearSystem(basis).solve_columns(image));
    } catch (const std::invalid_argument&) {
      throw IllFormedMap("pullback_corner: square does not commute in degree " +
                         std::to_string(k));
    }
  }
  return {z, pb.complex, std::move(comps)};
}

ComplexPullback degreewise_kernel(const ChainMap& f) {
  return degreewise_pullback(f, ChainMap::zero(ChainComplex(), f.target()));
}

}  // namespace towercalc::complex

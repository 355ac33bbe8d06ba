#include "towercalc/complex/cofibrant.hpp"

#include "towercalc/exactalg/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace towercalc::complex {

using exactalg::block_diagonal;
using exactalg::column_basis;
using exactalg::hstack;
using exactalg::LinearSystem;
using exactalg::vstack;

namespace {

// X with B X = Y, where the columns of B are independent.
IntegerMatrix solve_columns(const IntegerMatrix& b, const IntegerMatrix& y) {
  if (b.cols() == 0) {
    if (!y.is_zero()) throw std::logic_error("cofibrant: column outside an empty lattice");
    return IntegerMatrix(0, y.cols());
  }
  return LinearSystem(b).solve_columns(y);
}

}  // namespace

IntegerMatrix CofibrantReplacement::relation_basis(long k) const {
  const long j = k - basis_min_degree;
  if (j < 0 || j >= static_cast<long>(relation_bases.size()))
    return IntegerMatrix(map.target().generators(k), 0);
  return relation_bases[static_cast<std::size_t>(j)];
}

CofibrantReplacement cofibrant_replacement(const ChainComplex& x) {
  CofibrantReplacement out{x, ChainMap::identity(x), x.min_degree(), {}};
  if (x.length() == 0) return out;
  for (long k = x.min_degree(); k <= x.max_degree(); ++k)
    out.relation_bases.push_back(column_basis(x.relation_lattice(k)));
  auto rb = [&](long k) { return out.relation_basis(k); };
  auto r = [&](long k) { return rb(k).cols(); };
  // rho_k : r_k -> r_{k-1} with d_k Rb_k = Rb_{k-1} rho_k.
  auto rho = [&](long k) { return solve_columns(rb(k - 1), x.differential(k) * rb(k)); };
  // h_k : g_k -> r_{k-2} with d_{k-1} d_k = Rb_{k-2} h_k.
  auto h = [&](long k) {
    return solve_columns(rb(k - 2), x.differential(k - 1) * x.differential(k));
  };

  const long lo = x.min_degree();
  const long hi = r(x.max_degree()) > 0 ? x.max_degree() + 1 : x.max_degree();
  std::vector<Presentation> degrees;
  std::vector<IntegerMatrix> diffs;
  std::vector<IntegerMatrix> q;
  for (long k = lo; k <= hi; ++k) {
    const std::size_t g = x.generators(k);
    degrees.push_back(Presentation::free(g + r(k - 1)));
    q.push_back(hstack(IntegerMatrix::identity(g), IntegerMatrix(g, r(k - 1))));
    if (k > lo) {
      const IntegerMatrix top = hstack(x.differential(k), rb(k - 1));
      const IntegerMatrix bottom = hstack(-h(k), -rho(k - 1));
      diffs.push_back(vstack(top, bottom));
    }
  }
  ChainComplex f(lo, std::move(degrees), std::move(diffs));
  out.map = ChainMap(f, x, std::move(q));
  out.complex = std::move(f);
  return out;
}

ChainMap lift_map(const ChainMap& f, const CofibrantReplacement& qx,
                  const CofibrantReplacement& qy) {
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  const ChainComplex& fx = qx.complex;
  std::vector<IntegerMatrix> components;
  for (long k = fx.min_degree(); k <= fx.max_degree(); ++k) {
    // F_k Rb^X_k = Rb^Y_k sigma_k.
    const IntegerMatrix sigma_low =
        solve_columns(qy.relation_basis(k - 1), f.component(k - 1) * qx.relation_basis(k - 1));
    // Rb^Y_{k-1} tau_k = F_{k-1} d_k - d_k F_k.
    const IntegerMatrix tau = solve_columns(
        qy.relation_basis(k - 1),
        f.component(k - 1) * x.differential(k) - y.differential(k) * f.component(k));
    const std::size_t rx = qx.relation_basis(k - 1).cols();
    const IntegerMatrix top = hstack(f.component(k), IntegerMatrix(y.generators(k), rx));
    components.push_back(vstack(top, hstack(tau, sigma_low)));
  }
  return ChainMap(fx, qy.complex, std::move(components));
}

}  // namespace towercalc::complex

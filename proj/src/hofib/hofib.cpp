#include "towercalc/hofib/hofib.hpp"

#include "towercalc/complex/cofibrant.hpp"
#include "towercalc/complex/homology.hpp"
#include "towercalc/errors.hpp"
#include "towercalc/sections/model_checks.hpp"
#include "towercalc/trunc/truncation.hpp"

#include <algorithm>
#include <string>

namespace towercalc::hofib {

using complex::group_at;
using complex::homology;
using exactalg::IntegerMatrix;
using exactalg::Presentation;
using sections::LevelStructure;

namespace {

void require_free(const ChainComplex& x, const char* who) {
  if (auto d = x.first_relation_degree())
    throw NotCofibrant(static_cast<int>(*d),
                       std::string(who) + ": relations in degree " + std::to_string(*d));
}

// Copies b into a with its top-left corner at (r, c).
void place(IntegerMatrix& a, const IntegerMatrix& b, std::size_t r, std::size_t c) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) a(r + i, c + j) = b(i, j);
}

std::string k_name(long k) { return "k = " + std::to_string(k); }

}  // namespace

HofibSection build_hofib_section(const ChainComplex& x, long k) {
  require_free(x, "build_hofib_section");
  const auto pk = trunc::postnikov_section(x, k);
  const ChainComplex& p = pk.complex;

  // Degree n of X' is X_n + (generators of P_n) + (generators of P_{n+1}); the
  // disk on a generator g of P_n spans degrees n and n - 1.
  long lo = x.min_degree(), hi = x.max_degree();
  if (p.length() > 0) lo = std::min(lo, p.min_degree() - 1);
  auto gx = [&](long n) { return x.generators(n); };
  auto ga = [&](long n) { return p.generators(n); };
  auto gb = [&](long n) { return p.generators(n + 1); };
  auto width = [&](long n) { return gx(n) + ga(n) + gb(n); };

  ChainComplex xp;
  if (x.length() > 0) {
    std::vector<Presentation> degrees;
    std::vector<IntegerMatrix> diffs;
    for (long n = lo; n <= hi; ++n) {
      degrees.push_back(Presentation::free(width(n)));
      if (n == lo) continue;
      IntegerMatrix d(width(n - 1), width(n));
      place(d, x.differential(n), 0, 0);
      place(d, IntegerMatrix::identity(ga(n)), gx(n - 1) + ga(n - 1), gx(n));
      diffs.push_back(std::move(d));
    }
    xp = ChainComplex(lo, std::move(degrees), std::move(diffs));
  }

  std::vector<IntegerMatrix> unit;
  for (long n = x.min_degree(); n <= x.max_degree(); ++n) {
    IntegerMatrix m(width(n), gx(n));
    place(m, IntegerMatrix::identity(gx(n)), 0, 0);
    unit.push_back(std::move(m));
  }
  std::vector<IntegerMatrix> proj;
  for (long n = xp.min_degree(); n <= xp.max_degree(); ++n) {
    IntegerMatrix m(ga(n), width(n));
    place(m, pk.quotient.component(n), 0, 0);
    place(m, IntegerMatrix::identity(ga(n)), 0, gx(n));
    place(m, p.differential(n + 1), 0, gx(n) + ga(n));
    proj.push_back(std::move(m));
  }

  const ChainComplex point = complex::zero_complex();
  ChainMap projection(xp, p, std::move(proj));
  sections::CospanSection cospan(point, p, xp, ChainMap::zero(point, p), std::move(projection),
                                 {LevelStructure::terminal(), LevelStructure::truncated(k),
                                  LevelStructure::plain()});
  return {k, std::move(cospan), ChainMap(x, xp, std::move(unit))};
}

complex::ComplexPullback hofib_fiber(const HofibSection& s) {
  return complex::degreewise_pullback(s.cospan.left, s.cospan.right);
}

Certificate compatibility_check(long k, const std::vector<ChainComplex>& corpus) {
  for (const auto& x : corpus) require_free(x, "compatibility_check");
  Certificate out = Certificate::pass("colocal iff P_" + std::to_string(k) + "-acyclic",
                                      std::to_string(corpus.size()) + " complexes");
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ChainComplex& x = corpus[i];
    const Certificate colocal = complex::is_quasi_iso(trunc::connective_cover(x, k).inclusion);
    const Certificate acyclic =
        trunc::is_Pn_weq(ChainMap::zero(complex::zero_complex(), x), k);
    const std::string detail = std::string("colocal ") + (colocal.passed ? "yes" : "no") +
                               ", 0 -> X local equivalence " + (acyclic.passed ? "yes" : "no");
    if (colocal.passed != acyclic.passed) {
      auto fail = Certificate::fail("complex " + std::to_string(i), detail);
      fail.at_level(static_cast<long>(i));
      if (const auto* w = (colocal.passed ? acyclic : colocal).first_failure(); w && w->degree)
        fail.at_degree(*w->degree);
      out.add(std::move(fail));
    }
  }
  return out;
}

Certificate derived_counit_check(const ChainComplex& x, long k) {
  const HofibSection s = build_hofib_section(x, k);
  Certificate out = Certificate::pass("homotopy fiber of X -> P_k X is C_k X", k_name(k));

  Certificate unit = complex::is_quasi_iso(s.unit);
  unit.check = "X -> X' is a quasi-isomorphism";
  out.add(std::move(unit));
  Certificate cof = sections::is_cofibration(s.unit);
  cof.check = "X -> X' is a cofibration";
  out.add(std::move(cof));
  const ChainMap& q = s.projection();
  for (long n = q.source().min_degree(); n <= q.source().max_degree(); ++n)
    if (!exactalg::is_surjective(q.component_map(n))) {
      auto fail = Certificate::fail("X' -> P_k X is surjective", "degree " + std::to_string(n));
      fail.at_degree(n);
      out.add(std::move(fail));
      break;
    }

  const auto fiber = hofib_fiber(s);
  const auto cover = trunc::connective_cover(x, k);
  const ChainMap comparison = complex::pullback_corner(
      fiber, ChainMap::zero(cover.complex, s.cospan.x1), cover.inclusion.then(s.unit));
  Certificate qi = complex::is_quasi_iso(comparison);
  qi.check = "C_k X -> fiber(X' -> P_k X) is a quasi-isomorphism";
  out.add(std::move(qi));
  return out;
}

Certificate layer_equivalence_check(const ChainComplex& x, long k) {
  require_free(x, "layer_equivalence_check");
  const ChainComplex top =
      complex::cofibrant_replacement(trunc::postnikov_section(x, k + 1).complex).complex;
  const auto fiber = hofib_fiber(build_hofib_section(top, k));
  const complex::HomologyProfile h = homology(fiber.complex);
  const exactalg::FpAbelianGroup expected = group_at(homology(x), k + 1);

  Certificate out = Certificate::pass("layer at " + k_name(k),
                                      "H_" + std::to_string(k + 1) + " = " + expected.to_string());
  for (const auto& [i, g] : h) {
    const auto want = i == k + 1 ? expected : exactalg::FpAbelianGroup();
    if (g != want) {
      auto fail = Certificate::fail("fiber homology is H_" + std::to_string(k + 1) + "(X) in degree " +
                                        std::to_string(k + 1),
                                    "H_" + std::to_string(i) + " = " + g.to_string());
      fail.at_degree(i);
      out.add(std::move(fail));
      return out;
    }
  }
  if (group_at(h, k + 1) != expected) {
    auto fail = Certificate::fail("fiber homology is H_" + std::to_string(k + 1) + "(X) in degree " +
                                      std::to_string(k + 1),
                                  "fiber is acyclic");
    fail.at_degree(k + 1);
    out.add(std::move(fail));
    return out;
  }
  const complex::HomologyProfile layer = homology(trunc::layer(x, k));
  bool same = true;
  for (long i = std::min(x.min_degree(), k) - 1; i <= std::max(x.max_degree(), k + 2); ++i)
    same = same && group_at(layer, i) == group_at(h, i);
  out.add(same ? Certificate::pass("agrees with the Postnikov layer C_k P_{k+1} X")
               : Certificate::fail("agrees with the Postnikov layer C_k P_{k+1} X"));
  return out;
}

}  // namespace towercalc::hofib

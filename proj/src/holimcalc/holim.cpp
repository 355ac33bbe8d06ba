#include "towercalc/holimcalc/holim.hpp"

#include "towercalc/complex/constructions.hpp"
#include "towercalc/complex/homology.hpp"
#include "towercalc/errors.hpp"
#include "towercalc/exactalg/group_tower.hpp"
#include "towercalc/sections/model_checks.hpp"
#include "towercalc/trunc/truncation.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace towercalc::holimcalc {

using complex::group_at;
using complex::homology;
using complex::HomologyProfile;
using exactalg::GroupMap;

namespace {

std::string h(long k) { return "H_" + std::to_string(k); }

exactalg::GroupTower homology_tower(const TowerSection& t, long degree, std::size_t stable) {
  std::vector<FpAbelianGroup> groups;
  std::vector<GroupMap> maps;
  for (long l = 0; l <= t.top(); ++l) {
    groups.push_back(complex::homology_at(t.level(l), degree).group());
    if (l < t.top()) maps.push_back(complex::induced_map(t.map(l), degree));
  }
  return {std::move(groups), std::move(maps), stable};
}

void require_free(const ChainComplex& x, const char* who) {
  if (auto d = x.first_relation_degree())
    throw TorsionSource(static_cast<int>(*d), std::string(who) + ": relations in degree " +
                                                  std::to_string(*d));
}

}  // namespace

TowerLimit tower_limit(const TowerSection& t) {
  if (!t.stabilization())
    throw StabilizationViolated(0, "tower_limit: no stabilization level declared");
  const long s = *t.stabilization();
  for (long i = s; i < t.top(); ++i)
    if (!complex::is_isomorphism(t.map(i)))
      throw StabilizationViolated(static_cast<std::size_t>(i + 1),
                                  "tower_limit: X_" + std::to_string(i + 1) + " -> X_" +
                                      std::to_string(i) + " is not an isomorphism");
  TowerLimit out{t.level(t.top()), {}};
  for (long i = 0; i <= t.top(); ++i) out.projections.push_back(t.composite(t.top(), i));
  return out;
}

Certificate milnor_check(const TowerSection& t, long i) {
  const TowerLimit lim = tower_limit(t);
  const auto s = static_cast<std::size_t>(*t.stabilization());
  Certificate out = Certificate::pass("Milnor sequence in degree " + std::to_string(i));

  const auto upper = homology_tower(t, i + 1, s);
  exactalg::tower_lim_lim1(upper);
  out.add(Certificate::pass("lim^1 " + h(i + 1) + " = 0",
                            "isomorphisms from level " + std::to_string(s)));
  const std::size_t horizon = upper.maps().size();
  const auto ml = exactalg::mittag_leffler_diagnostic(upper.groups(), upper.maps(), horizon);
  out.add(ml.stabilized
              ? Certificate::pass("Mittag-Leffler", "images stabilize by " + std::to_string(ml.index))
              : Certificate::fail("Mittag-Leffler",
                                  "not stabilized within " + std::to_string(ml.index)));

  const auto lower = homology_tower(t, i, s);
  const FpAbelianGroup lim_h = exactalg::tower_lim_lim1(lower).limit;
  const GroupMap to_lim = complex::induced_map(lim.projections[s], i);
  const FpAbelianGroup h_lim = complex::homology_at(lim.complex, i).group();
  const std::string detail = h(i) + "(lim) = " + h_lim.to_string() + ", lim " + h(i) + " = " +
                             lim_h.to_string();
  Certificate iso = exactalg::is_isomorphism(to_lim) && h_lim == lim_h
                        ? Certificate::pass(h(i) + "(lim) -> lim " + h(i) + " is an isomorphism", detail)
                        : Certificate::fail(h(i) + "(lim) -> lim " + h(i) + " is an isomorphism", detail);
  iso.at_degree(i);
  out.add(std::move(iso));
  return out;
}

exactalg::MittagLefflerVerdict homology_diagnostic(const TowerSection& t, long i,
                                                   std::size_t horizon) {
  std::vector<FpAbelianGroup> groups;
  std::vector<GroupMap> maps;
  for (long l = 0; l <= t.top(); ++l) {
    groups.push_back(complex::homology_at(t.level(l), i).group());
    if (l < t.top()) maps.push_back(complex::induced_map(t.map(l), i));
  }
  return exactalg::mittag_leffler_diagnostic(groups, maps, horizon);
}

Certificate hypercomplete_check(const ChainComplex& x) {
  const long m = std::max(x.max_degree(), 0L) + 1;
  const TowerSection t = sections::postnikov_tower(x, m);
  const TowerLimit lim = tower_limit(t);
  const ChainMap canonical = trunc::postnikov_section(x, m).quotient;
  Certificate out = Certificate::pass("hypercomplete");
  Certificate qi = complex::is_quasi_iso(canonical);
  qi.check = "X -> lim P_n X is a quasi-isomorphism";
  out.add(std::move(qi));
  for (long i = 0; i <= m; ++i)
    if (!complex::equal_maps(canonical.then(lim.projections[static_cast<std::size_t>(i)]),
                             trunc::postnikov_section(x, i).quotient)) {
      auto fail = Certificate::fail("projections", "X -> lim -> P_" + std::to_string(i) +
                                                       " X is not the truncation quotient");
      fail.at_level(i);
      out.add(std::move(fail));
    }
  return out;
}

Certificate generator_commutation_check(long i, const ChainComplex& x, long n) {
  require_free(x, "generator_commutation_check");
  const ChainComplex sphere = complex::sphere(i);
  const HomologyProfile truncated =
      homology(complex::hom_complex(sphere, trunc::postnikov_section(x, n).complex));
  const HomologyProfile full = homology(complex::hom_complex(sphere, x));
  long top = 0;
  for (const auto* p : {&truncated, &full})
    if (!p->empty()) top = std::max(top, p->rbegin()->first);
  Certificate out = Certificate::pass("map(Z[" + std::to_string(i) + "], P_" + std::to_string(n) +
                                      " X) = P_" + std::to_string(n) + " map(Z[" +
                                      std::to_string(i) + "], X)");
  for (long k = 0; k <= top; ++k) {
    const FpAbelianGroup expected = k <= n - i ? group_at(full, k) : FpAbelianGroup();
    const FpAbelianGroup actual = group_at(truncated, k);
    if (actual != expected) {
      auto fail = Certificate::fail("degree " + std::to_string(k),
                                    actual.to_string() + " vs " + expected.to_string());
      fail.at_degree(k);
      out.add(std::move(fail));
      break;
    }
  }
  return out;
}

LadderReport uct_ladder(const ChainComplex& m, const ChainComplex& nc, long n) {
  require_free(m, "uct_ladder");
  const ChainComplex pn = trunc::postnikov_section(nc, n).complex;
  const HomologyProfile hm = homology(m);
  const HomologyProfile hn = homology(nc);
  const HomologyProfile hpn = homology(pn);
  const HomologyProfile direct = homology(complex::hom_complex(m, nc));
  const HomologyProfile direct_t = homology(complex::hom_complex(m, pn));

  LadderReport report;
  report.n = n;
  if (hm.empty())
    report.concentration = 0;
  else if (hm.size() == 1)
    report.concentration = hm.begin()->first;

  auto corners = [&](long k, const HomologyProfile& target) {
    FpAbelianGroup hom, ext;
    for (const auto& [j, a] : hm) {
      hom = exactalg::direct_sum(hom, exactalg::hom_group(a, group_at(target, j + k)));
      ext = exactalg::direct_sum(ext, exactalg::ext_group(a, group_at(target, j + k + 1)));
    }
    return std::pair{hom, ext};
  };

  if (m.length() > 0 && nc.length() > 0) {
    const long lo = nc.min_degree() - m.max_degree() - 1;
    const long hi = nc.max_degree() - m.min_degree();
    for (long k = lo; k <= hi; ++k) {
      LadderRow row;
      row.k = k;
      std::tie(row.hom_corner, row.ext_corner) = corners(k, hn);
      std::tie(row.hom_corner_truncated, row.ext_corner_truncated) = corners(k, hpn);
      row.direct = group_at(direct, k);
      row.direct_truncated = group_at(direct_t, k);
      report.rows.push_back(std::move(row));
    }
  }

  Certificate& cert = report.certificate;
  cert = Certificate::pass("UCT ladder at n = " + std::to_string(n));
  Certificate split = Certificate::pass("(a) split universal coefficients");
  for (const auto& row : report.rows) {
    const bool full_ok = row.direct == exactalg::direct_sum(row.ext_corner, row.hom_corner);
    const bool trunc_ok =
        row.direct_truncated ==
        exactalg::direct_sum(row.ext_corner_truncated, row.hom_corner_truncated);
    if (!full_ok || !trunc_ok) {
      auto fail = Certificate::fail("degree " + std::to_string(row.k),
                                    !full_ok ? "H(Hom(M, N)) differs from Ext + Hom"
                                             : "H(Hom(M, P_n N)) differs from Ext + Hom");
      fail.at_degree(row.k);
      split.add(std::move(fail));
    }
  }
  cert.add(std::move(split));

  if (!report.concentration) {
    const std::string na = "not applicable: H_*(M) lives in several degrees";
    for (const char* name : {"(b) vanishing above n - c", "(c) agreement below n - c",
                             "(d) Ext obstruction at n - c"})
      cert.add(Certificate::pass(name, na));
    return report;
  }
  const long c = *report.concentration;
  const long cut = n - c;
  Certificate vanish = Certificate::pass("(b) vanishing above n - c");
  Certificate agree = Certificate::pass("(c) agreement below n - c");
  for (const auto& row : report.rows) {
    if (row.k > cut && !row.direct_truncated.is_zero()) {
      auto fail = Certificate::fail("degree " + std::to_string(row.k),
                                    "H(Hom(M, P_n N)) = " + row.direct_truncated.to_string());
      fail.at_degree(row.k);
      vanish.add(std::move(fail));
    }
    if (row.k < cut && row.direct_truncated != row.direct) {
      auto fail = Certificate::fail("degree " + std::to_string(row.k),
                                    row.direct_truncated.to_string() + " vs " +
                                        row.direct.to_string());
      fail.at_degree(row.k);
      agree.add(std::move(fail));
    }
  }
  cert.add(std::move(vanish));
  cert.add(std::move(agree));

  const FpAbelianGroup obstruction =
      exactalg::ext_group(group_at(hm, c), group_at(hn, n + 1));
  report.discrepancy = obstruction;
  const FpAbelianGroup at_cut = group_at(direct, cut);
  const FpAbelianGroup at_cut_t = group_at(direct_t, cut);
  const bool equal = at_cut == at_cut_t;
  const std::string detail = "Ext(H_" + std::to_string(c) + " M, H_" + std::to_string(n + 1) +
                             " N) = " + obstruction.to_string() + "; H_" + std::to_string(cut) +
                             ": " + at_cut_t.to_string() + " vs " + at_cut.to_string();
  auto obstruct = equal == obstruction.is_zero()
                      ? Certificate::pass("(d) Ext obstruction at n - c", detail)
                      : Certificate::fail("(d) Ext obstruction at n - c", detail);
  obstruct.at_degree(cut);
  cert.add(std::move(obstruct));
  return report;
}

}  // namespace towercalc::holimcalc

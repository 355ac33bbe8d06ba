#include "towercalc/sections/model_checks.hpp"

#include "towercalc/complex/constructions.hpp"
#include "towercalc/complex/homology.hpp"
#include "towercalc/errors.hpp"
#include "towercalc/exactalg/lattice.hpp"
#include "towercalc/trunc/truncation.hpp"

#include <algorithm>
#include <utility>

namespace towercalc::sections {

using complex::cofibrant_replacement;
using exactalg::IntegerMatrix;
using exactalg::IntegerVector;

namespace {

std::string lv(long i) { return "level " + std::to_string(i); }

// Degrees >= 1 of the target where a map could fail to be surjective.
std::pair<long, long> positive_target_degrees(const ChainMap& f) {
  return {std::max(1L, f.target().min_degree()), f.target().max_degree()};
}

// Least level whose structure map fails the degreewise test, if any.
template <class Surjective>
std::optional<long> first_bad_map(const TowerSection& t, Surjective surjective) {
  for (long i = 0; i < t.top(); ++i) {
    const ChainMap& f = t.map(i);
    const auto [lo, hi] = positive_target_degrees(f);
    for (long k = lo; k <= hi; ++k)
      if (!surjective(f, k)) return i + 1;
  }
  return std::nullopt;
}

Certificate level_verdict(std::string check, std::optional<long> bad, std::string what) {
  if (!bad) return Certificate::pass(std::move(check));
  auto fail = Certificate::fail(std::move(check), std::move(what) + " at " + lv(*bad));
  fail.at_level(*bad);
  return fail;
}

std::string replaced_note(bool free) {
  return free ? std::string() : "verdict issued after cofibrant replacement";
}

}  // namespace

Certificate is_fibration(const ChainMap& f) {
  const auto [lo, hi] = positive_target_degrees(f);
  for (long k = lo; k <= hi; ++k)
    if (!exactalg::is_surjective(f.component_map(k))) {
      auto fail = Certificate::fail("fibration", "not surjective in degree " + std::to_string(k));
      fail.at_degree(k);
      return fail;
    }
  return Certificate::pass("fibration");
}

Certificate is_cofibration(const ChainMap& f) {
  const auto [lo, hi] = complex::degree_span(f);
  for (long k = lo; k <= hi; ++k) {
    const auto kic = exactalg::kernel_image_cokernel(f.component_map(k));
    std::string why;
    if (!kic.kernel.is_zero())
      why = "kernel " + kic.kernel.to_string();
    else if (!kic.cokernel.is_free())
      why = "cokernel " + kic.cokernel.to_string() + " is not free";
    if (!why.empty()) {
      auto fail = Certificate::fail("cofibration", why + " in degree " + std::to_string(k));
      fail.at_degree(k);
      return fail;
    }
  }
  return Certificate::pass("cofibration");
}

InjectiveClassification classify_injective(const SectionMorphism& phi) {
  InjectiveClassification out{Certificate::pass("levelwise weak equivalence"),
                              Certificate::pass("levelwise cofibration")};
  for (long i = 0; i <= phi.source().top(); ++i) {
    Certificate w = is_weak_equivalence(phi.component(i), phi.target().tag(i));
    w.at_level(i);
    out.weq.add(std::move(w));
    Certificate c = is_cofibration(phi.component(i));
    c.at_level(i);
    out.cofib.add(std::move(c));
  }
  return out;
}

Certificate is_tower_fibration(const SectionMorphism& phi) {
  Certificate out = Certificate::pass("tower fibration");
  Certificate base = is_fibration(phi.component(0));
  base.check = "phi_0 is a fibration";
  base.at_level(0);
  out.add(std::move(base));
  if (!out.passed) return out;
  const TowerSection& x = phi.source();
  const TowerSection& y = phi.target();
  for (long i = 0; i < x.top(); ++i) {
    const auto pb = complex::degreewise_pullback(y.map(i), phi.component(i));
    const ChainMap corner = complex::pullback_corner(pb, phi.component(i + 1), x.map(i));
    Certificate c = is_fibration(corner);
    c.check = "X_" + std::to_string(i + 1) + " -> Y_" + std::to_string(i + 1) + " x X_" +
              std::to_string(i) + " is a fibration";
    c.at_level(i + 1);
    const bool failed = !c.passed;
    out.add(std::move(c));
    if (failed) break;
  }
  return out;
}

Certificate is_post_fibrant(const TowerSection& t) {
  // (ii) through the relative fibration X_. -> 0, built from pullbacks.
  const Certificate via_pullbacks = is_tower_fibration(SectionMorphism::to_zero(t));
  const std::optional<long> bad_ii =
      via_pullbacks.passed ? std::nullopt : via_pullbacks.first_failure()->level;

  // (iii) through cokernels of the structure maps.
  const auto bad_cokernel = first_bad_map(t, [](const ChainMap& f, long k) {
    return exactalg::kernel_image_cokernel(f.component_map(k)).cokernel.is_zero();
  });
  // (iii) again, lifting every generator through the structure map.
  const auto bad_lifting = first_bad_map(t, [](const ChainMap& f, long k) {
    const std::size_t g = f.target().generators(k);
    if (g == 0) return true;
    const exactalg::LinearSystem system(
        exactalg::hstack(f.component(k), f.target().relation_lattice(k)));
    for (std::size_t r = 0; r < g; ++r) {
      IntegerVector e(g);
      e[r] = 1;
      if (!system.contains(e)) return false;
    }
    return true;
  });

  if (bad_ii != bad_cokernel || bad_cokernel != bad_lifting) {
    auto show = [](const std::optional<long>& l) {
      return l ? lv(*l) : std::string("pass");
    };
    throw CharacterizationMismatch("is_post_fibrant: pullback route " + show(bad_ii) +
                                   ", cokernel route " + show(bad_cokernel) +
                                   ", lifting route " + show(bad_lifting));
  }
  Certificate out = Certificate::pass("post-fibrant");
  out.add(level_verdict("X_0 fibrant in P_0, X_{n+1} -> X_n a fibration in P_{n+1}", bad_ii,
                        "structure map not surjective in positive degrees"));
  out.add(level_verdict("X_n fibrant in P_n, X_{n+1} -> X_n a fibration", bad_cokernel,
                        "structure map not surjective in positive degrees"));
  return out;
}

Certificate is_homotopy_cartesian(const TowerSection& t) {
  bool free = true;
  for (const auto& x : t.levels()) free = free && x.is_free();
  Certificate out = Certificate::pass("homotopy cartesian", replaced_note(free));
  for (long i = 0; i < t.top(); ++i) {
    const auto q = cofibrant_replacement(t.level(i + 1));
    Certificate c = is_weak_equivalence(q.map.then(t.map(i)), t.tag(i));
    c.check = "X_" + std::to_string(i + 1) + " -> X_" + std::to_string(i) + " is a " +
              t.tag(i).name() + " equivalence";
    c.at_level(i);
    const bool failed = !c.passed;
    out.add(std::move(c));
    if (failed) break;
  }
  return out;
}

Certificate is_homotopy_cartesian(const CospanSection& s) {
  const bool free = s.x1.is_free() && s.x2.is_free();
  Certificate out = Certificate::pass("homotopy cartesian cospan", replaced_note(free));
  const std::pair<const char*, const ChainMap*> legs[] = {{"left", &s.left}, {"right", &s.right}};
  long index = 1;
  for (const auto& [name, leg] : legs) {
    const auto q = cofibrant_replacement(leg->source());
    Certificate c = is_weak_equivalence(q.map.then(*leg), s.tags[1]);
    c.check = std::string(name) + " leg is a " + s.tags[1].name() + " equivalence";
    c.at_level(index);
    index += 1;
    out.add(std::move(c));
  }
  return out;
}

Certificate is_tow_cofibrant(const TowerSection& t) {
  Certificate out = Certificate::pass("Tow-cofibrant");
  for (long i = 0; i <= t.top(); ++i)
    if (auto d = t.level(i).first_relation_degree()) {
      auto fail = Certificate::fail("levelwise cofibrant",
                                    "X_" + std::to_string(i) + " has relations in degree " +
                                        std::to_string(*d));
      fail.at_level(i).at_degree(*d);
      out.add(std::move(fail));
      return out;
    }
  for (long i = 0; i < t.top(); ++i) {
    Certificate c = is_weak_equivalence(t.map(i), t.tag(i));
    c.check = "X_" + std::to_string(i + 1) + " -> X_" + std::to_string(i) + " is a " +
              t.tag(i).name() + " equivalence";
    c.at_level(i);
    const bool failed = !c.passed;
    out.add(std::move(c));
    if (failed) break;
  }
  return out;
}

TowerSection postnikov_tower(const ChainComplex& x, long m) {
  if (m < 0) throw std::invalid_argument("postnikov_tower: negative length");
  std::vector<ChainComplex> levels;
  std::vector<ChainMap> maps;
  std::vector<LevelStructure> tags;
  for (long i = 0; i <= m; ++i) {
    levels.push_back(trunc::postnikov_section(x, i).complex);
    tags.push_back(LevelStructure::truncated(i));
    if (i < m) maps.push_back(trunc::postnikov_map(x, i));
  }
  const long stable = std::max(0L, x.max_degree());
  std::optional<long> declared;
  if (stable <= m) declared = stable;
  return {std::move(levels), std::move(maps), std::move(tags), declared};
}

TowerReplacement cofibrant_tower(const TowerSection& t) {
  std::vector<complex::CofibrantReplacement> reps;
  for (const auto& x : t.levels()) reps.push_back(cofibrant_replacement(x));
  std::vector<ChainComplex> levels;
  std::vector<ChainMap> maps, comps;
  for (long i = 0; i <= t.top(); ++i) {
    const auto& r = reps[static_cast<std::size_t>(i)];
    levels.push_back(r.complex);
    comps.push_back(r.map);
    if (i < t.top()) maps.push_back(complex::lift_map(t.map(i), reps[i + 1], r));
  }
  TowerSection tower(std::move(levels), std::move(maps), t.tags(), t.stabilization());
  SectionMorphism map(tower, t, std::move(comps));
  return {std::move(tower), std::move(map)};
}

}  // namespace towercalc::sections

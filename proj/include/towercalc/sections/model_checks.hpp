#pragma once

#include "towercalc/complex/cofibrant.hpp"
#include "towercalc/sections/sections.hpp"

namespace towercalc::sections {

/// Degreewise surjective in every degree >= 1; the witness is the least such
/// degree where surjectivity fails.
Certificate is_fibration(const ChainMap& f);

/// Degreewise injective with degreewise free cokernel.
Certificate is_cofibration(const ChainMap& f);

struct InjectiveClassification {
  Certificate weq;
  Certificate cofib;
};

/// Levelwise: phi_i is a weak equivalence for the tag of level i, and a
/// cofibration. Witnesses carry the first failing level and degree.
InjectiveClassification classify_injective(const SectionMorphism& phi);

/// phi_0 is a fibration and each X_{i+1} -> Y_{i+1} x_{Y_i} X_i is one.
/// A failure of the induced map from X_{i+1} is reported at level i + 1.
Certificate is_tower_fibration(const SectionMorphism& phi);

/// Evaluates both fibrancy characterizations of a tower (X_0 fibrant in P_0
/// and fibrations in P_{n+1}; X_n fibrant in P_n and fibrations in C) by
/// independent computations. Throws CharacterizationMismatch if the verdicts
/// or witness levels disagree.
Certificate is_post_fibrant(const TowerSection& t);

/// Each structure map, precomposed with a cofibrant replacement of its
/// source, is a weak equivalence for the tag of its target level i; failures
/// are reported at level i.
Certificate is_homotopy_cartesian(const TowerSection& t);

/// Both legs, precomposed with cofibrant replacements, are weak equivalences
/// for the tag of X_0.
Certificate is_homotopy_cartesian(const CospanSection& s);

/// Every level degreewise free and every structure map X_{i+1} -> X_i a weak
/// equivalence for the tag of level i.
Certificate is_tow_cofibrant(const TowerSection& t);

/// (P_n X)_{n <= m} with the quotient maps and tags P_n. The declared
/// stabilization is the top degree of X (at least 0) when it lies within m.
TowerSection postnikov_tower(const ChainComplex& x, long m);

struct TowerReplacement {
  TowerSection tower;
  SectionMorphism map;  // replacement -> original
};

/// Levelwise cofibrant replacement with lifted structure maps.
TowerReplacement cofibrant_tower(const TowerSection& t);

}  // namespace towercalc::sections

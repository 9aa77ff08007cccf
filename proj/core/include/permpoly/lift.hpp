#pragma once

#include <optional>

#include "permpoly/polynomial.hpp"
#include "permpoly/ring.hpp"

namespace permpoly {

/// Outcome of the local-ring permutation criterion: f permutes R iff it
/// permutes R/M (condition 1) and f' takes no value in M (condition 2).
struct CriterionReport {
  bool condition1 = false;
  bool condition2 = false;
  bool verdict = false;
  /// Residue-field point whose image collides with an earlier one.
  std::optional<ElemIndex> witness_residue;
  /// Point of the residue system where f' lies in M.
  std::optional<ElemIndex> witness_point;
};

/// Throws NotLocalRing when f lives over a field (M = 0).
CriterionReport noebauer_is_permutation(const Polynomial& f);

/// True iff the induced map R -> R is a bijection.
bool brute_force_is_permutation(const Polynomial& f);

/// Image of f under coefficient-wise reduction modulo M.
Polynomial residue_poly(const Polynomial& f);

/// Coefficient-wise canonical lift of a polynomial over R/M into R.
Polynomial lift_poly(const Polynomial& f, const Ring& ring);

/// True iff g(r) is a unit for every r in the canonical residue system.
bool is_unit_valued(const Polynomial& g);

/// h = f + (f' + g)(x^q - x) + p l, with q = |R/M| and p = char(R/M) * 1_R.
/// Throws ResidueNotPermutation, GNotUnitValued, NotLocalRing.
Polynomial proposition_h(const Polynomial& f, const Polynomial& g, const Polynomial& l);

/// proposition_h with f the transposition polynomial for (a b) built in R.
/// Throws CongruentPoints, GNotUnitValued, ResidueFieldTooSmall.
Polynomial corollary_h(const Element& a, const Element& b, const Polynomial& g,
                       const Polynomial& l);

}  // namespace permpoly

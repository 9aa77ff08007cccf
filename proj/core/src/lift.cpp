#include "permpoly/lift.hpp"

#include <vector>

#include "permpoly/transposition.hpp"

namespace permpoly {

namespace {

void require_local(const Ring& ring) {
  if (ring.is_field()) {
    throw Error(ErrorCode::NotLocalRing,
                ring.name() + " is a field; the criterion needs a nonzero maximal ideal");
  }
}

}  // namespace

CriterionReport noebauer_is_permutation(const Polynomial& f) {
  const Ring& ring = f.ring();
  require_local(ring);
  const Ring field = ring.residue_field();
  const Polynomial fbar = residue_poly(f);
  const Polynomial df = f.derivative();

  CriterionReport report;
  std::vector<bool> hit(field.size(), false);
  report.condition1 = true;
  for (ElemIndex a = 0; a < field.size(); ++a) {
    const ElemIndex y = fbar.eval(a);
    if (hit[y]) {
      report.condition1 = false;
      report.witness_residue = a;
      break;
    }
    hit[y] = true;
  }
  // f'(r) mod M depends only on r mod M, so the residue system suffices.
  report.condition2 = true;
  for (ElemIndex a = 0; a < field.size(); ++a) {
    const ElemIndex r = ring.lift(a);
    if (ring.in_maximal_ideal(df.eval(r))) {
      report.condition2 = false;
      report.witness_point = r;
      break;
    }
  }
  report.verdict = report.condition1 && report.condition2;
  return report;
}

bool brute_force_is_permutation(const Polynomial& f) { return function_table(f).is_bijective(); }

Polynomial residue_poly(const Polynomial& f) {
  const Ring& ring = f.ring();
  const Ring field = ring.residue_field();
  std::vector<ElemIndex> coeffs(f.coeffs().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = ring.residue(f.coeffs()[i]);
  return Polynomial(field, std::move(coeffs));
}

Polynomial lift_poly(const Polynomial& f, const Ring& ring) {
  require_same_ring(f.ring(), ring.residue_field());
  std::vector<ElemIndex> coeffs(f.coeffs().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = ring.lift(f.coeffs()[i]);
  return Polynomial(ring, std::move(coeffs));
}

bool is_unit_valued(const Polynomial& g) {
  const Ring& ring = g.ring();
  for (ElemIndex a = 0; a < ring.residue_order(); ++a) {
    if (!ring.is_unit(g.eval(ring.lift(a)))) return false;
  }
  return true;
}

Polynomial proposition_h(const Polynomial& f, const Polynomial& g, const Polynomial& l) {
  const Ring& ring = f.ring();
  require_same_ring(ring, g.ring());
  require_same_ring(ring, l.ring());
  require_local(ring);
  if (!function_table(residue_poly(f)).is_bijective()) {
    throw Error(ErrorCode::ResidueNotPermutation, "f does not permute the residue field");
  }
  if (!is_unit_valued(g)) {
    throw Error(ErrorCode::GNotUnitValued, "g takes a value in the maximal ideal");
  }
  const std::uint32_t q = ring.residue_order();
  const Polynomial frobenius_gap =
      Polynomial::monomial(ring, 1, q) - Polynomial::x(ring);  // x^q - x
  const ElemIndex p = ring.from_int(ring.residue_characteristic());
  return f + (f.derivative() + g) * frobenius_gap + l.scale(p);
}

Polynomial corollary_h(const Element& a, const Element& b, const Polynomial& g,
                       const Polynomial& l) {
  const Ring& ring = g.ring();
  require_same_ring(ring, a.ring());
  require_same_ring(ring, b.ring());
  require_local(ring);
  if (ring.residue_order() <= 2) {
    throw Error(ErrorCode::ResidueFieldTooSmall, "the transposition polynomial needs q > 2");
  }
  if (!(b - a).is_unit()) {
    throw Error(ErrorCode::CongruentPoints, "a and b are congruent modulo the maximal ideal");
  }
  return proposition_h(transposition_poly_in(ring, a.index(), b.index()), g, l);
}

}  // namespace permpoly

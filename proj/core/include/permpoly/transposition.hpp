#pragma once

#include <optional>

#include "permpoly/polynomial.hpp"
#include "permpoly/ring.hpp"

namespace permpoly {

/// Largest field for which the degree-(q-2)^3 Carlitz polynomial is expanded.
inline constexpr std::uint32_t kCarlitzExpansionLimit = 16;

/// l(x) = x^{q-2} + ... + x + 1, which vanishes on F_q \ {0, 1}.
Polynomial ones_poly(const Ring& field);

/// f(x) = l(x) + x, inducing (0 1). Throws FieldTooSmall for q = 2.
Polynomial base_transposition(const Ring& field);

/// The base polynomial with an x^{q-1} term in place of x^{q-3}; not a transposition.
/// It does not induce (0 1); kept to evidence the degree-(q-2) reading.
Polynomial literal_base_candidate(const Ring& field);

/// Expanded (b-a) f((x-a)/(b-a)) + a of degree q-2, inducing (a b) on F_q.
/// Throws NotAField, FieldTooSmall, EqualPoints.
Polynomial transposition_poly(const Element& a, const Element& b);

/// The same construction with its arithmetic carried out in a local ring
/// (q = |R/M|, division by b - a as multiplication by its unit inverse).
/// Throws CongruentPoints when b - a is not a unit.
Polynomial transposition_poly_in(const Ring& ring, ElemIndex a, ElemIndex b);

/// Carlitz's g_a(x) = -a^2(((x-a)^{q-2} + 1/a)^{q-2} - a)^{q-2}, fully
/// expanded (degree (q-2)^3). Throws ZeroPoint, FieldTooSmall, ExpansionTooLarge.
Polynomial carlitz_poly(const Element& a);

/// Evaluates g_a at x through the nested form, without expansion.
Element carlitz_eval(const Element& a, const Element& x);

FunctionTable carlitz_table(const Element& a);

/// x^{p-2} + ... + x^2 + 2x + 1 over a prime field. Throws NotPrimeField.
Polynomial martin_poly(const Ring& field);

/// (b-a) h((x-a)/(b-a)) + a over a prime field, expanded term by term.
Polynomial martin_poly_ab(const Element& a, const Element& b);

struct Counterexample {
  ElemIndex point;
  ElemIndex image;
  ElemIndex expected;
};

struct VerificationReport {
  bool is_permutation = false;
  bool is_exact_transposition = false;
  FunctionTable table;
  long degree = -1;
  std::optional<Counterexample> counterexample;
};

/// Checks f pointwise against the transposition (a b).
VerificationReport verify_transposition(const Polynomial& f, const Element& a, const Element& b);

/// Same check for an already evaluated table; `degree` is copied into the report.
VerificationReport verify_table(FunctionTable table, long degree, ElemIndex a, ElemIndex b);

/// Table of the transposition (a b) on `ring`.
FunctionTable transposition_table(const Ring& ring, ElemIndex a, ElemIndex b);

}  // namespace permpoly

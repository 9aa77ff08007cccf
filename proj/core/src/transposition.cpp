#include "permpoly/transposition.hpp"

#include <numeric>

namespace permpoly {

namespace {

void require_field(const Ring& ring) {
  if (!ring.is_field()) throw Error(ErrorCode::NotAField, ring.name() + " is not a field");
}

void require_large_field(const Ring& field) {
  require_field(field);
  if (field.size() <= 2) {
    throw Error(ErrorCode::FieldTooSmall, "transposition polynomials need q > 2");
  }
}

void require_prime_field(const Ring& field) {
  require_field(field);
  if (field.field_spec().n != 1) {
    throw Error(ErrorCode::NotPrimeField,
                "Martin's polynomial is stated for prime fields; " + field.name() + " has n > 1");
  }
}

Polynomial ones_of_degree(const Ring& ring, std::uint32_t degree) {
  return Polynomial(ring, std::vector<ElemIndex>(degree + 1, 1));
}

}  // namespace

Polynomial ones_poly(const Ring& field) {
  require_field(field);
  return ones_of_degree(field, field.size() - 2);
}

Polynomial base_transposition(const Ring& field) {
  require_large_field(field);
  return ones_poly(field) + Polynomial::x(field);
}

Polynomial literal_base_candidate(const Ring& field) {
  require_large_field(field);
  return base_transposition(field) + Polynomial::monomial(field, 1, field.size() - 1);
}

Polynomial transposition_poly_in(const Ring& ring, ElemIndex a, ElemIndex b) {
  const std::uint32_t q = ring.residue_order();
  if (q <= 2) {
    throw Error(ring.is_field() ? ErrorCode::FieldTooSmall : ErrorCode::ResidueFieldTooSmall,
                "transposition polynomials need a residue field with q > 2");
  }
  if (a == b) throw Error(ErrorCode::EqualPoints, "a and b must differ");
  const ElemIndex diff = ring.sub(b, a);
  if (!ring.is_unit(diff)) {
    throw Error(ErrorCode::CongruentPoints, "a and b are congruent modulo the maximal ideal");
  }
  const ElemIndex diff_inv = ring.inv(diff);
  // l1(x) = (x - a)/(b - a), l2(x) = (b - a)x + a
  const Polynomial inner(ring, {ring.mul(ring.neg(a), diff_inv), diff_inv});
  const Polynomial outer(ring, {a, diff});
  const Polynomial base = ones_of_degree(ring, q - 2) + Polynomial::x(ring);
  return outer.compose(base.compose(inner));
}

Polynomial transposition_poly(const Element& a, const Element& b) {
  require_same_ring(a.ring(), b.ring());
  require_large_field(a.ring());
  return transposition_poly_in(a.ring(), a.index(), b.index());
}

Polynomial carlitz_poly(const Element& a) {
  const Ring& field = a.ring();
  require_large_field(field);
  if (a.is_zero()) throw Error(ErrorCode::ZeroPoint, "Carlitz's polynomial needs a != 0");
  if (field.size() > kCarlitzExpansionLimit) {
    throw Error(ErrorCode::ExpansionTooLarge,
                "Carlitz expansion is limited to q <= " + std::to_string(kCarlitzExpansionLimit) +
                    "; use pointwise evaluation");
  }
  const std::uint64_t e = field.size() - 2;
  const ElemIndex ai = a.index();
  const Polynomial shifted(field, {field.neg(ai), 1});
  const Polynomial inner = shifted.pow(e) + Polynomial::constant(field, field.inv(ai));
  const Polynomial middle = inner.pow(e) - Polynomial::constant(field, ai);
  return middle.pow(e).scale(field.neg(field.mul(ai, ai)));
}

Element carlitz_eval(const Element& a, const Element& x) {
  const Ring& field = a.ring();
  require_same_ring(field, x.ring());
  require_large_field(field);
  if (a.is_zero()) throw Error(ErrorCode::ZeroPoint, "Carlitz's polynomial needs a != 0");
  const std::uint64_t e = field.size() - 2;
  const Element inner = (x - a).pow(e) + a.inv();
  const Element middle = inner.pow(e) - a;
  return -(a * a) * middle.pow(e);
}

FunctionTable carlitz_table(const Element& a) {
  const Ring& field = a.ring();
  FunctionTable t{field, std::vector<ElemIndex>(field.size())};
  for (ElemIndex x = 0; x < field.size(); ++x) t.map[x] = carlitz_eval(a, field.element(x)).index();
  return t;
}

Polynomial martin_poly(const Ring& field) {
  require_prime_field(field);
  require_large_field(field);
  const std::uint32_t p = field.size();
  std::vector<ElemIndex> coeffs(p - 1, 1);
  coeffs[1] = field.from_int(2);
  return Polynomial(field, std::move(coeffs));
}

Polynomial martin_poly_ab(const Element& a, const Element& b) {
  const Ring& field = a.ring();
  require_same_ring(field, b.ring());
  require_prime_field(field);
  if (a == b) throw Error(ErrorCode::EqualPoints, "a and b must differ");
  const Polynomial h = martin_poly(field);
  const ElemIndex diff = field.sub(b.index(), a.index());
  const ElemIndex diff_inv = field.inv(diff);
  const Polynomial t(field, {field.mul(field.neg(a.index()), diff_inv), diff_inv});
  Polynomial sum = Polynomial::constant(field, a.index());
  Polynomial t_power = Polynomial::constant(field, 1);
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    sum = sum + t_power.scale(field.mul(diff, h.coeffs()[i]));
    t_power = t_power * t;
  }
  return sum;
}

FunctionTable transposition_table(const Ring& ring, ElemIndex a, ElemIndex b) {
  FunctionTable t{ring, std::vector<ElemIndex>(ring.size())};
  std::iota(t.map.begin(), t.map.end(), ElemIndex{0});
  std::swap(t.map[a], t.map[b]);
  return t;
}

VerificationReport verify_table(FunctionTable table, long degree, ElemIndex a, ElemIndex b) {
  VerificationReport report{false, false, std::move(table), degree, std::nullopt};
  report.is_permutation = report.table.is_bijective();
  const FunctionTable expected = transposition_table(report.table.ring, a, b);
  for (ElemIndex x = 0; x < expected.map.size(); ++x) {
    if (report.table.map[x] != expected.map[x]) {
      report.counterexample = Counterexample{x, report.table.map[x], expected.map[x]};
      break;
    }
  }
  report.is_exact_transposition = a != b && !report.counterexample.has_value();
  return report;
}

VerificationReport verify_transposition(const Polynomial& f, const Element& a, const Element& b) {
  require_same_ring(f.ring(), a.ring());
  require_same_ring(f.ring(), b.ring());
  return verify_table(function_table(f), f.degree(), a.index(), b.index());
}

}  // namespace permpoly

#include "permpoly/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace permpoly {

bool FunctionTable::is_bijective() const {
  std::vector<bool> seen(ring.size(), false);
  for (ElemIndex y : map) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return map.size() == ring.size();
}

Polynomial::Polynomial(Ring ring, std::vector<ElemIndex> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (ElemIndex c : coeffs_) {
    if (c >= ring_.size()) {
      throw Error(ErrorCode::ParseError, "coefficient index out of range for " + ring_.name());
    }
  }
  trim();
}

Polynomial Polynomial::from_ints(const Ring& ring, std::initializer_list<std::int64_t> coeffs) {
  std::vector<ElemIndex> raw;
  raw.reserve(coeffs.size());
  for (std::int64_t c : coeffs) raw.push_back(ring.from_int(c));
  return Polynomial(ring, std::move(raw));
}

Polynomial Polynomial::from_elements(const Ring& ring, const std::vector<Element>& coeffs) {
  std::vector<ElemIndex> raw;
  raw.reserve(coeffs.size());
  for (const Element& c : coeffs) {
    require_same_ring(ring, c.ring());
    raw.push_back(c.index());
  }
  return Polynomial(ring, std::move(raw));
}

Polynomial Polynomial::constant(const Ring& ring, ElemIndex c) {
  return Polynomial(ring, std::vector<ElemIndex>{c});
}

Polynomial Polynomial::monomial(const Ring& ring, ElemIndex c, std::size_t degree) {
  std::vector<ElemIndex> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(ring, std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ElemIndex Polynomial::eval(ElemIndex x) const {
  ElemIndex acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = ring_.add(ring_.mul(acc, x), *it);
  }
  return acc;
}

Element Polynomial::eval(const Element& x) const {
  require_same_ring(ring_, x.ring());
  return Element(ring_, eval(x.index()));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  std::vector<ElemIndex> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ring_.add(coeff(i), o.coeff(i));
  return Polynomial(ring_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  std::vector<ElemIndex> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ring_.sub(coeff(i), o.coeff(i));
  return Polynomial(ring_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  std::vector<ElemIndex> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const ElemIndex a = coeffs_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      r[i + j] = ring_.add(r[i + j], ring_.mul(a, o.coeffs_[j]));
    }
  }
  return Polynomial(ring_, std::move(r));
}

Polynomial Polynomial::operator-() const {
  std::vector<ElemIndex> r(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), r.begin(),
                 [this](ElemIndex c) { return ring_.neg(c); });
  return Polynomial(ring_, std::move(r));
}

Polynomial Polynomial::scale(ElemIndex c) const {
  std::vector<ElemIndex> r(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), r.begin(),
                 [this, c](ElemIndex a) { return ring_.mul(c, a); });
  return Polynomial(ring_, std::move(r));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  require_same_ring(ring_, inner.ring_);
  Polynomial acc(ring_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner + constant(ring_, *it);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(ring_);
  std::vector<ElemIndex> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    r[i - 1] = ring_.mul(ring_.from_int(static_cast<std::int64_t>(i)), coeffs_[i]);
  }
  return Polynomial(ring_, std::move(r));
}

Polynomial reduce_canonical(const Polynomial& f) {
  const Ring& ring = f.ring();
  if (!ring.is_field()) {
    throw Error(ErrorCode::NotAField, "canonical reduction needs a field, got " + ring.name());
  }
  const std::size_t q = ring.size();
  std::vector<ElemIndex> r(std::min<std::size_t>(f.coeffs().size(), q), 0);
  for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
    const std::size_t folded = e < q ? e : ((e - 1) % (q - 1)) + 1;
    r[folded] = ring.add(r[folded], f.coeffs()[e]);
  }
  return Polynomial(ring, std::move(r));
}

FunctionTable function_table(const Polynomial& f) {
  FunctionTable t{f.ring(), std::vector<ElemIndex>(f.ring().size())};
  for (ElemIndex x = 0; x < t.map.size(); ++x) t.map[x] = f.eval(x);
  return t;
}

Polynomial interpolate(const FunctionTable& table) {
  const Ring& ring = table.ring;
  if (!ring.is_field()) {
    throw Error(ErrorCode::NotAField, "interpolation needs a field, got " + ring.name());
  }
  // f = sum_c f(c) (1 - (x - c)^{q-1})
  const std::uint32_t q = ring.size();
  Polynomial result(ring);
  const Polynomial one = Polynomial::constant(ring, 1);
  for (ElemIndex c = 0; c < q; ++c) {
    if (table.map[c] == 0) continue;
    const Polynomial shifted(ring, std::vector<ElemIndex>{ring.neg(c), 1});
    result = result + (one - shifted.pow(q - 1)).scale(table.map[c]);
  }
  return result;
}

}  // namespace permpoly

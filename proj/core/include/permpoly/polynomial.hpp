#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "permpoly/ring.hpp"

namespace permpoly {

/// Values of a function R -> R, listed in the ring's enumeration order.
struct FunctionTable {
  Ring ring;
  std::vector<ElemIndex> map;

  bool is_bijective() const;
  bool operator==(const FunctionTable& o) const { return ring == o.ring && map == o.map; }
};

/// Dense univariate polynomial; coefficient i multiplies x^i and there are no
/// trailing zeros, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, std::vector<ElemIndex> coeffs);
  /// Coefficients given as integers mapped through v * 1_R.
  static Polynomial from_ints(const Ring& ring, std::initializer_list<std::int64_t> coeffs);
  static Polynomial from_elements(const Ring& ring, const std::vector<Element>& coeffs);
  static Polynomial constant(const Ring& ring, ElemIndex c);
  static Polynomial monomial(const Ring& ring, ElemIndex c, std::size_t degree);
  static Polynomial x(const Ring& ring) { return monomial(ring, 1, 1); }

  const Ring& ring() const { return ring_; }
  std::span<const ElemIndex> coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  ElemIndex coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Element coefficient(std::size_t i) const { return ring_.element(coeff(i)); }
  ElemIndex leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  ElemIndex eval(ElemIndex x) const;
  Element eval(const Element& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(ElemIndex c) const;
  Polynomial pow(std::uint64_t e) const;
  /// (this o inner)(x) = this(inner(x)).
  Polynomial compose(const Polynomial& inner) const;
  Polynomial derivative() const;

  bool operator==(const Polynomial& o) const { return ring_ == o.ring_ && coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  void trim();

  Ring ring_;
  std::vector<ElemIndex> coeffs_;
};

/// Unique polynomial of degree < q over F_q inducing the same function, by
/// folding every exponent e >= q onto ((e - 1) mod (q - 1)) + 1.
/// Throws NotAField.
Polynomial reduce_canonical(const Polynomial& f);

FunctionTable function_table(const Polynomial& f);

/// Interpolates the unique polynomial of degree < q with the given values.
/// Throws NotAField.
Polynomial interpolate(const FunctionTable& table);

}  // namespace permpoly

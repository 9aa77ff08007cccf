#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/error.hpp"

namespace permpoly {

/// Position of an element in its ring's canonical enumeration.
using ElemIndex = std::uint32_t;

/// Largest ring the library will enumerate.
inline constexpr std::uint32_t kMaxRingSize = 65536;

/// GF(p^n) described as F_p[t]/(irr).
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  /// Monic irreducible modulus, constant term first, size n + 1.
  std::vector<std::uint32_t> irr;

  std::uint32_t order() const;
  bool operator==(const FieldSpec&) const = default;
};

enum class RingFamily {
  Field,                ///< GF(p^n)
  IntegersModPrimePower,  ///< Z/p^k, k >= 2
  TruncatedPolynomial,  ///< F_q[u]/(u^k), k >= 2
};

/// Description of a proper finite local ring (nonzero maximal ideal).
struct LocalRingSpec {
  RingFamily family = RingFamily::IntegersModPrimePower;
  FieldSpec residue;
  std::uint32_t k = 2;
};

bool is_prime(std::uint64_t n);

/// Validates (p, n, irr) and returns a field description. Without `irr` the
/// lexicographically smallest monic irreducible of degree n is chosen, with
/// coefficient vectors compared constant term first.
FieldSpec make_field(std::uint32_t p, std::uint32_t n,
                     std::optional<std::vector<std::uint32_t>> irr = std::nullopt);

/// Exhaustive trial division by every monic polynomial of degree <= n/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

LocalRingSpec zmod(std::uint32_t p, std::uint32_t k);
LocalRingSpec fqu(const FieldSpec& residue, std::uint32_t k);

namespace detail {
struct RingData;
}

class Element;

/// Immutable handle to a finite field or finite local ring.
///
/// Elements are addressed by their index in a fixed enumeration:
///  - Z/p^k: the integer value itself.
///  - GF(p^n): sum of c_i p^i over the coordinates in F_p[t]/(irr).
///  - F_q[u]/(u^k): sum of e_j q^j where e_j indexes the u^j coefficient in F_q.
/// Under this encoding 0 and 1 always have index 0 and 1, residue(i) = i mod q,
/// and the canonical residue system consists of the indices 0..q-1.
class Ring {
 public:
  static Ring field(const FieldSpec& spec);
  static Ring local(const LocalRingSpec& spec);

  RingFamily family() const;
  bool is_field() const { return family() == RingFamily::Field; }
  std::uint32_t size() const;
  /// Characteristic p of the residue field.
  std::uint32_t residue_characteristic() const;
  /// q = |R/M|.
  std::uint32_t residue_order() const;
  /// |M| (1 for fields).
  std::uint32_t ideal_order() const { return size() / residue_order(); }
  /// k for local rings, 1 for fields.
  std::uint32_t nilpotency() const;
  /// The field this ring is built over: itself for fields, R/M otherwise.
  const FieldSpec& field_spec() const;
  /// Canonical ring-spec string, parseable by parse_ring.
  const std::string& name() const;

  ElemIndex zero() const { return 0; }
  ElemIndex one() const { return 1; }
  /// The integer v mapped into the ring as v * 1_R.
  ElemIndex from_int(std::int64_t v) const;

  ElemIndex add(ElemIndex x, ElemIndex y) const;
  ElemIndex sub(ElemIndex x, ElemIndex y) const;
  ElemIndex neg(ElemIndex x) const;
  ElemIndex mul(ElemIndex x, ElemIndex y) const;
  /// Throws NonUnitInverse.
  ElemIndex inv(ElemIndex x) const;
  ElemIndex pow(ElemIndex x, std::uint64_t e) const;

  bool is_unit(ElemIndex x) const;
  bool in_maximal_ideal(ElemIndex x) const;

  /// Residue field R/M; the ring itself when it is a field.
  Ring residue_field() const;
  /// Index in residue_field().
  ElemIndex residue(ElemIndex x) const { return x % residue_order(); }
  /// Canonical representative in R of a residue-field index.
  ElemIndex lift(ElemIndex a) const { return a; }

  /// Coordinates of an element: {value} for Z/p^k, F_p digits (length n) for
  /// fields, residue-field indices of the u^j coefficients (length k) for
  /// F_q[u]/(u^k).
  std::vector<std::uint32_t> coordinates(ElemIndex x) const;
  ElemIndex from_coordinates(const std::vector<std::uint32_t>& coords) const;

  Element element(ElemIndex x) const;
  Element operator()(std::int64_t v) const;

  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }

 private:
  explicit Ring(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::RingData> data_;
};

/// A ring element; equality is equality of ring and canonical index.
class Element {
 public:
  Element(Ring ring, ElemIndex index);

  const Ring& ring() const { return ring_; }
  ElemIndex index() const { return index_; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;
  Element inv() const;
  Element pow(std::uint64_t e) const;

  bool is_unit() const { return ring_.is_unit(index_); }
  bool in_maximal_ideal() const { return ring_.in_maximal_ideal(index_); }
  bool is_zero() const { return index_ == 0; }

  /// Image in R/M.
  Element residue() const;

  bool operator==(const Element& o) const { return index_ == o.index_ && ring_ == o.ring_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  Ring ring_;
  ElemIndex index_;
};

/// Canonical representative in `ring` of an element of its residue field.
Element lift(const Element& a, const Ring& ring);

void require_same_ring(const Ring& a, const Ring& b);

}  // namespace permpoly

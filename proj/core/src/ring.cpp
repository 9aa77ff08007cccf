#include "permpoly/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permpoly {

namespace {

constexpr std::uint32_t kTableLimit = 512;
constexpr ElemIndex kNoInverse = 0xffffffffu;

using Digits = std::vector<std::uint32_t>;

std::uint64_t checked_power(std::uint32_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > kMaxRingSize) {
      throw Error(ErrorCode::RingTooLarge,
                  "ring with " + std::to_string(base) + "^" + std::to_string(exp) +
                      " elements exceeds the enumeration bound " + std::to_string(kMaxRingSize));
    }
  }
  return r;
}

Digits to_digits(std::uint32_t x, std::uint32_t base, std::uint32_t len) {
  Digits d(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = x % base;
    x /= base;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t base) {
  std::uint32_t x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * base + *it;
  return x;
}

// Remainder of a modulo the monic polynomial m, all over F_p.
Digits poly_mod(Digits a, const Digits& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

// Product of two residues mod `irr`, digits of length n.
Digits field_mul_digits(const Digits& a, const Digits& b, const Digits& irr, std::uint32_t p) {
  Digits prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  Digits r = poly_mod(std::move(prod), irr, p);
  r.resize(irr.size() - 1, 0);
  return r;
}

std::string field_name(const FieldSpec& f, bool with_prefix) {
  std::ostringstream os;
  if (with_prefix) os << "gf:";
  os << f.p;
  if (f.n > 1) {
    os << '^' << f.n;
    if (f.irr != make_field(f.p, f.n).irr) {
      os << '/';
      for (std::size_t i = 0; i < f.irr.size(); ++i) os << (i ? "," : "") << f.irr[i];
    }
  }
  return os.str();
}

}  // namespace

namespace detail {

struct RingData {
  RingFamily family = RingFamily::Field;
  FieldSpec field;  // the field itself, or the residue field
  std::uint32_t k = 1;
  std::uint32_t size = 0;
  std::uint32_t q = 0;
  std::string name;
  std::shared_ptr<const RingData> residue;  // null for fields

  // Fields: discrete log tables relative to a primitive element.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;

  std::vector<ElemIndex> add_table;
  std::vector<ElemIndex> mul_table;
  std::vector<ElemIndex> neg_table;
  std::vector<ElemIndex> inv_table;

  bool tabulated() const { return !add_table.empty(); }

  ElemIndex add_direct(ElemIndex x, ElemIndex y) const {
    switch (family) {
      case RingFamily::IntegersModPrimePower:
        return (x + y) % size;
      case RingFamily::Field: {
        const std::uint32_t p = field.p;
        ElemIndex r = 0, scale = 1;
        for (std::uint32_t i = 0; i < field.n; ++i) {
          r += ((x % p + y % p) % p) * scale;
          x /= p;
          y /= p;
          scale *= p;
        }
        return r;
      }
      case RingFamily::TruncatedPolynomial: {
        ElemIndex r = 0, scale = 1;
        for (std::uint32_t j = 0; j < k; ++j) {
          r += residue->add(x % q, y % q) * scale;
          x /= q;
          y /= q;
          scale *= q;
        }
        return r;
      }
    }
    return 0;
  }

  ElemIndex neg_direct(ElemIndex x) const {
    switch (family) {
      case RingFamily::IntegersModPrimePower:
        return (size - x) % size;
      case RingFamily::Field: {
        const std::uint32_t p = field.p;
        ElemIndex r = 0, scale = 1;
        for (std::uint32_t i = 0; i < field.n; ++i) {
          r += ((p - x % p) % p) * scale;
          x /= p;
          scale *= p;
        }
        return r;
      }
      case RingFamily::TruncatedPolynomial: {
        ElemIndex r = 0, scale = 1;
        for (std::uint32_t j = 0; j < k; ++j) {
          r += residue->neg(x % q) * scale;
          x /= q;
          scale *= q;
        }
        return r;
      }
    }
    return 0;
  }

  ElemIndex mul_direct(ElemIndex x, ElemIndex y) const {
    switch (family) {
      case RingFamily::IntegersModPrimePower:
        return static_cast<ElemIndex>((std::uint64_t{x} * y) % size);
      case RingFamily::Field:
        if (x == 0 || y == 0) return 0;
        return exp_table[(log_table[x] + log_table[y]) % (size - 1)];
      case RingFamily::TruncatedPolynomial: {
        const Digits a = to_digits(x, q, k), b = to_digits(y, q, k);
        Digits c(k, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
          if (a[i] == 0) continue;
          for (std::uint32_t j = 0; i + j < k; ++j) {
            c[i + j] = residue->add(c[i + j], residue->mul(a[i], b[j]));
          }
        }
        return from_digits(c, q);
      }
    }
    return 0;
  }

  ElemIndex inv_direct(ElemIndex x) const {
    if (x % q == 0) return kNoInverse;
    switch (family) {
      case RingFamily::IntegersModPrimePower: {
        std::int64_t a = x, m = size, u = 1, v = 0;
        while (m != 0) {
          const std::int64_t t = a / m;
          a -= t * m;
          std::swap(a, m);
          u -= t * v;
          std::swap(u, v);
        }
        return static_cast<ElemIndex>(((u % size) + size) % size);
      }
      case RingFamily::Field:
        return exp_table[(size - 1 - log_table[x]) % (size - 1)];
      case RingFamily::TruncatedPolynomial: {
        // x = c (1 + n) with n nilpotent: x^{-1} = c^{-1} sum_{j<k} (-n)^j.
        const ElemIndex c = x % q;
        const ElemIndex c_inv = residue->inv(c);
        const ElemIndex unit_part = mul_direct(c_inv, x);  // 1 + n
        const ElemIndex minus_n = neg_direct(add_direct(unit_part, neg_direct(1)));
        ElemIndex sum = 1, term = 1;
        for (std::uint32_t j = 1; j < k; ++j) {
          term = mul_direct(term, minus_n);
          sum = add_direct(sum, term);
        }
        return mul_direct(sum, c_inv);
      }
    }
    return kNoInverse;
  }

  ElemIndex add(ElemIndex x, ElemIndex y) const {
    return tabulated() ? add_table[x * size + y] : add_direct(x, y);
  }
  ElemIndex mul(ElemIndex x, ElemIndex y) const {
    return tabulated() ? mul_table[x * size + y] : mul_direct(x, y);
  }
  ElemIndex neg(ElemIndex x) const { return tabulated() ? neg_table[x] : neg_direct(x); }
  ElemIndex inv(ElemIndex x) const { return tabulated() ? inv_table[x] : inv_direct(x); }

  void build_tables() {
    if (size > kTableLimit) return;
    std::vector<ElemIndex> add_t(std::size_t{size} * size), mul_t(std::size_t{size} * size);
    std::vector<ElemIndex> neg_t(size), inv_t(size);
    for (ElemIndex x = 0; x < size; ++x) {
      for (ElemIndex y = 0; y < size; ++y) {
        add_t[x * size + y] = add_direct(x, y);
        mul_t[x * size + y] = mul_direct(x, y);
      }
      neg_t[x] = neg_direct(x);
      inv_t[x] = inv_direct(x);
    }
    add_table = std::move(add_t);
    mul_table = std::move(mul_t);
    neg_table = std::move(neg_t);
    inv_table = std::move(inv_t);
  }

  void build_log_tables() {
    const std::uint32_t p = field.p, n = field.n;
    exp_table.assign(size - 1, 0);
    log_table.assign(size, 0);
    for (ElemIndex g = 1; g < size; ++g) {
      const Digits gd = to_digits(g, p, n);
      Digits cur = to_digits(1, p, n);
      std::uint32_t order = 0;
      std::vector<std::uint32_t> powers;
      powers.reserve(size - 1);
      do {
        powers.push_back(from_digits(cur, p));
        cur = field_mul_digits(cur, gd, field.irr, p);
        ++order;
      } while (from_digits(cur, p) != 1 && order < size);
      if (order == size - 1) {
        for (std::uint32_t e = 0; e < size - 1; ++e) {
          exp_table[e] = powers[e];
          log_table[powers[e]] = e;
        }
        return;
      }
    }
  }
};

}  // namespace detail

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t FieldSpec::order() const {
  std::uint32_t r = 1;
  for (std::uint32_t i = 0; i < n; ++i) r *= p;
  return r;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  const std::uint32_t n = static_cast<std::uint32_t>(monic.size()) - 1;
  for (std::uint32_t d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = checked_power(p, d);
    for (std::uint32_t lower = 0; lower < count; ++lower) {
      Digits divisor = to_digits(lower, p, d);
      divisor.push_back(1);
      const Digits r = poly_mod(monic, divisor, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

FieldSpec make_field(std::uint32_t p, std::uint32_t n,
                     std::optional<std::vector<std::uint32_t>> irr) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (n < 1) throw Error(ErrorCode::ParseError, "extension degree must be at least 1");
  checked_power(p, n);
  FieldSpec spec{p, n, {}};
  if (irr) {
    if (irr->size() != n + 1 || irr->back() != 1 ||
        std::any_of(irr->begin(), irr->end(), [p](std::uint32_t c) { return c >= p; })) {
      throw Error(ErrorCode::ParseError, "modulus must be monic of degree " + std::to_string(n) +
                                             " with coefficients below " + std::to_string(p));
    }
    if (!is_irreducible(p, *irr)) {
      throw Error(ErrorCode::ReducibleModulus, "supplied modulus factors over F_" + std::to_string(p));
    }
    spec.irr = *irr;
    return spec;
  }
  // Lexicographic with the constant term most significant: enumerate the
  // lower coefficients as a base-p number whose leading digit is c_0.
  const std::uint64_t count = checked_power(p, n);
  for (std::uint64_t code = 0; code < count; ++code) {
    Digits c(n);
    std::uint64_t v = code;
    for (std::uint32_t i = n; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    c.push_back(1);
    if (is_irreducible(p, c)) {
      spec.irr = std::move(c);
      return spec;
    }
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

LocalRingSpec zmod(std::uint32_t p, std::uint32_t k) {
  return LocalRingSpec{RingFamily::IntegersModPrimePower, make_field(p, 1), k};
}

LocalRingSpec fqu(const FieldSpec& residue, std::uint32_t k) {
  return LocalRingSpec{RingFamily::TruncatedPolynomial, residue, k};
}

Ring Ring::field(const FieldSpec& spec) {
  if (!is_prime(spec.p)) {
    throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(spec.p) + " is not prime");
  }
  if (spec.irr.size() != spec.n + 1 || !is_irreducible(spec.p, spec.irr)) {
    throw Error(ErrorCode::ReducibleModulus, "field modulus is not irreducible of degree n");
  }
  auto data = std::make_shared<detail::RingData>();
  data->family = RingFamily::Field;
  data->field = spec;
  data->size = static_cast<std::uint32_t>(checked_power(spec.p, spec.n));
  data->q = data->size;
  data->name = field_name(spec, true);
  data->build_log_tables();
  data->build_tables();
  return Ring(std::move(data));
}

Ring Ring::local(const LocalRingSpec& spec) {
  if (spec.k < 2) {
    throw Error(ErrorCode::TrivialIdeal,
                "local ring needs k >= 2 for a nonzero maximal ideal; use a field for k = 1");
  }
  const Ring residue = Ring::field(spec.residue);
  auto data = std::make_shared<detail::RingData>();
  data->family = spec.family;
  data->field = spec.residue;
  data->k = spec.k;
  data->q = residue.size();
  data->residue = residue.data_;
  std::ostringstream name;
  if (spec.family == RingFamily::IntegersModPrimePower) {
    if (spec.residue.n != 1) {
      throw Error(ErrorCode::NotPrimeField, "Z/p^k has a prime residue field");
    }
    data->size = static_cast<std::uint32_t>(checked_power(spec.residue.p, spec.k));
    name << "zmod:" << spec.residue.p << '^' << spec.k;
  } else if (spec.family == RingFamily::TruncatedPolynomial) {
    data->size = static_cast<std::uint32_t>(checked_power(data->q, spec.k));
    name << "fqu:" << field_name(spec.residue, false);
    if (spec.residue.n == 1) name << "^1";
    name << ',' << spec.k;
  } else {
    throw Error(ErrorCode::TrivialIdeal, "a field is not a proper local ring");
  }
  data->name = name.str();
  data->build_tables();
  return Ring(std::move(data));
}

RingFamily Ring::family() const { return data_->family; }
std::uint32_t Ring::size() const { return data_->size; }
std::uint32_t Ring::residue_characteristic() const { return data_->field.p; }
std::uint32_t Ring::residue_order() const { return data_->q; }
std::uint32_t Ring::nilpotency() const { return data_->k; }
const FieldSpec& Ring::field_spec() const { return data_->field; }
const std::string& Ring::name() const { return data_->name; }

ElemIndex Ring::from_int(std::int64_t v) const {
  const std::int64_t c =
      family() == RingFamily::IntegersModPrimePower ? size() : residue_characteristic();
  return static_cast<ElemIndex>(((v % c) + c) % c);
}

ElemIndex Ring::add(ElemIndex x, ElemIndex y) const { return data_->add(x, y); }
ElemIndex Ring::sub(ElemIndex x, ElemIndex y) const { return data_->add(x, data_->neg(y)); }
ElemIndex Ring::neg(ElemIndex x) const { return data_->neg(x); }
ElemIndex Ring::mul(ElemIndex x, ElemIndex y) const { return data_->mul(x, y); }

ElemIndex Ring::inv(ElemIndex x) const {
  const ElemIndex r = data_->inv(x);
  if (r == kNoInverse) {
    throw Error(ErrorCode::NonUnitInverse, "element " + std::to_string(x) + " of " + name() +
                                               " is not a unit");
  }
  return r;
}

ElemIndex Ring::pow(ElemIndex x, std::uint64_t e) const {
  ElemIndex result = 1;
  while (e > 0) {
    if (e & 1u) result = mul(result, x);
    x = mul(x, x);
    e >>= 1u;
  }
  return result;
}

bool Ring::is_unit(ElemIndex x) const { return x % data_->q != 0; }
bool Ring::in_maximal_ideal(ElemIndex x) const { return x % data_->q == 0; }

Ring Ring::residue_field() const {
  if (is_field()) return *this;
  return Ring(data_->residue);
}

std::vector<std::uint32_t> Ring::coordinates(ElemIndex x) const {
  switch (family()) {
    case RingFamily::IntegersModPrimePower:
      return {x};
    case RingFamily::Field:
      return to_digits(x, data_->field.p, data_->field.n);
    case RingFamily::TruncatedPolynomial:
      return to_digits(x, data_->q, data_->k);
  }
  return {};
}

ElemIndex Ring::from_coordinates(const std::vector<std::uint32_t>& coords) const {
  switch (family()) {
    case RingFamily::IntegersModPrimePower:
      if (coords.size() != 1 || coords[0] >= size()) {
        throw Error(ErrorCode::ParseError, "integer out of range for " + name());
      }
      return coords[0];
    case RingFamily::Field:
    case RingFamily::TruncatedPolynomial: {
      const std::uint32_t base = is_field() ? data_->field.p : data_->q;
      const std::uint32_t len = is_field() ? data_->field.n : data_->k;
      if (coords.size() > len ||
          std::any_of(coords.begin(), coords.end(), [base](std::uint32_t c) { return c >= base; })) {
        throw Error(ErrorCode::ParseError, "coordinates out of range for " + name());
      }
      return from_digits(coords, base);
    }
  }
  return 0;
}

Element Ring::element(ElemIndex x) const {
  if (x >= size()) {
    throw Error(ErrorCode::ParseError, "index " + std::to_string(x) + " out of range for " + name());
  }
  return Element(*this, x);
}

Element Ring::operator()(std::int64_t v) const { return Element(*this, from_int(v)); }

bool Ring::operator==(const Ring& other) const {
  return data_ == other.data_ || data_->name == other.data_->name;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a != b) {
    throw Error(ErrorCode::MixedRings, "operands belong to " + a.name() + " and " + b.name());
  }
}

Element::Element(Ring ring, ElemIndex index) : ring_(std::move(ring)), index_(index) {}

Element Element::operator+(const Element& o) const {
  require_same_ring(ring_, o.ring_);
  return Element(ring_, ring_.add(index_, o.index_));
}

Element Element::operator-(const Element& o) const {
  require_same_ring(ring_, o.ring_);
  return Element(ring_, ring_.sub(index_, o.index_));
}

Element Element::operator*(const Element& o) const {
  require_same_ring(ring_, o.ring_);
  return Element(ring_, ring_.mul(index_, o.index_));
}

Element Element::operator-() const { return Element(ring_, ring_.neg(index_)); }
Element Element::inv() const { return Element(ring_, ring_.inv(index_)); }
Element Element::pow(std::uint64_t e) const { return Element(ring_, ring_.pow(index_, e)); }

Element Element::residue() const {
  return Element(ring_.residue_field(), ring_.residue(index_));
}

Element lift(const Element& a, const Ring& ring) {
  require_same_ring(a.ring(), ring.residue_field());
  return Element(ring, ring.lift(a.index()));
}

}  // namespace permpoly

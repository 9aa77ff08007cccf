#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's arithmetic; everything works on plain integers.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace permpoly::oracle {

inline std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

inline std::int64_t powmod(std::int64_t base, std::uint64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  base = mod(base, m);
  while (e > 0) {
    if (e & 1u) r = r * base % m;
    base = base * base % m;
    e >>= 1u;
  }
  return r;
}

/// Evaluates sum c_i x^i mod m by direct powers (no Horner).
inline std::int64_t eval_mod(const std::vector<std::int64_t>& coeffs, std::int64_t x,
                             std::int64_t m) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc = mod(acc + coeffs[i] * powmod(x, i, m), m);
  return acc;
}

/// Schoolbook product of polynomials over F_p reduced modulo a monic modulus.
inline std::vector<std::int64_t> mulmod_poly(const std::vector<std::int64_t>& a,
                                             const std::vector<std::int64_t>& b,
                                             const std::vector<std::int64_t>& modulus,
                                             std::int64_t p) {
  std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], p);
  }
  const std::size_t n = modulus.size() - 1;
  for (std::size_t d = prod.size(); d-- > n;) {
    const std::int64_t lead = prod[d];
    for (std::size_t i = 0; i <= n; ++i) prod[d - n + i] = mod(prod[d - n + i] - lead * modulus[i], p);
  }
  prod.resize(n);
  return prod;
}

/// Monic polynomials of degree n over F_p with no root in F_p.
inline std::vector<std::vector<std::int64_t>> rootless_monic(std::int64_t p, std::size_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::int64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= p;
  for (std::int64_t code = 0; code < count; ++code) {
    std::vector<std::int64_t> c(n + 1, 1);
    std::int64_t v = code;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = v % p;
      v /= p;
    }
    bool has_root = false;
    for (std::int64_t x = 0; x < p; ++x) has_root |= eval_mod(c, x, p) == 0;
    if (!has_root) out.push_back(c);
  }
  return out;
}

/// Number of polynomial functions on Z/n: prod_k n / gcd(n, k!).
inline std::uint64_t polynomial_function_count_zmod(std::int64_t n) {
  std::uint64_t count = 1;
  std::int64_t fact = 1;
  for (std::int64_t k = 0;; ++k) {
    if (k > 0) fact *= k;
    const std::int64_t g = std::gcd(n, fact);
    if (g == n) break;
    count *= static_cast<std::uint64_t>(n / g);
  }
  return count;
}

/// Every polynomial function on Z/n, enumerated in the falling-factorial basis
/// sum_k c_k x(x-1)...(x-k+1) with 0 <= c_k < n / gcd(n, k!), which lists each
/// function exactly once.
inline std::set<std::vector<std::int64_t>> polynomial_functions_zmod(std::int64_t n) {
  std::vector<std::int64_t> ranges;
  std::int64_t fact = 1;
  for (std::int64_t k = 0;; ++k) {
    if (k > 0) fact *= k;
    const std::int64_t g = std::gcd(n, fact);
    if (g == n) break;
    ranges.push_back(n / g);
  }
  std::vector<std::vector<std::int64_t>> falling(ranges.size(), std::vector<std::int64_t>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    std::int64_t v = 1;
    for (std::size_t k = 0; k < ranges.size(); ++k) {
      falling[k][x] = v;
      v = mod(v * (x - static_cast<std::int64_t>(k)), n);
    }
  }
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(ranges.size(), 0);
  while (true) {
    std::vector<std::int64_t> f(n, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      for (std::int64_t x = 0; x < n; ++x) f[x] = mod(f[x] + c[k] * falling[k][x], n);
    }
    out.insert(f);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == ranges[i]) c[i++] = 0;
    if (i == c.size()) break;
  }
  return out;
}

inline bool is_bijection(const std::vector<std::int64_t>& f) {
  std::set<std::int64_t> s(f.begin(), f.end());
  return s.size() == f.size();
}

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Sign by counting inversions.
inline int inversion_sign(const std::vector<std::uint32_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace permpoly::oracle

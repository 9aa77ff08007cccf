#include "permpoly/group.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace permpoly {

std::size_t TableSet::hash_row(const ElemIndex* row) const {
  // FNV-1a over the entries, then a final avalanche.
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < width_; ++i) {
    h ^= row[i];
    h *= 1099511628211ull;
  }
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 32;
  return static_cast<std::size_t>(h);
}

std::size_t TableSet::find_slot(const ElemIndex* row, std::size_t hash) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash & mask;; s = (s + 1) & mask) {
    const std::size_t idx = slots_[s];
    if (idx == kEmpty) return s;
    if (std::memcmp(this->row(idx), row, width_ * sizeof(ElemIndex)) == 0) return s;
  }
}

void TableSet::grow() {
  const std::size_t capacity = slots_.empty() ? 64 : slots_.size() * 2;
  slots_.assign(capacity, kEmpty);
  for (std::size_t i = 0; i < count_; ++i) {
    slots_[find_slot(row(i), hash_row(row(i)))] = i;
  }
}

bool TableSet::insert(const ElemIndex* table) {
  if ((count_ + 1) * 2 > slots_.size()) grow();
  const std::size_t s = find_slot(table, hash_row(table));
  if (slots_[s] != kEmpty) return false;
  if (count_ >= kMaxClosureSize) {
    throw Error(ErrorCode::RingTooLarge,
                "closure exceeds " + std::to_string(kMaxClosureSize) + " tables");
  }
  data_.insert(data_.end(), table, table + width_);
  slots_[s] = count_++;
  return true;
}

bool TableSet::contains(const ElemIndex* table) const {
  if (slots_.empty()) return false;
  return slots_[find_slot(table, hash_row(table))] != kEmpty;
}

std::vector<ElemIndex> TableSet::at(std::size_t i) const {
  return std::vector<ElemIndex>(row(i), row(i) + width_);
}

GroupClosure::GroupClosure(Ring ring, std::vector<PermutationTable> generators, TableSet elements)
    : ring_(std::move(ring)), generators_(std::move(generators)), elements_(std::move(elements)) {}

bool GroupClosure::contains(const PermutationTable& p) const {
  return p.ring() == ring_ && elements_.contains(p.image());
}

PermutationTable GroupClosure::element(std::size_t i) const {
  return PermutationTable(ring_, elements_.at(i));
}

GroupClosure generated_subgroup(const Ring& ring, const std::vector<PermutationTable>& gens) {
  for (const auto& g : gens) require_same_ring(ring, g.ring());
  const std::size_t n = ring.size();
  TableSet elements(n);
  elements.insert(PermutationTable::identity(ring).image());
  // In a finite group the monoid generated by gens is already a group.
  std::vector<ElemIndex> product(n);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      const ElemIndex* current = elements.row(i);
      for (std::size_t x = 0; x < n; ++x) product[x] = g(current[x]);
      elements.insert(product);
    }
  }
  return GroupClosure(ring, gens, std::move(elements));
}

TableSet all_polynomial_functions(const Ring& ring, std::uint32_t bound) {
  const std::uint32_t n = ring.size();
  if (n > bound) {
    throw Error(ErrorCode::RingTooLarge, ring.name() + " has " + std::to_string(n) +
                                             " elements, above the bound " + std::to_string(bound));
  }
  // Products of the identity and constants are the scaled monomials c x^i,
  // whose functions are eventually periodic in i; sums of those close the set.
  TableSet monomials(n);
  std::vector<ElemIndex> power(n, ring.one());
  while (monomials.insert(power)) {
    for (ElemIndex x = 0; x < n; ++x) power[x] = ring.mul(power[x], x);
  }
  TableSet generators(n);
  std::vector<ElemIndex> scaled(n);
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const ElemIndex* m = monomials.row(i);
    for (ElemIndex c = 1; c < n; ++c) {
      for (ElemIndex x = 0; x < n; ++x) scaled[x] = ring.mul(c, m[x]);
      generators.insert(scaled);
    }
  }
  TableSet functions(n);
  functions.insert(std::vector<ElemIndex>(n, ring.zero()));
  std::vector<ElemIndex> sum(n);
  for (std::size_t i = 0; i < functions.size(); ++i) {
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const ElemIndex* f = functions.row(i);
      const ElemIndex* g = generators.row(j);
      for (ElemIndex x = 0; x < n; ++x) sum[x] = ring.add(f[x], g[x]);
      functions.insert(sum);
    }
  }
  return functions;
}

GroupClosure polynomial_permutation_group(const Ring& ring, std::uint32_t bound) {
  const TableSet functions = all_polynomial_functions(ring, bound);
  TableSet perms(ring.size());
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const std::vector<ElemIndex> f = functions.at(i);
    if (FunctionTable{ring, f}.is_bijective()) perms.insert(f);
  }
  return GroupClosure(ring, {}, std::move(perms));
}

}  // namespace permpoly

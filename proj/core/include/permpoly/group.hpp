#pragma once

#include <cstdint>
#include <vector>

#include "permpoly/permutation.hpp"
#include "permpoly/polynomial.hpp"
#include "permpoly/ring.hpp"

namespace permpoly {

/// Default ring-size bound for function and group enumeration.
inline constexpr std::uint32_t kDefaultEnumerationBound = 100;
/// Hard cap on the number of stored tables in any closure.
inline constexpr std::size_t kMaxClosureSize = 20'000'000;

/// Insertion-ordered hash set of equal-length index tables, stored flat with
/// an open-addressing index.
class TableSet {
 public:
  explicit TableSet(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return count_; }

  /// Returns true when the table was not present before.
  bool insert(const ElemIndex* table);
  bool insert(const std::vector<ElemIndex>& table) { return insert(table.data()); }
  bool contains(const ElemIndex* table) const;
  bool contains(const std::vector<ElemIndex>& table) const { return contains(table.data()); }
  std::vector<ElemIndex> at(std::size_t i) const;
  const ElemIndex* row(std::size_t i) const { return data_.data() + i * width_; }

 private:
  static constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);

  std::size_t hash_row(const ElemIndex* row) const;
  /// Slot holding an equal row, or the empty slot where it would go.
  std::size_t find_slot(const ElemIndex* row, std::size_t hash) const;
  void grow();

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<ElemIndex> data_;
  std::vector<std::size_t> slots_;
};

/// A finite permutation group given by explicit enumeration.
class GroupClosure {
 public:
  GroupClosure(Ring ring, std::vector<PermutationTable> generators, TableSet elements);

  const Ring& ring() const { return ring_; }
  const std::vector<PermutationTable>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const PermutationTable& p) const;
  PermutationTable element(std::size_t i) const;
  const TableSet& elements() const { return elements_; }

 private:
  Ring ring_;
  std::vector<PermutationTable> generators_;
  TableSet elements_;
};

/// Smallest subgroup of S_R containing the generators, by breadth-first
/// multiplication. Throws MixedRings; an empty list yields the trivial group
/// only when a ring is supplied.
GroupClosure generated_subgroup(const Ring& ring, const std::vector<PermutationTable>& gens);

/// Every function R -> R induced by a polynomial over R: the closure of the
/// identity and the constants under pointwise + and *. Throws RingTooLarge.
TableSet all_polynomial_functions(const Ring& ring,
                                  std::uint32_t bound = kDefaultEnumerationBound);

/// P(R): the bijective polynomial functions. Throws RingTooLarge.
GroupClosure polynomial_permutation_group(const Ring& ring,
                                          std::uint32_t bound = kDefaultEnumerationBound);

}  // namespace permpoly

#pragma once

#include <cstdint>
#include <vector>

#include "permpoly/polynomial.hpp"
#include "permpoly/ring.hpp"

namespace permpoly {

/// A bijection of a ring's elements, stored as images of the enumeration.
class PermutationTable {
 public:
  /// Throws NotBijective.
  PermutationTable(Ring ring, std::vector<ElemIndex> image);
  /// Throws NotBijective.
  explicit PermutationTable(const FunctionTable& table);

  static PermutationTable identity(const Ring& ring);
  static PermutationTable of(const Polynomial& f) { return PermutationTable(function_table(f)); }

  const Ring& ring() const { return ring_; }
  const std::vector<ElemIndex>& image() const { return image_; }
  std::size_t size() const { return image_.size(); }
  ElemIndex operator()(ElemIndex x) const { return image_[x]; }

  PermutationTable inverse() const;

  /// +1 or -1, computed as (-1)^(n - #cycles).
  int sign() const;
  /// Cycle lengths in non-increasing order; they sum to |R|.
  std::vector<std::uint32_t> cycle_type() const;
  /// Disjoint cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<ElemIndex>> cycles() const;

  bool operator==(const PermutationTable& o) const { return ring_ == o.ring_ && image_ == o.image_; }
  bool operator!=(const PermutationTable& o) const { return !(*this == o); }

 private:
  Ring ring_;
  std::vector<ElemIndex> image_;
};

/// (outer o inner)(x) = outer(inner(x)). Throws MixedRings.
PermutationTable compose(const PermutationTable& outer, const PermutationTable& inner);

}  // namespace permpoly

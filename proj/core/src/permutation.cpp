#include "permpoly/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace permpoly {

PermutationTable::PermutationTable(Ring ring, std::vector<ElemIndex> image)
    : ring_(std::move(ring)), image_(std::move(image)) {
  if (!FunctionTable{ring_, image_}.is_bijective()) {
    throw Error(ErrorCode::NotBijective, "table is not a bijection of " + ring_.name());
  }
}

PermutationTable::PermutationTable(const FunctionTable& table)
    : PermutationTable(table.ring, table.map) {}

PermutationTable PermutationTable::identity(const Ring& ring) {
  std::vector<ElemIndex> image(ring.size());
  std::iota(image.begin(), image.end(), ElemIndex{0});
  return PermutationTable(ring, std::move(image));
}

PermutationTable PermutationTable::inverse() const {
  std::vector<ElemIndex> inv(image_.size());
  for (ElemIndex x = 0; x < image_.size(); ++x) inv[image_[x]] = x;
  return PermutationTable(ring_, std::move(inv));
}

std::vector<std::vector<ElemIndex>> PermutationTable::cycles() const {
  std::vector<std::vector<ElemIndex>> result;
  std::vector<bool> seen(image_.size(), false);
  for (ElemIndex start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<ElemIndex> cycle;
    for (ElemIndex x = start; !seen[x]; x = image_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<std::uint32_t> PermutationTable::cycle_type() const {
  std::vector<std::uint32_t> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<std::uint32_t>(c.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int PermutationTable::sign() const {
  return (image_.size() - cycles().size()) % 2 == 0 ? 1 : -1;
}

PermutationTable compose(const PermutationTable& outer, const PermutationTable& inner) {
  require_same_ring(outer.ring(), inner.ring());
  std::vector<ElemIndex> image(inner.size());
  for (ElemIndex x = 0; x < image.size(); ++x) image[x] = outer(inner(x));
  return PermutationTable(outer.ring(), std::move(image));
}

}  // namespace permpoly

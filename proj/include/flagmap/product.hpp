#ifndef FLAGMAP_PRODUCT_HPP
#define FLAGMAP_PRODUCT_HPP

#include <span>
#include <utility>
#include <vector>

#include "flagmap/quotient.hpp"

namespace flagmap {

inline constexpr std::size_t default_max_product_flags = 1'000'000;

struct ProductWitness {
  RootedMap product;
  MapMorphism left;
  MapMorphism right;
  // (left flag, right flag) for every product flag; the root is flag 0.
  std::vector<std::pair<Point, Point>> pairs;
};

ProductWitness parallel_product(const RootedMap& m, const RootedMap& n,
                                std::size_t max_flags = default_max_product_flags);

// Left fold of parallel products. Factors rooted-isomorphic to an earlier
// one are skipped since they do not change the result.
RootedMap parallel_product_all(std::span<const RootedMap> maps,
                               std::size_t max_flags = default_max_product_flags);

// Right regular action of Mon(m) on itself, rooted at the identity.
RootedMap smallest_reflexible_cover(const RootedMap& m, std::size_t max_elements = 100'000);

// Product of the re-rootings of m at every flag, in ascending flag order.
RootedMap total_parallel_product(const RootedMap& m,
                                 std::size_t max_flags = default_max_product_flags);

// Product over the triality class; throws NotReflexible for other inputs.
RootedMap totally_symmetric_cover(const RootedMap& m,
                                  std::size_t max_flags = default_max_product_flags);

}  // namespace flagmap

#endif  // FLAGMAP_PRODUCT_HPP

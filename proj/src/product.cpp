#include "flagmap/product.hpp"

#include <unordered_map>

namespace flagmap {

ProductWitness parallel_product(const RootedMap& m, const RootedMap& n, std::size_t max_flags) {
  const std::uint64_t width = n.size();
  std::unordered_map<std::uint64_t, Point> index;
  std::vector<std::pair<Point, Point>> pairs{{m.root(), n.root()}};
  index.emplace(std::uint64_t{m.root()} * width + n.root(), 0);
  std::vector<Point> img[3];
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    for (int g = 0; g < 3; ++g) {
      const Point c = m.generator(g)[a];
      const Point d = n.generator(g)[b];
      auto [it, fresh] = index.emplace(std::uint64_t{c} * width + d, static_cast<Point>(pairs.size()));
      if (fresh) {
        if (pairs.size() >= max_flags)
          throw Error(ErrorKind::BoundExceeded, "parallel product exceeds the flag bound");
        pairs.emplace_back(c, d);
      }
      img[g].push_back(it->second);
    }
  }
  RootedMap product(Permutation(std::move(img[0])), Permutation(std::move(img[1])),
                    Permutation(std::move(img[2])), 0);
  std::vector<Point> left(pairs.size()), right(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    left[i] = pairs[i].first;
    right[i] = pairs[i].second;
  }
  return ProductWitness{product, MapMorphism{product, m, std::move(left)},
                        MapMorphism{product, n, std::move(right)}, std::move(pairs)};
}

RootedMap parallel_product_all(std::span<const RootedMap> maps, std::size_t max_flags) {
  if (maps.empty()) throw Error(ErrorKind::InvalidArgument, "no maps to multiply");
  RootedMap acc = maps.front();
  for (std::size_t i = 1; i < maps.size(); ++i) {
    bool repeated = false;
    for (std::size_t j = 0; j < i && !repeated; ++j) repeated = isomorphic(maps[j], maps[i]);
    if (!repeated) acc = parallel_product(acc, maps[i], max_flags).product;
  }
  return acc;
}

RootedMap smallest_reflexible_cover(const RootedMap& m, std::size_t max_elements) {
  GroupLimits limits;
  limits.max_elements = max_elements;
  limits.max_degree = std::max(limits.max_degree, m.size());
  const PermGroup g = m.monodromy(limits);
  if (g.order() > max_elements)
    throw Error(ErrorKind::BoundExceeded,
                "monodromy group of order " + std::to_string(g.order()) + " exceeds the element bound");

  std::vector<Permutation> elems{Permutation::identity(m.size())};
  std::unordered_map<Permutation, Point, PermutationHash> index{{elems.front(), 0}};
  std::vector<Point> img[3];
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s = 0; s < 3; ++s) {
      Permutation y = elems[i] * m.generator(s);
      auto [it, fresh] = index.emplace(y, static_cast<Point>(elems.size()));
      if (fresh) elems.push_back(std::move(y));
      img[s].push_back(it->second);
    }
  }
  return RootedMap(Permutation(std::move(img[0])), Permutation(std::move(img[1])),
                   Permutation(std::move(img[2])), 0);
}

RootedMap total_parallel_product(const RootedMap& m, std::size_t max_flags) {
  std::vector<RootedMap> reroots;
  reroots.reserve(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) reroots.push_back(m.reroot(static_cast<Point>(x)));
  return parallel_product_all(reroots, max_flags);
}

RootedMap totally_symmetric_cover(const RootedMap& m, std::size_t max_flags) {
  if (!is_reflexible(m)) throw Error(ErrorKind::NotReflexible, "map is not reflexible");
  const auto members = triality_members(m);
  return parallel_product_all(members, max_flags);
}

}  // namespace flagmap

#ifndef FLAGMAP_TESTS_SUPPORT_HPP
#define FLAGMAP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flagmap/decomp.hpp"
#include "flagmap/degen.hpp"
#include "flagmap/ettype.hpp"
#include "flagmap/fpres.hpp"
#include "flagmap/product.hpp"
#include "flagmap/quotient.hpp"

namespace testing {

using namespace flagmap;

inline RootedMap from_presentation(const std::string& text, std::size_t max_cosets = 10000) {
  return regular_map(todd_coxeter(parse_presentation(text), max_cosets).action);
}

// K4 on the sphere.
inline RootedMap tetrahedron() {
  return from_presentation("gens t l r\nrel t^2\nrel l^2\nrel r^2\nrel (t*l)^2\nrel (r*t)^3\nrel (r*l)^3\n");
}

inline const char* k44_presentation() {
  return "gens t l r\nrel t^2\nrel l^2\nrel r^2\nrel (t*l)^2\nrel (r*t)^4\nrel (r*l)^4\nrel (t*l*r)^4\n";
}

// The order-64 group of the K4,4 torus map, relabelled for the type-1 construction.
inline LabeledGenerators k44_group() {
  const Enumeration e = todd_coxeter(parse_presentation(k44_presentation()));
  return LabeledGenerators({"tau", "lambda", "theta1"}, e.action.generators);
}

inline RootedMap k44_torus() { return construct_from_group("1", k44_group()).map; }

inline RootedMap dm(int index, std::uint64_t k = 0) {
  if (index >= 6 && index <= 8) return build_degenerate(index, k);
  return build_degenerate(index);
}

inline RootedMap epsilon(std::uint64_t k) { return build_slightly_degenerate(SlightFamily::Epsilon, k); }
inline RootedMap delta(std::uint64_t k) { return build_slightly_degenerate(SlightFamily::Delta, k); }

// The 16-flag 4-cycle on the sphere.
inline RootedMap c4_sphere() { return epsilon(4); }

// Automorphism quotient of the C4 map by the rotation about the root vertex.
inline MapMorphism path_projection() {
  const RootedMap c4 = c4_sphere();
  const auto rot = automorphism_to(c4, c4.act(c4.root(), "RT"));
  return automorphism_quotient(c4, PermGroup(c4.size(), {*rot}));
}

inline RootedMap path_quotient() { return path_projection().target; }

// A random map: `edges` blocks of four flags with T, L fixed inside each block,
// R a random involution, restricted to the component of flag 0.
inline RootedMap random_map(std::mt19937& rng, std::size_t edges, double fix_probability = 0.1) {
  const std::size_t n = 4 * edges;
  std::vector<Point> t(n), l(n), r(n);
  for (std::size_t e = 0; e < edges; ++e) {
    const Point b = static_cast<Point>(4 * e);
    t[b] = b + 1, t[b + 1] = b, t[b + 2] = b + 3, t[b + 3] = b + 2;
    l[b] = b + 2, l[b + 2] = b, l[b + 1] = b + 3, l[b + 3] = b + 1;
  }
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::bernoulli_distribution fix(fix_probability);
  for (std::size_t i = 0; i < n;) {
    if (i + 1 == n || fix(rng)) {
      r[pts[i]] = pts[i];
      ++i;
    } else {
      r[pts[i]] = pts[i + 1];
      r[pts[i + 1]] = pts[i];
      i += 2;
    }
  }
  // Keep the component of flag 0.
  std::vector<std::int64_t> index(n, -1);
  std::vector<Point> order{0};
  index[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto* g : {&t, &l, &r}) {
      const Point y = (*g)[order[i]];
      if (index[y] < 0) {
        index[y] = static_cast<std::int64_t>(order.size());
        order.push_back(y);
      }
    }
  auto restrict = [&](const std::vector<Point>& g) {
    std::vector<Point> out(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) out[i] = static_cast<Point>(index[g[order[i]]]);
    return Permutation(out);
  };
  return RootedMap(restrict(t), restrict(l), restrict(r), 0);
}

// Small maps of every flavour: table families, platonic, non-reflexible.
inline std::vector<RootedMap> sample_maps() {
  std::vector<RootedMap> out;
  for (int i = 1; i <= 12; ++i) {
    if (i >= 6 && i <= 8) {
      for (std::uint64_t k : {2, 3, 4, 6}) out.push_back(dm(i, k));
    } else {
      out.push_back(dm(i));
    }
  }
  for (std::uint64_t k = 2; k <= 6; ++k) {
    out.push_back(epsilon(k));
    out.push_back(delta(k));
  }
  out.push_back(tetrahedron());
  out.push_back(path_quotient());
  std::mt19937 rng(7);
  for (int i = 0; i < 8; ++i) out.push_back(random_map(rng, 2 + i % 3));
  return out;
}

}  // namespace testing

#endif  // FLAGMAP_TESTS_SUPPORT_HPP

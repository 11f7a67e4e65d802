#ifndef FLAGMAP_MAP_HPP
#define FLAGMAP_MAP_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagmap/perm.hpp"

namespace flagmap {

// A rooted map: flags acted on by involutions T, L, R with (TL)^2 = 1,
// a transitive monodromy group and a distinguished root flag.
class RootedMap {
 public:
  // Validates every axiom; throws InvariantViolation naming the one that fails.
  RootedMap(Permutation t, Permutation l, Permutation r, Point root = 0);

  std::size_t size() const noexcept { return t_.degree(); }
  const Permutation& t() const noexcept { return t_; }
  const Permutation& l() const noexcept { return l_; }
  const Permutation& r() const noexcept { return r_; }
  // 0 = T, 1 = L, 2 = R.
  const Permutation& generator(int i) const noexcept { return i == 0 ? t_ : i == 1 ? l_ : r_; }
  Point root() const noexcept { return root_; }

  // Labels "t", "l", "r".
  LabeledGenerators labeled() const;
  PermGroup monodromy(GroupLimits limits = {}) const;

  // Product of the letters of `word` (T, L, R in either case), left to right.
  Permutation word(std::string_view word) const;
  Point act(Point x, std::string_view word) const;

  RootedMap reroot(Point flag) const;

  friend bool operator==(const RootedMap&, const RootedMap&) = default;

 private:
  Permutation t_, l_, r_;
  Point root_;
};

RootedMap load_map(std::string_view text);
// Writes the canonical form (see canonical()).
std::string save_map(const RootedMap& m);
// Flags renumbered by breadth-first search from the root over T, L, R; the
// root becomes flag 0.
RootedMap canonical(const RootedMap& m);

struct CellStructure {
  Orbits vertices;  // <T, R>
  Orbits edges;     // <T, L>
  Orbits faces;     // <L, R>
  Orbits petrie;    // <TL, R>
};

enum class Orientability { Orientable, NonOrientable, BoundaryDegenerate };
std::string_view to_string(Orientability o);

struct SurfaceInfo {
  CellStructure cells;
  Orientability orientability = Orientability::Orientable;
  // Orbit count of <RT, RL>, reported even for degenerate maps.
  bool orientable_double_cover = true;
  long long euler_characteristic = 0;
  // (2 - chi)/2 when orientable, -(2 - chi) otherwise. Advisory when degenerate.
  long long signed_genus = 0;
};

SurfaceInfo cells_and_surface(const RootedMap& m);
// True when any of T, L, R, TL has a fixed point.
bool boundary_degenerate(const RootedMap& m);

RootedMap dual(const RootedMap& m);
RootedMap petrie(const RootedMap& m);

// M, Du, Pe, Pe(Du), Du(Pe), Du(Pe(Du)) in this order.
std::array<RootedMap, 6> triality_members(const RootedMap& m);

struct GenusSymbol {
  std::array<long long, 6> genus{};
  // Entry i is the 1-based index of the first member isomorphic to member i.
  std::array<int, 6> iso{};
  int hexagonal = 0;
  bool advisory = false;  // some member is boundary-degenerate
};

GenusSymbol genus_symbol(const RootedMap& m);
// Pairwise non-isomorphic members of the triality class.
std::vector<RootedMap> triality_class(const RootedMap& m);

enum class IsoMode { Rooted, Generalized };

// Flag bijection from m to n, as a permutation of {0..size-1}.
std::optional<Permutation> isomorphism(const RootedMap& m, const RootedMap& n,
                                       IsoMode mode = IsoMode::Rooted);
bool isomorphic(const RootedMap& m, const RootedMap& n, IsoMode mode = IsoMode::Rooted);

// The automorphism sending the root to d, when one exists.
std::optional<Permutation> automorphism_to(const RootedMap& m, Point d);
std::vector<Permutation> automorphisms(const RootedMap& m);
PermGroup automorphism_group(const RootedMap& m);
bool is_reflexible(const RootedMap& m);

// Roots id, id.T, id.L, id.TL in this order.
std::array<RootedMap, 4> simple_reroots(const RootedMap& m);

}  // namespace flagmap

#endif  // FLAGMAP_MAP_HPP

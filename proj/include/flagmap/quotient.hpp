#ifndef FLAGMAP_QUOTIENT_HPP
#define FLAGMAP_QUOTIENT_HPP

#include <string_view>
#include <vector>

#include "flagmap/map.hpp"

namespace flagmap {

// A morphism of rooted maps, stored by its flag images. The group
// epimorphism is determined by the generators and never stored.
struct MapMorphism {
  RootedMap source;
  RootedMap target;
  std::vector<Point> flag_map;
};

// Onto, root to root, and compatible with T, L, R on every flag.
bool is_valid_morphism(const MapMorphism& phi);

// Quotient of m by a block system given as a flag partition. Throws
// InvariantViolation when the partition is not preserved by T, L, R.
MapMorphism quotient_by_partition(const RootedMap& m, const std::vector<std::uint32_t>& block_of);

// Flags are the images of root.K under Mon(m). Requires the root stabilizer
// to lie in K (StabilizerNotContained otherwise) and K <= Mon(m).
MapMorphism k_quotient(const RootedMap& m, const PermGroup& k);

// Flags are the orbits of H, which must be normal in Mon(m).
MapMorphism monodromy_quotient(const RootedMap& m, const PermGroup& h);

// Flags are the orbits of A, whose generators must commute with T, L, R.
MapMorphism automorphism_quotient(const RootedMap& m, const PermGroup& a);

bool is_automorphism(const RootedMap& m, const Permutation& a);

// Automorphism of proj.target induced by an automorphism of proj.source.
Permutation project_automorphism(const MapMorphism& proj, const Permutation& a);

struct KQuotientWitness {
  PermGroup k;
  // Rooted isomorphism from k_quotient(source, k).target to phi.target.
  Permutation isomorphism;
};

KQuotientWitness morphism_to_k_quotient(const MapMorphism& phi);

// Comma-separated words over T, L, R, e.g. "rt,lrl". "1" is the identity.
std::vector<Permutation> parse_subgroup_words(const RootedMap& m, std::string_view text);

}  // namespace flagmap

#endif  // FLAGMAP_QUOTIENT_HPP

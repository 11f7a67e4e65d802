#ifndef FLAGMAP_DECOMP_HPP
#define FLAGMAP_DECOMP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagmap/map.hpp"

namespace flagmap {

enum class Verdict { Decomposable, Indecomposable, Unknown };
std::string_view to_string(Verdict v);

struct DecompositionVerdict {
  Verdict verdict = Verdict::Unknown;
  // Witness normal subgroups, of Mon (or of Aut for the edge-transitive test).
  std::optional<std::pair<PermGroup, PermGroup>> witnesses;
  std::optional<std::pair<RootedMap, RootedMap>> factors;
  // Rooted isomorphism from the product of the factors to the input.
  std::optional<Permutation> certificate;
  std::size_t minimal_normal_count = 0;
  std::string note;  // the exceeded bound for Unknown verdicts

  bool decomposable() const noexcept { return verdict == Verdict::Decomposable; }
};

// Searches ordered pairs of distinct minimal normal subgroups H1, H2 of
// Mon(m) with both non-transitive and G_id H1 ∩ G_id H2 = G_id.
DecompositionVerdict decomposability_general(const RootedMap& m, GroupLimits limits = {});

// Throws NotReflexible. Decomposable iff Mon(m) has two minimal normal subgroups.
DecompositionVerdict decomposability_reflexible(const RootedMap& m, GroupLimits limits = {});

// Throws NotEdgeTransitive. Decomposable iff Aut(m) has two minimal normal
// subgroups; witnesses are subgroups of Aut. Factor maps only for reflexible input.
DecompositionVerdict decomposability_edge_transitive(const RootedMap& m, GroupLimits limits = {});

struct Decomposition {
  RootedMap left;
  RootedMap right;
  Permutation certificate;
};

// Throws InvalidArgument when m is not decomposable, BoundExceeded when
// undecided, VerificationFailed when a certificate does not check.
Decomposition decompose_with_certificate(const RootedMap& m, GroupLimits limits = {});

}  // namespace flagmap

#endif  // FLAGMAP_DECOMP_HPP

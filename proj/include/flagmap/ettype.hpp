#ifndef FLAGMAP_ETTYPE_HPP
#define FLAGMAP_ETTYPE_HPP

#include <array>
#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagmap/map.hpp"

namespace flagmap {

// The automorphisms around the root edge, in this fixed order:
// sigma_x1, sigma_x2, sigma_f1, sigma_f2, gamma1, gamma2,
// theta1, theta2, theta3, theta4, tau, lambda, phi.
enum class Named {
  SigmaX1, SigmaX2, SigmaF1, SigmaF2, Gamma1, Gamma2,
  Theta1, Theta2, Theta3, Theta4, Tau, Lambda, Phi,
};
inline constexpr std::size_t named_count = 13;
using NamedSet = std::bitset<named_count>;

std::string_view name_of(Named a);        // "sigma_x1", "theta3", "tau", ...
std::string_view defining_word(Named a);  // "rt", "ltrl", ...
std::optional<Named> named_from_label(std::string_view label);
std::string format_named_set(const NamedSet& s);

// Named automorphisms alpha_W with an automorphism taking root to root.W.
NamedSet named_automorphisms_present(const RootedMap& m);

// Labels "1", "2", "2*", "2P", "2ex", "2*ex", "2Pex", "3", "4", "4*", "4P", "5", "5*", "5P".
extern const std::array<std::string_view, 14> type_labels;
bool is_type_label(std::string_view label);
NamedSet required_set(std::string_view type);
// T <= T' iff A_T is contained in A_T'.
bool type_precedes(std::string_view t, std::string_view u);
std::string type_dual(std::string_view t);
std::string type_petrie(std::string_view t);

// Aut(m) transitive on the edges <T, L>.
bool is_edge_transitive(const RootedMap& m);

struct TypeResult {
  std::string label;
  int rooting = 0;  // 0..3 for root id, id.T, id.L, id.TL
  RootedMap rooted;
  NamedSet present;
};

// Tries the simple re-rootings in order and returns the first whose named
// automorphisms are exactly a row of the type table.
std::optional<TypeResult> classify_type(const RootedMap& m);

struct MapSymbol {
  std::vector<std::uint64_t> a, b, c;  // one entry, or two when the orbits split
  bool advisory = false;               // degenerate map, symbol not certified
  std::string to_string() const;       // "<a1,a2;b;c>"
};

// Throws NotEdgeTransitive; with strict, DegenerateSymbol for degenerate maps.
MapSymbol map_symbol(const RootedMap& m, bool strict = false);
// The parity side conditions of `type` evaluated on `s`.
bool symbol_conditions_hold(std::string_view type, const MapSymbol& s);

struct ConstructionReport {
  RootedMap map;
  std::string requested;
  std::optional<std::string> detected;
  bool exact = false;  // detected == requested
  NamedSet present;
};

// Generator labels required for a constructible type: 1, 2, 2ex, 3, 4, 5.
std::vector<std::string> construction_labels(std::string_view type);

ConstructionReport construct_from_group(std::string_view type, const LabeledGenerators& g,
                                        std::size_t max_elements = 100'000);

}  // namespace flagmap

#endif  // FLAGMAP_ETTYPE_HPP

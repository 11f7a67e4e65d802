#ifndef FLAGMAP_DEGEN_HPP
#define FLAGMAP_DEGEN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "flagmap/fpres.hpp"
#include "flagmap/map.hpp"

namespace flagmap {

// Orders of T, L, R, TL, RT, RL, TLR.
struct ContextVector {
  std::array<std::uint64_t, 7> e{1, 1, 1, 1, 1, 1, 1};

  std::uint64_t operator[](std::size_t i) const { return e[i]; }
  std::uint64_t& operator[](std::size_t i) { return e[i]; }
  std::string to_string() const;  // "(2,1,2,2,5,2,5)"

  friend bool operator==(const ContextVector&, const ContextVector&) = default;
  friend auto operator<=>(const ContextVector&, const ContextVector&) = default;
};

// Words W1..W7 in the labels t, l, r.
extern const std::array<std::string_view, 7> context_words;

ContextVector context_vector(const RootedMap& m);
// Labels must include t, l, r.
ContextVector context_vector(const LabeledGenerators& g);

enum class Degeneracy { Degenerate, SlightlyDegenerate, NonDegenerate };
std::string_view to_string(Degeneracy d);

Degeneracy classify(const ContextVector& v);
Degeneracy classify_degeneracy(const RootedMap& m);

ContextVector lcm_vector_predict(const ContextVector& v, const ContextVector& w);
// Effect of Du and Pe on the vector entries.
ContextVector dual_vector(const ContextVector& v);
ContextVector petrie_vector(const ContextVector& v);

// Presentation <t, l, r | W_i^{e_i}>.
Presentation context_presentation(const ContextVector& v);

// The regular map of an enumerated group with generators t, l, r.
RootedMap regular_map(const LabeledGenerators& g);

// Row `index` (1..12) of the degenerate table; k is required for 6, 7, 8.
ContextVector degenerate_vector(int index, std::optional<std::uint64_t> k = std::nullopt);
std::uint64_t degenerate_order(int index, std::optional<std::uint64_t> k = std::nullopt);
RootedMap build_degenerate(int index, std::optional<std::uint64_t> k = std::nullopt);

enum class SlightFamily { Epsilon, Delta };
Presentation slightly_degenerate_presentation(SlightFamily family, std::uint64_t k);
RootedMap build_slightly_degenerate(SlightFamily family, std::uint64_t k);

}  // namespace flagmap

#endif  // FLAGMAP_DEGEN_HPP

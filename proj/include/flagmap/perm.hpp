#ifndef FLAGMAP_PERM_HPP
#define FLAGMAP_PERM_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagmap/error.hpp"

namespace flagmap {

using Point = std::uint32_t;

// A permutation of {0..n-1} stored as its image array.
//
// Products compose left to right, matching the right action of Sym_R:
// x * (p * q) == (x * p) * q, i.e. (p * q)[x] == q[p[x]].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  // Throws Error(Format) unless `images` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool has_fixed_point() const noexcept;
  // First point moved, or degree() for the identity.
  Point first_moved_point() const noexcept;

  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation pow(long long exponent) const;
  // Conjugate rhs^-1 * this * rhs.
  Permutation conjugate_by(const Permutation& rhs) const;
  std::uint64_t order() const;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

struct Orbits {
  std::vector<std::vector<Point>> blocks;  // each sorted; ordered by least point
  std::vector<std::uint32_t> block_of;

  std::size_t size() const noexcept { return blocks.size(); }
  bool is_transitive() const noexcept { return blocks.size() == 1; }
};

Orbits orbits(std::size_t degree, std::span<const Permutation> generators);

struct GroupLimits {
  std::size_t max_degree = 10'000;
  // Budget for stored transversal entries (orbit length times degree, summed).
  std::size_t max_transversal_entries = 20'000'000;
  // Bound for algorithms that materialize every element.
  std::size_t max_elements = 100'000;
};

class StabChain;

// A permutation group given by generators. The stabilizer chain is built on
// first use and shared between copies.
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            GroupLimits limits = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const GroupLimits& limits() const noexcept { return limits_; }

  Orbits orbits() const { return flagmap::orbits(degree_, generators_); }
  bool is_transitive() const { return orbits().is_transitive(); }

  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  bool is_trivial() const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool same_as(const PermGroup& other) const;
  // Normal in `overgroup`, judged by conjugating generators by generators.
  bool is_normal_in(const PermGroup& overgroup) const;

  // Generators of the stabilizer of `point`.
  std::vector<Permutation> stabilizer_generators(Point point) const;

  // Every element, identity first, in breadth-first order over the
  // generators. Throws BoundExceeded above limits().max_elements.
  std::vector<Permutation> elements() const;

  const StabChain& chain() const;

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  GroupLimits limits_;
  std::shared_ptr<Cache> cache_;
};

struct LabeledGenerators {
  std::vector<std::string> labels;
  std::vector<Permutation> generators;

  LabeledGenerators() = default;
  LabeledGenerators(std::vector<std::string> labels, std::vector<Permutation> generators);

  std::size_t degree() const { return generators.empty() ? 0 : generators.front().degree(); }
  std::size_t size() const noexcept { return labels.size(); }
  // Index of `label`, or size() when absent.
  std::size_t index_of(std::string_view label) const;
  const Permutation& at(std::string_view label) const;
  PermGroup group(GroupLimits limits = {}) const;
};

Orbits orbits(const PermGroup& group);

// Smallest normal subgroup of `group` containing `subset`.
PermGroup normal_closure(const PermGroup& group, std::span<const Permutation> subset);

// Inclusion-minimal nontrivial normal subgroups, sorted by order and then by
// sorted element list. Complete for groups within limits().max_elements.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& group);

// Conjugacy classes as lists of element indices into `elements`.
std::vector<std::vector<std::size_t>> conjugacy_classes(
    std::span<const Permutation> elements, std::span<const Permutation> generators);

// True iff the label-respecting assignment of generators extends to an
// isomorphism. Labels must agree as sets.
bool congruent_labeled_groups(const LabeledGenerators& a, const LabeledGenerators& b,
                              std::size_t max_elements = 100'000);

// ".grp" text format: "degree N" then "gen <label> <images...>".
LabeledGenerators parse_group_file(std::string_view text);
std::string format_group_file(const LabeledGenerators& group);

}  // namespace flagmap

#endif  // FLAGMAP_PERM_HPP

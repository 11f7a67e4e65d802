#ifndef FLAGMAP_STAB_CHAIN_HPP
#define FLAGMAP_STAB_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flagmap/perm.hpp"

namespace flagmap {

// Deterministic Schreier-Sims stabilizer chain with explicit transversals.
//
// Level i stores base point b_i, the strong generators fixing b_0..b_{i-1},
// the orbit of b_i under them, and a transversal u_x with b_i * u_x == x.
class StabChain {
 public:
  StabChain(std::size_t degree, std::span<const Permutation> generators,
            std::span<const Point> initial_base = {}, GroupLimits limits = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  std::vector<Point> base() const;

  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

  // Adds `p` unless it is already a member. Returns true when the group grew.
  bool add_generator(const Permutation& p);

  // Strong generators fixing the first `level` base points.
  std::vector<Permutation> strong_generators(std::size_t level) const;
  std::span<const Point> orbit(std::size_t level) const { return levels_[level].orbit; }

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // index into orbit, -1 when absent
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse;  // inverse[k] == transversal[k]^-1
  };

  struct Sifted {
    Permutation residue;
    std::size_t level;
  };

  Sifted strip(Permutation p, std::size_t from) const;
  void rebuild_orbit(std::size_t level);
  std::optional<std::size_t> check_level(std::size_t level);
  void push_level(Point base);
  void complete(std::size_t start);
  void charge(std::size_t entries);

  std::size_t degree_;
  GroupLimits limits_;
  std::vector<Level> levels_;
  std::size_t stored_entries_ = 0;
};

}  // namespace flagmap

#endif  // FLAGMAP_STAB_CHAIN_HPP

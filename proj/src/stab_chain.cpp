#include "flagmap/stab_chain.hpp"

namespace flagmap {

StabChain::StabChain(std::size_t degree, std::span<const Permutation> generators,
                     std::span<const Point> initial_base, GroupLimits limits)
    : degree_(degree), limits_(limits) {
  if (degree > limits.max_degree)
    throw Error(ErrorKind::BoundExceeded, "degree " + std::to_string(degree) + " exceeds bound");
  for (Point b : initial_base) {
    if (b >= degree) throw Error(ErrorKind::InvalidArgument, "base point out of range");
    bool dup = false;
    for (const auto& l : levels_) dup = dup || l.base == b;
    if (!dup) push_level(b);
  }
  for (const auto& g : generators) add_generator(g);
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

std::uint64_t StabChain::order() const {
  std::uint64_t n = 1;
  for (const auto& l : levels_) {
    const unsigned __int128 next = static_cast<unsigned __int128>(n) * l.orbit.size();
    if (next > UINT64_MAX) throw Error(ErrorKind::BoundExceeded, "group order overflows 64 bits");
    n = static_cast<std::uint64_t>(next);
  }
  return n;
}

StabChain::Sifted StabChain::strip(Permutation p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto& lev = levels_[l];
    const std::int32_t pos = lev.position[p[lev.base]];
    if (pos < 0) return {std::move(p), l};
    if (pos > 0) p = p * lev.inverse[pos];
  }
  return {std::move(p), levels_.size()};
}

bool StabChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Sifted s = strip(p, 0);
  return s.level == levels_.size() && s.residue.is_identity();
}

void StabChain::charge(std::size_t entries) {
  stored_entries_ += entries;
  if (stored_entries_ > limits_.max_transversal_entries)
    throw Error(ErrorKind::BoundExceeded, "stabilizer chain exceeds its memory budget");
}

void StabChain::push_level(Point base) {
  Level lev;
  lev.base = base;
  lev.orbit.push_back(base);
  lev.position.assign(degree_, -1);
  lev.position[base] = 0;
  lev.transversal.push_back(Permutation::identity(degree_));
  lev.inverse.push_back(Permutation::identity(degree_));
  levels_.push_back(std::move(lev));
  charge(2 * degree_);
}

void StabChain::rebuild_orbit(std::size_t level) {
  Level& lev = levels_[level];
  const std::size_t old = lev.orbit.size();
  // Points already in the orbit keep their transversal elements, so the
  // orbit only ever grows from its previous state.
  for (std::size_t k = 0; k < lev.orbit.size(); ++k) {
    for (const auto& s : lev.generators) {
      const Point y = s[lev.orbit[k]];
      if (lev.position[y] >= 0) continue;
      if ((lev.orbit.size() - old + 1) * 2 * degree_ + stored_entries_ >
          limits_.max_transversal_entries)
        throw Error(ErrorKind::BoundExceeded, "stabilizer chain exceeds its memory budget");
      lev.position[y] = static_cast<std::int32_t>(lev.orbit.size());
      lev.orbit.push_back(y);
      lev.transversal.push_back(lev.transversal[k] * s);
      lev.inverse.push_back(lev.transversal.back().inverse());
    }
  }
  charge((lev.orbit.size() - old) * 2 * degree_);
}

std::optional<std::size_t> StabChain::check_level(std::size_t level) {
  for (std::size_t k = 0; k < levels_[level].orbit.size(); ++k) {
    for (std::size_t gi = 0; gi < levels_[level].generators.size(); ++gi) {
      const Level& lev = levels_[level];
      const Permutation& s = lev.generators[gi];
      const Point y = s[lev.orbit[k]];
      Permutation g = lev.transversal[k] * s * lev.inverse[lev.position[y]];
      if (g.is_identity()) continue;
      Sifted r = strip(std::move(g), level + 1);
      if (r.level == levels_.size() && r.residue.is_identity()) continue;
      const std::size_t j = r.level;
      if (j == levels_.size()) push_level(r.residue.first_moved_point());
      for (std::size_t l = level + 1; l <= j; ++l) {
        levels_[l].generators.push_back(r.residue);
        rebuild_orbit(l);
      }
      return j;
    }
  }
  return std::nullopt;
}

void StabChain::complete(std::size_t start) {
  long long i = static_cast<long long>(start);
  while (i >= 0) {
    if (auto deeper = check_level(static_cast<std::size_t>(i)))
      i = static_cast<long long>(*deeper);
    else
      --i;
  }
}

bool StabChain::add_generator(const Permutation& p) {
  if (p.degree() != degree_) throw Error(ErrorKind::InvalidArgument, "generator degree mismatch");
  Sifted s = strip(p, 0);
  if (s.level == levels_.size() && s.residue.is_identity()) return false;
  const std::size_t j = s.level;
  if (j == levels_.size()) push_level(s.residue.first_moved_point());
  for (std::size_t l = 0; l <= j; ++l) {
    levels_[l].generators.push_back(s.residue);
    rebuild_orbit(l);
  }
  complete(j);
  return true;
}

std::vector<Permutation> StabChain::strong_generators(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].generators;
}

}  // namespace flagmap

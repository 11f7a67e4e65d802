#include "flagmap/quotient.hpp"

#include <algorithm>

namespace flagmap {

bool is_valid_morphism(const MapMorphism& phi) {
  const auto& f = phi.flag_map;
  if (f.size() != phi.source.size()) return false;
  if (f[phi.source.root()] != phi.target.root()) return false;
  std::vector<bool> hit(phi.target.size(), false);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= phi.target.size()) return false;
    hit[f[x]] = true;
    for (int g = 0; g < 3; ++g)
      if (f[phi.source.generator(g)[static_cast<Point>(x)]] != phi.target.generator(g)[f[x]]) return false;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

MapMorphism quotient_by_partition(const RootedMap& m, const std::vector<std::uint32_t>& block_of) {
  const std::size_t n = m.size();
  if (block_of.size() != n) throw Error(ErrorKind::InvalidArgument, "partition size mismatch");

  // Renumber blocks in order of first appearance from the root so that the
  // quotient root is flag 0's block in a stable order.
  std::vector<std::int64_t> id(n, -1);
  std::vector<Point> rep;
  std::vector<Point> queue{m.root()};
  std::vector<bool> seen(n, false);
  seen[m.root()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Point x = queue[i];
    if (block_of[x] >= n) throw Error(ErrorKind::InvalidArgument, "block id out of range");
    if (id[block_of[x]] < 0) {
      id[block_of[x]] = static_cast<std::int64_t>(rep.size());
      rep.push_back(x);
    }
    for (int g = 0; g < 3; ++g) {
      const Point y = m.generator(g)[x];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }

  std::vector<Point> flag_map(n);
  for (std::size_t x = 0; x < n; ++x) flag_map[x] = static_cast<Point>(id[block_of[x]]);

  const std::size_t q = rep.size();
  std::vector<Point> img[3];
  for (int g = 0; g < 3; ++g) {
    img[g].resize(q);
    for (std::size_t b = 0; b < q; ++b) img[g][b] = flag_map[m.generator(g)[rep[b]]];
    for (std::size_t x = 0; x < n; ++x)
      if (flag_map[m.generator(g)[static_cast<Point>(x)]] != img[g][flag_map[x]])
        throw Error(ErrorKind::InvariantViolation, "partition is not a block system of the map");
  }
  RootedMap target(Permutation(std::move(img[0])), Permutation(std::move(img[1])),
                   Permutation(std::move(img[2])), 0);
  return MapMorphism{m, std::move(target), std::move(flag_map)};
}

MapMorphism k_quotient(const RootedMap& m, const PermGroup& k) {
  const PermGroup g = m.monodromy(k.limits());
  if (k.degree() != m.size()) throw Error(ErrorKind::InvalidArgument, "subgroup degree mismatch");
  if (!k.is_subgroup_of(g)) throw Error(ErrorKind::InvalidArgument, "K is not a subgroup of Mon");

  // G_id <= K iff |K| = |root.K| * |G_id|, with |G_id| = |G| / n.
  const Orbits ko = k.orbits();
  const auto& block = ko.blocks[ko.block_of[m.root()]];
  const std::uint64_t stab = g.order() / m.size();
  if (k.order() != static_cast<std::uint64_t>(block.size()) * stab)
    throw Error(ErrorKind::StabilizerNotContained, "K does not contain the root stabilizer");

  // The images of root.K under the monodromy group form a block system.
  const std::size_t n = m.size();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> block_of(n, unset);
  std::vector<std::vector<Point>> blocks{block};
  for (Point x : block) block_of[x] = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int s = 0; s < 3; ++s) {
      const Permutation& p = m.generator(s);
      const Point first = p[blocks[b].front()];
      if (block_of[first] != unset) continue;
      const auto id = static_cast<std::uint32_t>(blocks.size());
      std::vector<Point> image;
      for (Point x : blocks[b]) {
        const Point y = p[x];
        if (block_of[y] != unset) throw Error(ErrorKind::InvariantViolation, "root.K is not a block");
        block_of[y] = id;
        image.push_back(y);
      }
      blocks.push_back(std::move(image));
    }
  }
  return quotient_by_partition(m, block_of);
}

MapMorphism monodromy_quotient(const RootedMap& m, const PermGroup& h) {
  if (h.degree() != m.size()) throw Error(ErrorKind::InvalidArgument, "subgroup degree mismatch");
  const PermGroup g = m.monodromy(h.limits());
  if (!h.is_subgroup_of(g)) throw Error(ErrorKind::InvalidArgument, "H is not a subgroup of Mon");
  if (!h.is_normal_in(g)) throw Error(ErrorKind::NotNormal, "H is not normal in Mon");
  return quotient_by_partition(m, h.orbits().block_of);
}

bool is_automorphism(const RootedMap& m, const Permutation& a) {
  if (a.degree() != m.size()) return false;
  for (int g = 0; g < 3; ++g) {
    const Permutation& w = m.generator(g);
    for (std::size_t x = 0; x < m.size(); ++x)
      if (a[w[static_cast<Point>(x)]] != w[a[static_cast<Point>(x)]]) return false;
  }
  return true;
}

MapMorphism automorphism_quotient(const RootedMap& m, const PermGroup& a) {
  if (a.degree() != m.size()) throw Error(ErrorKind::InvalidArgument, "subgroup degree mismatch");
  for (const auto& g : a.generators())
    if (!is_automorphism(m, g)) throw Error(ErrorKind::NotAnAutomorphism, "generator is not an automorphism");
  return quotient_by_partition(m, a.orbits().block_of);
}

Permutation project_automorphism(const MapMorphism& proj, const Permutation& a) {
  if (!is_automorphism(proj.source, a))
    throw Error(ErrorKind::NotAnAutomorphism, "not an automorphism of the source");
  constexpr Point unset = static_cast<Point>(-1);
  std::vector<Point> img(proj.target.size(), unset);
  for (std::size_t x = 0; x < proj.source.size(); ++x) {
    const Point b = proj.flag_map[x];
    const Point c = proj.flag_map[a[static_cast<Point>(x)]];
    if (img[b] == unset)
      img[b] = c;
    else if (img[b] != c)
      throw Error(ErrorKind::InvalidArgument, "automorphism does not preserve the fibres");
  }
  return Permutation(std::move(img));
}

KQuotientWitness morphism_to_k_quotient(const MapMorphism& phi) {
  if (!is_valid_morphism(phi)) throw Error(ErrorKind::InvalidArgument, "not a valid morphism");
  const RootedMap& src = phi.source;
  const RootedMap& tgt = phi.target;
  const std::size_t nt = tgt.size();

  // Transversal of the target flags by monodromy elements of the source,
  // then Schreier generators of the root stabilizer in that action.
  std::vector<std::optional<Permutation>> u(nt);
  std::vector<Point> queue{tgt.root()};
  u[tgt.root()] = Permutation::identity(src.size());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Point y = queue[i];
    for (int s = 0; s < 3; ++s) {
      const Point z = tgt.generator(s)[y];
      if (!u[z]) {
        u[z] = *u[y] * src.generator(s);
        queue.push_back(z);
      }
    }
  }
  std::vector<Permutation> gens;
  for (Point y : queue)
    for (int s = 0; s < 3; ++s) {
      const Point z = tgt.generator(s)[y];
      Permutation g = *u[y] * src.generator(s) * u[z]->inverse();
      if (!g.is_identity()) gens.push_back(std::move(g));
    }
  PermGroup k(src.size(), std::move(gens));
  const MapMorphism q = k_quotient(src, k);
  auto iso = isomorphism(q.target, tgt, IsoMode::Rooted);
  if (!iso) throw Error(ErrorKind::VerificationFailed, "K-quotient is not isomorphic to the target");
  return {std::move(k), std::move(*iso)};
}

std::vector<Permutation> parse_subgroup_words(const RootedMap& m, std::string_view text) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view w = text.substr(start, end - start);
    while (!w.empty() && w.front() == ' ') w.remove_prefix(1);
    while (!w.empty() && w.back() == ' ') w.remove_suffix(1);
    if (w.empty()) {
      if (end != text.size() || start != 0)
        throw Error(ErrorKind::InvalidArgument, "empty word in subgroup list");
    } else if (w == "1") {
      out.push_back(Permutation::identity(m.size()));
    } else {
      out.push_back(m.word(w));
    }
    start = end + 1;
  }
  return out;
}

}  // namespace flagmap

#include "flagmap/decomp.hpp"

#include "flagmap/ettype.hpp"
#include "flagmap/product.hpp"

namespace flagmap {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Decomposable: return "decomposable";
    case Verdict::Indecomposable: return "indecomposable";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// root.H as a membership vector.
std::vector<bool> root_orbit(const RootedMap& m, const PermGroup& h) {
  const Orbits o = h.orbits();
  std::vector<bool> in(m.size(), false);
  for (Point x : o.blocks[o.block_of[m.root()]]) in[x] = true;
  return in;
}

// Both factors, the product and its certificate; throws VerificationFailed
// when the product does not reproduce m.
void certify(const RootedMap& m, const PermGroup& h1, const PermGroup& h2, DecompositionVerdict& v) {
  RootedMap f1 = monodromy_quotient(m, h1).target;
  RootedMap f2 = monodromy_quotient(m, h2).target;
  const ProductWitness p = parallel_product(f1, f2);
  auto iso = isomorphism(p.product, m, IsoMode::Rooted);
  if (!iso) throw Error(ErrorKind::VerificationFailed, "product of the factors is not the input map");
  v.witnesses.emplace(h1, h2);
  v.factors.emplace(std::move(f1), std::move(f2));
  v.certificate = std::move(*iso);
}

}  // namespace

DecompositionVerdict decomposability_general(const RootedMap& m, GroupLimits limits) {
  DecompositionVerdict v;
  std::vector<PermGroup> mins;
  try {
    mins = minimal_normal_subgroups(m.monodromy(limits));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BoundExceeded) throw;
    v.verdict = Verdict::Unknown;
    v.note = e.what();
    return v;
  }
  v.minimal_normal_count = mins.size();

  // G_id H1 ∩ G_id H2 = G_id exactly when root.H1 ∩ root.H2 = {root}, since
  // g lies in G_id H iff root.g lies in root.H.
  std::vector<std::vector<bool>> orbit;
  std::vector<bool> intransitive;
  for (const auto& h : mins) {
    orbit.push_back(root_orbit(m, h));
    intransitive.push_back(!h.is_transitive());
  }
  for (std::size_t i = 0; i < mins.size(); ++i) {
    if (!intransitive[i]) continue;
    for (std::size_t j = 0; j < mins.size(); ++j) {
      if (i == j || !intransitive[j]) continue;
      bool meet_trivially = true;
      for (std::size_t x = 0; x < m.size() && meet_trivially; ++x)
        if (x != m.root() && orbit[i][x] && orbit[j][x]) meet_trivially = false;
      if (!meet_trivially) continue;
      certify(m, mins[i], mins[j], v);
      v.verdict = Verdict::Decomposable;
      return v;
    }
  }
  v.verdict = Verdict::Indecomposable;
  return v;
}

DecompositionVerdict decomposability_reflexible(const RootedMap& m, GroupLimits limits) {
  if (!is_reflexible(m)) throw Error(ErrorKind::NotReflexible, "map is not reflexible");
  DecompositionVerdict v;
  std::vector<PermGroup> mins;
  try {
    mins = minimal_normal_subgroups(m.monodromy(limits));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BoundExceeded) throw;
    v.note = e.what();
    return v;
  }
  v.minimal_normal_count = mins.size();
  if (mins.size() < 2) {
    v.verdict = Verdict::Indecomposable;
    return v;
  }
  certify(m, mins[0], mins[1], v);
  v.verdict = Verdict::Decomposable;
  return v;
}

DecompositionVerdict decomposability_edge_transitive(const RootedMap& m, GroupLimits limits) {
  if (!is_edge_transitive(m)) throw Error(ErrorKind::NotEdgeTransitive, "map is not edge-transitive");
  if (is_reflexible(m)) return decomposability_reflexible(m, limits);
  DecompositionVerdict v;
  std::vector<PermGroup> mins;
  try {
    const PermGroup aut = automorphism_group(m);
    mins = minimal_normal_subgroups(PermGroup(aut.degree(), aut.generators(), limits));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BoundExceeded) throw;
    v.note = e.what();
    return v;
  }
  v.minimal_normal_count = mins.size();
  if (mins.size() >= 2) {
    v.verdict = Verdict::Decomposable;
    v.witnesses.emplace(mins[0], mins[1]);
  } else {
    v.verdict = Verdict::Indecomposable;
  }
  return v;
}

Decomposition decompose_with_certificate(const RootedMap& m, GroupLimits limits) {
  DecompositionVerdict v = decomposability_general(m, limits);
  if (v.verdict == Verdict::Unknown) throw Error(ErrorKind::BoundExceeded, v.note);
  if (!v.decomposable()) throw Error(ErrorKind::InvalidArgument, "map is not decomposable");
  return {std::move(v.factors->first), std::move(v.factors->second), std::move(*v.certificate)};
}

}  // namespace flagmap

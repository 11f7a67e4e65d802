#include "flagmap/report.hpp"

namespace flagmap {

AnalysisReport analyze(const RootedMap& m, GroupLimits limits) {
  AnalysisReport r;
  r.flags = m.size();
  r.mon_order = m.monodromy(limits).order();
  r.aut_order = automorphism_group(m).order();
  r.reflexible = r.aut_order == r.flags;
  r.vector = context_vector(m);
  r.degeneracy = classify(r.vector);
  const SurfaceInfo s = cells_and_surface(m);
  r.vertices = s.cells.vertices.size();
  r.edges = s.cells.edges.size();
  r.faces = s.cells.faces.size();
  r.petrie = s.cells.petrie.size();
  r.orientability = s.orientability;
  r.euler_characteristic = s.euler_characteristic;
  r.signed_genus = s.signed_genus;
  r.symbol = genus_symbol(m);
  if (auto t = classify_type(m)) {
    r.et_type = t->label;
    r.map_symbol = map_symbol(t->rooted);
  }
  r.decomposition = decomposability_general(m, limits);
  return r;
}

nlohmann::json to_json(const ContextVector& v) { return nlohmann::json(v.e); }

nlohmann::json to_json(const DecompositionVerdict& v) {
  nlohmann::json j;
  j["verdict"] = std::string(to_string(v.verdict));
  if (v.verdict == Verdict::Unknown)
    j["decomposable"] = nullptr;
  else
    j["decomposable"] = v.decomposable();
  j["minimal_normal_subgroups"] = v.minimal_normal_count;
  if (v.witnesses)
    j["witness_orders"] = {v.witnesses->first.order(), v.witnesses->second.order()};
  else
    j["witness_orders"] = nullptr;
  if (v.factors) j["factor_flags"] = {v.factors->first.size(), v.factors->second.size()};
  j["certificate_checked"] = v.certificate.has_value();
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["flags"] = r.flags;
  j["mon_order"] = r.mon_order;
  j["aut_order"] = r.aut_order;
  j["reflexible"] = r.reflexible;
  j["degeneracy"] = std::string(to_string(r.degeneracy));
  j["context_vector"] = to_json(r.vector);
  j["cells"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"faces", r.faces}, {"petrie", r.petrie}};
  j["orientability"] = std::string(to_string(r.orientability));
  j["euler_characteristic"] = r.euler_characteristic;
  j["signed_genus"] = r.signed_genus;
  j["genus_symbol"] = r.symbol.genus;
  j["isomorphism_symbol"] = r.symbol.iso;
  j["hexagonal_number"] = r.symbol.hexagonal;
  j["genus_advisory"] = r.symbol.advisory;
  j["edge_transitive_type"] = r.et_type ? nlohmann::json(*r.et_type) : nlohmann::json(nullptr);
  if (r.map_symbol)
    j["map_symbol"] = {{"a", r.map_symbol->a},
                       {"b", r.map_symbol->b},
                       {"c", r.map_symbol->c},
                       {"text", r.map_symbol->to_string()},
                       {"advisory", r.map_symbol->advisory}};
  else
    j["map_symbol"] = nullptr;
  j["decomposition"] = to_json(r.decomposition);
  return j;
}

}  // namespace flagmap

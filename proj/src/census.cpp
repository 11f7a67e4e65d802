#include <fstream>
#include <numeric>

#include "flagmap/report.hpp"

namespace flagmap {

namespace {

// Coincidences forced by a trivial context word, and the orders of the
// dihedral subgroups <T,R>, <L,R>, <TL,R> and the Klein group <T,L>.
bool consistent(const ContextVector& v, std::uint64_t max_order) {
  const auto& e = v.e;
  if (e[3] == 1 && !(e[0] == e[1] && e[4] == e[5] && e[6] == e[2])) return false;
  if (e[0] == 1 && !(e[3] == e[1] && e[4] == e[2] && e[6] == e[5])) return false;
  if (e[1] == 1 && !(e[3] == e[0] && e[5] == e[2] && e[6] == e[4])) return false;
  if (e[2] == 1 && !(e[4] == e[0] && e[5] == e[1] && e[6] == e[3])) return false;
  if (e[4] == 1 && !(e[0] == e[2] && e[5] == e[3] && e[6] == e[1])) return false;
  if (e[5] == 1 && !(e[1] == e[2] && e[4] == e[3] && e[6] == e[0])) return false;
  if (e[6] == 1 && !(e[2] == e[3] && e[4] == e[1] && e[5] == e[0])) return false;

  std::uint64_t bound = 1;
  for (auto x : e) bound = std::lcm(bound, x);
  if (e[0] == 2 && e[2] == 2 && e[4] >= 2) bound = std::lcm(bound, 2 * e[4]);
  if (e[1] == 2 && e[2] == 2 && e[5] >= 2) bound = std::lcm(bound, 2 * e[5]);
  if (e[3] == 2 && e[2] == 2 && e[6] >= 2) bound = std::lcm(bound, 2 * e[6]);
  if (e[0] == 2 && e[1] == 2 && e[3] == 2) bound = std::lcm(bound, std::uint64_t{4});
  return bound <= max_order;
}

}  // namespace

std::vector<ContextVector> census_candidates(std::uint64_t max_order, std::uint64_t context_bound) {
  std::vector<ContextVector> out;
  const std::uint64_t top = std::min(context_bound, max_order);
  ContextVector v;
  for (v[0] = 1; v[0] <= 2; ++v[0])
    for (v[1] = 1; v[1] <= 2; ++v[1])
      for (v[2] = 1; v[2] <= 2; ++v[2])
        for (v[3] = 1; v[3] <= 2; ++v[3])
          for (v[4] = 1; v[4] <= top; ++v[4])
            for (v[5] = 1; v[5] <= top; ++v[5])
              for (v[6] = 1; v[6] <= top; ++v[6])
                if (consistent(v, max_order)) out.push_back(v);
  return out;
}

CensusResult census_reflexible(const CensusOptions& options) {
  CensusResult res;
  res.options = options;
  if (res.options.max_cosets == 0) res.options.max_cosets = 8 * options.max_order;
  const auto candidates = census_candidates(options.max_order, options.context_bound);
  res.candidates = candidates.size();
  for (const auto& v : candidates) {
    Enumeration e;
    try {
      e = todd_coxeter(context_presentation(v), res.options.max_cosets);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::EnumerationOverflow) throw;
      res.skipped.push_back({v, err.what()});
      continue;
    }
    if (e.order > options.max_order) {
      ++res.rejected;
      continue;
    }
    RootedMap m = regular_map(e.action);
    if (context_vector(m) != v) {
      ++res.rejected;
      continue;
    }
    bool duplicate = false;
    for (const auto& prev : res.entries)
      if (prev.vector == v && congruent_labeled_groups(prev.map.labeled(), m.labeled())) duplicate = true;
    if (!duplicate) res.entries.push_back({v, std::move(m)});
  }
  return res;
}

std::string census_name(const ContextVector& v) {
  std::string s = "v";
  for (std::size_t i = 0; i < 7; ++i) s += (i ? "-" : "") + std::to_string(v[i]);
  return s;
}

void write_census(const CensusResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& entry : result.entries) {
    const std::string name = census_name(entry.vector);
    std::ofstream(dir / (name + ".map")) << save_map(entry.map);
    nlohmann::json r = to_json(analyze(entry.map));
    r["name"] = name;
    reports.push_back(std::move(r));
  }
  std::ofstream(dir / "reports.json") << reports.dump(2) << '\n';

  nlohmann::json manifest;
  manifest["max_order"] = result.options.max_order;
  manifest["context_bound"] = result.options.context_bound;
  manifest["max_cosets"] = result.options.max_cosets;
  manifest["candidates"] = result.candidates;
  manifest["emitted"] = result.entries.size();
  manifest["rejected"] = result.rejected;
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& s : result.skipped)
    skipped.push_back({{"vector", to_json(s.vector)}, {"reason", s.reason}});
  manifest["skipped"] = std::move(skipped);
  manifest["complete"] = result.skipped.empty();
  manifest["incompleteness"] =
      "Only maps whose monodromy group is presented by the seven context relators "
      "T, L, R, TL, RT, RL, TLR are found; maps needing longer relators are missing. "
      "Skipped candidates exceeded the coset bound and may hide further groups.";
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << '\n';
}

}  // namespace flagmap

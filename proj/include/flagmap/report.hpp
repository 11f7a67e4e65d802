#ifndef FLAGMAP_REPORT_HPP
#define FLAGMAP_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagmap/decomp.hpp"
#include "flagmap/degen.hpp"
#include "flagmap/ettype.hpp"
#include "flagmap/map.hpp"

namespace flagmap {

struct AnalysisReport {
  std::size_t flags = 0;
  std::uint64_t mon_order = 0;
  std::size_t aut_order = 0;
  bool reflexible = false;
  Degeneracy degeneracy = Degeneracy::Degenerate;
  ContextVector vector;
  std::size_t vertices = 0, edges = 0, faces = 0, petrie = 0;
  Orientability orientability = Orientability::Orientable;
  long long euler_characteristic = 0;
  long long signed_genus = 0;
  GenusSymbol symbol;
  std::optional<std::string> et_type;
  std::optional<MapSymbol> map_symbol;
  DecompositionVerdict decomposition;
};

AnalysisReport analyze(const RootedMap& m, GroupLimits limits = {});

nlohmann::json to_json(const ContextVector& v);
nlohmann::json to_json(const DecompositionVerdict& v);
nlohmann::json to_json(const AnalysisReport& r);

// ---- census ---------------------------------------------------------------

struct CensusOptions {
  std::uint64_t max_order = 96;
  std::uint64_t context_bound = 12;
  std::size_t max_cosets = 0;  // 0 selects 8 * max_order
};

struct CensusEntry {
  ContextVector vector;
  RootedMap map;
};

struct CensusSkip {
  ContextVector vector;
  std::string reason;
};

struct CensusResult {
  CensusOptions options;
  std::size_t candidates = 0;
  std::size_t rejected = 0;  // finite, but too large or with a smaller actual vector
  std::vector<CensusEntry> entries;
  std::vector<CensusSkip> skipped;
};

// Vectors that pass the cheap consistency filters, in lexicographic order.
std::vector<ContextVector> census_candidates(std::uint64_t max_order, std::uint64_t context_bound);

CensusResult census_reflexible(const CensusOptions& options);

// File stem for a census map, e.g. "v2-2-2-2-3-3-4".
std::string census_name(const ContextVector& v);

// Writes <name>.map per entry, reports.json and manifest.json.
void write_census(const CensusResult& result, const std::filesystem::path& dir);

}  // namespace flagmap

#endif  // FLAGMAP_REPORT_HPP

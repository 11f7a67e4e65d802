#include "flagmap/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "flagmap/decomp.hpp"
#include "flagmap/degen.hpp"
#include "flagmap/ettype.hpp"
#include "flagmap/fpres.hpp"
#include "flagmap/product.hpp"
#include "flagmap/quotient.hpp"
#include "flagmap/report.hpp"

namespace flagmap {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
}

void emit_map(const RootedMap& m, const std::string& path, std::ostream& out) {
  write_text(path, save_map(canonical(m)), out);
}

std::string join(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

void print_report(const AnalysisReport& r, std::ostream& out) {
  out << "flags: " << r.flags << '\n'
      << "mon_order: " << r.mon_order << '\n'
      << "aut_order: " << r.aut_order << '\n'
      << "reflexible: " << (r.reflexible ? "yes" : "no") << '\n'
      << "context_vector: " << r.vector.to_string() << '\n'
      << "degeneracy: " << to_string(r.degeneracy) << '\n'
      << "cells: V=" << r.vertices << " E=" << r.edges << " F=" << r.faces << " P=" << r.petrie << '\n'
      << "orientability: " << to_string(r.orientability) << '\n'
      << "euler_characteristic: " << r.euler_characteristic << '\n'
      << "signed_genus: " << r.signed_genus << '\n';
  std::vector<long long> iso(r.symbol.iso.begin(), r.symbol.iso.end());
  std::vector<long long> genus(r.symbol.genus.begin(), r.symbol.genus.end());
  out << "genus_symbol: " << join(genus) << '\n'
      << "isomorphism_symbol: " << join(iso) << '\n'
      << "hexagonal_number: " << r.symbol.hexagonal << '\n'
      << "edge_transitive_type: " << r.et_type.value_or("none") << '\n';
  if (r.map_symbol) out << "map_symbol: " << r.map_symbol->to_string() << '\n';
  out << "decomposition: " << to_string(r.decomposition.verdict) << '\n';
}

RootedMap build_preset(const std::string& name, std::optional<std::uint64_t> k) {
  if (name == "epsilon" || name == "delta") {
    if (!k) throw Error(ErrorKind::InvalidArgument, name + " needs --k");
    return build_slightly_degenerate(name == "epsilon" ? SlightFamily::Epsilon : SlightFamily::Delta, *k);
  }
  if (name.size() >= 3 && name.compare(0, 2, "dm") == 0) {
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(name.substr(2), &used);
      if (used != name.size() - 2) index = 0;
    } catch (const std::exception&) {
      index = 0;
    }
    if (index >= 1 && index <= 12) return build_degenerate(index, k);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown preset " + name);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"flagmap: maps as flag permutations", "flagmap"};
  app.require_subcommand(1);

  bool json = false;
  std::string file, file2, output, words, dir, type, preset;
  std::optional<std::uint64_t> k;
  std::size_t max_cosets = default_max_cosets;
  bool reflexible = false, totally = false;
  CensusOptions census;

  auto* analyze_cmd = app.add_subcommand("analyze", "Report invariants of a map");
  analyze_cmd->add_option("file", file, "Map file")->required();
  analyze_cmd->add_flag("--json", json, "Emit JSON");

  auto* du_cmd = app.add_subcommand("du", "Dual map");
  auto* pe_cmd = app.add_subcommand("pe", "Petrie dual map");
  for (auto* c : {du_cmd, pe_cmd}) {
    c->add_option("file", file, "Map file")->required();
    c->add_option("-o,--output", output, "Output map file");
  }

  auto* product_cmd = app.add_subcommand("product", "Parallel product of two maps");
  product_cmd->add_option("a", file, "First map")->required();
  product_cmd->add_option("b", file2, "Second map")->required();
  product_cmd->add_option("-o,--output", output, "Output map file");

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by a normal subgroup of Mon");
  quotient_cmd->add_option("file", file, "Map file")->required();
  quotient_cmd->add_option("--normal-closure", words, "Comma-separated words in t, l, r")->required();
  quotient_cmd->add_option("-o,--output", output, "Output map file");

  auto* kquotient_cmd = app.add_subcommand("kquotient", "Quotient by a subgroup containing the root stabilizer");
  kquotient_cmd->add_option("file", file, "Map file")->required();
  kquotient_cmd->add_option("--subgroup-words", words, "Comma-separated words in t, l, r")->required();
  kquotient_cmd->add_option("-o,--output", output, "Output map file");

  auto* decompose_cmd = app.add_subcommand("decompose", "Parallel-product decomposition");
  decompose_cmd->add_option("file", file, "Map file")->required();
  decompose_cmd->add_option("--emit-factors", dir, "Directory for the factor maps");
  decompose_cmd->add_flag("--json", json, "Emit JSON");

  auto* cover_cmd = app.add_subcommand("cover", "Reflexible covers");
  cover_cmd->add_option("file", file, "Map file")->required();
  auto* refl_flag = cover_cmd->add_flag("--reflexible", reflexible, "Smallest reflexible cover");
  auto* ts_flag = cover_cmd->add_flag("--totally-symmetric", totally, "Totally symmetric cover");
  refl_flag->excludes(ts_flag);
  cover_cmd->add_option("-o,--output", output, "Output map file");

  auto* build_cmd = app.add_subcommand("build", "Build a preset map (dm1..dm12, epsilon, delta)");
  build_cmd->add_option("preset", preset, "Preset name")->required();
  build_cmd->add_option("--k", k, "Family parameter");
  build_cmd->add_option("-o,--output", output, "Output map file");

  auto* construct_cmd = app.add_subcommand("construct", "Edge-transitive map from a labeled group");
  construct_cmd->add_option("--type", type, "Type label: 1, 2, 2ex, 3, 4 or 5")->required();
  construct_cmd->add_option("--group", file, "Group file")->required();
  construct_cmd->add_option("-o,--output", output, "Output map file");

  auto* tc_cmd = app.add_subcommand("todd-coxeter", "Coset enumeration over the trivial subgroup");
  tc_cmd->add_option("file", file, "Presentation file")->required();
  tc_cmd->add_option("--max-cosets", max_cosets, "Coset table bound");
  tc_cmd->add_option("-o,--output", output, "Output group file");

  auto* census_cmd = app.add_subcommand("enum-reflexible", "Census of reflexible maps from context vectors");
  census_cmd->add_option("--max-order", census.max_order, "Largest monodromy group order");
  census_cmd->add_option("--context-bound", census.context_bound, "Largest e5, e6, e7");
  census_cmd->add_option("--max-cosets", census.max_cosets, "Coset bound per candidate (0: 8 * max order)");
  census_cmd->add_option("--out", dir, "Output directory")->required();

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  try {
    if (analyze_cmd->parsed()) {
      const AnalysisReport r = analyze(load_map(read_file(file)));
      if (json)
        out << to_json(r).dump(2) << '\n';
      else
        print_report(r, out);
      return r.decomposition.verdict == Verdict::Unknown ? 3 : 0;
    }
    if (du_cmd->parsed() || pe_cmd->parsed()) {
      const RootedMap m = load_map(read_file(file));
      emit_map(du_cmd->parsed() ? dual(m) : petrie(m), output, out);
      return 0;
    }
    if (product_cmd->parsed()) {
      const RootedMap a = load_map(read_file(file));
      const RootedMap b = load_map(read_file(file2));
      emit_map(parallel_product(a, b).product, output, out);
      return 0;
    }
    if (quotient_cmd->parsed()) {
      const RootedMap m = load_map(read_file(file));
      const auto gens = parse_subgroup_words(m, words);
      const PermGroup h = normal_closure(m.monodromy(), gens);
      emit_map(monodromy_quotient(m, h).target, output, out);
      return 0;
    }
    if (kquotient_cmd->parsed()) {
      const RootedMap m = load_map(read_file(file));
      const PermGroup kgroup(m.size(), parse_subgroup_words(m, words));
      emit_map(k_quotient(m, kgroup).target, output, out);
      return 0;
    }
    if (decompose_cmd->parsed()) {
      const DecompositionVerdict v = decomposability_general(load_map(read_file(file)));
      if (json) {
        out << to_json(v).dump(2) << '\n';
      } else {
        out << "verdict: " << to_string(v.verdict) << '\n'
            << "minimal_normal_subgroups: " << v.minimal_normal_count << '\n';
        if (v.factors)
          out << "factor_flags: " << v.factors->first.size() << ' ' << v.factors->second.size() << '\n';
        if (!v.note.empty()) out << "note: " << v.note << '\n';
      }
      if (v.verdict == Verdict::Unknown) return 3;
      if (!dir.empty() && v.factors) {
        std::filesystem::create_directories(dir);
        const std::filesystem::path d(dir);
        emit_map(v.factors->first, (d / "factor1.map").string(), out);
        emit_map(v.factors->second, (d / "factor2.map").string(), out);
      }
      return 0;
    }
    if (cover_cmd->parsed()) {
      if (!reflexible && !totally) throw Error(ErrorKind::InvalidArgument, "choose --reflexible or --totally-symmetric");
      const RootedMap m = load_map(read_file(file));
      emit_map(reflexible ? smallest_reflexible_cover(m) : totally_symmetric_cover(m), output, out);
      return 0;
    }
    if (build_cmd->parsed()) {
      emit_map(build_preset(preset, k), output, out);
      return 0;
    }
    if (construct_cmd->parsed()) {
      const ConstructionReport r = construct_from_group(type, parse_group_file(read_file(file)));
      emit_map(r.map, output, out);
      err << "requested type " << r.requested << ", detected " << r.detected.value_or("none")
          << (r.exact ? " (exact)" : "") << '\n';
      return 0;
    }
    if (tc_cmd->parsed()) {
      const Enumeration e = todd_coxeter(parse_presentation(read_file(file)), max_cosets);
      write_text(output, "# order " + std::to_string(e.order) + "\n" + format_group_file(e.action), out);
      if (!output.empty()) out << "order " << e.order << '\n';
      return 0;
    }
    if (census_cmd->parsed()) {
      const CensusResult res = census_reflexible(census);
      write_census(res, dir);
      out << "candidates: " << res.candidates << '\n'
          << "emitted: " << res.entries.size() << '\n'
          << "rejected: " << res.rejected << '\n'
          << "skipped: " << res.skipped.size() << '\n';
      for (const auto& s : res.skipped) err << "skipped " << s.vector.to_string() << ": " << s.reason << '\n';
      return res.skipped.empty() ? 0 : 2;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::BoundExceeded || e.kind() == ErrorKind::EnumerationOverflow ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace flagmap

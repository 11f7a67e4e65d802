#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "flagmap/cli.hpp"
#include "flagmap/report.hpp"
#include "support.hpp"

using namespace flagmap;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "flagmap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("flagmap-cli-" + std::to_string(std::rand()) + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("analyze reports") {
  TempDir dir;
  REQUIRE(run({"build", "dm6", "--k", "5", "-o", dir / "dm6_5.map"}).code == 0);
  const Run r = run({"analyze", dir / "dm6_5.map", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mon_order"] == 10);
  CHECK(j["flags"] == 10);
  CHECK(j["reflexible"] == true);
  CHECK(j["aut_order"] == 10);
  CHECK(j["context_vector"] == nlohmann::json({2, 1, 2, 2, 5, 2, 5}));

  const Run text = run({"analyze", dir / "dm6_5.map"});
  CHECK(text.out.find("mon_order: 10") != std::string::npos);
}

TEST_CASE("product of DM2 and DM3") {
  TempDir dir;
  REQUIRE(run({"build", "dm2", "-o", dir / "dm2.map"}).code == 0);
  REQUIRE(run({"build", "dm3", "-o", dir / "dm3.map"}).code == 0);
  REQUIRE(run({"product", dir / "dm2.map", dir / "dm3.map", "-o", dir / "out.map"}).code == 0);
  const RootedMap out = load_map(slurp(dir / "out.map"));
  CHECK(congruent_labeled_groups(out.labeled(), testing::dm(6, 2).labeled()));
  const auto j = nlohmann::json::parse(run({"analyze", dir / "out.map", "--json"}).out);
  CHECK(j["context_vector"] == nlohmann::json({2, 1, 2, 2, 2, 2, 2}));
}

TEST_CASE("dual twice gives the canonical input") {
  TempDir dir;
  std::ofstream(dir / "in.map") << save_map(testing::path_quotient());
  REQUIRE(run({"du", dir / "in.map", "-o", dir / "a.map"}).code == 0);
  REQUIRE(run({"du", dir / "a.map", "-o", dir / "b.map"}).code == 0);
  CHECK(slurp(dir / "b.map") == save_map(testing::path_quotient()));
  REQUIRE(run({"pe", dir / "in.map", "-o", dir / "p.map"}).code == 0);
  REQUIRE(run({"pe", dir / "p.map", "-o", dir / "pp.map"}).code == 0);
  CHECK(slurp(dir / "pp.map") == slurp(dir / "in.map"));
}

TEST_CASE("quotients and covers") {
  TempDir dir;
  REQUIRE(run({"build", "epsilon", "--k", "4", "-o", dir / "c4.map"}).code == 0);
  const Run q = run({"quotient", dir / "c4.map", "--normal-closure", "lrlr"});
  REQUIRE(q.code == 0);
  CHECK(load_map(q.out).size() == 8);

  const Run kq = run({"kquotient", dir / "c4.map", "--subgroup-words", "r"});
  REQUIRE(kq.code == 0);
  CHECK(load_map(kq.out).size() == 8);

  std::ofstream(dir / "path.map") << save_map(testing::path_quotient());
  const Run c = run({"cover", dir / "path.map", "--reflexible"});
  REQUIRE(c.code == 0);
  CHECK(isomorphic(load_map(c.out), testing::c4_sphere()));
  CHECK(run({"cover", dir / "path.map", "--totally-symmetric"}).code == 1);
  CHECK(run({"cover", dir / "c4.map", "--totally-symmetric"}).code == 0);
  CHECK(run({"quotient", dir / "c4.map", "--normal-closure", "q"}).code == 1);
}

TEST_CASE("decompose") {
  TempDir dir;
  REQUIRE(run({"build", "epsilon", "--k", "4", "-o", dir / "c4.map"}).code == 0);
  const Run r = run({"decompose", dir / "c4.map", "--emit-factors", dir / "factors", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["decomposable"] == true);
  CHECK(j["certificate_checked"] == true);
  const RootedMap a = load_map(slurp(dir / "factors/factor1.map"));
  const RootedMap b = load_map(slurp(dir / "factors/factor2.map"));
  CHECK(isomorphic(parallel_product(a, b).product, testing::c4_sphere()));

  REQUIRE(run({"build", "delta", "--k", "4", "-o", dir / "d4.map"}).code == 0);
  CHECK(run({"decompose", dir / "d4.map"}).out.find("indecomposable") != std::string::npos);
}

TEST_CASE("construct and todd-coxeter") {
  TempDir dir;
  std::ofstream(dir / "k44.pres") << testing::k44_presentation();
  const Run tc = run({"todd-coxeter", dir / "k44.pres", "-o", dir / "k44.grp"});
  REQUIRE(tc.code == 0);
  CHECK(tc.out.find("order 64") != std::string::npos);
  // Relabel t, l, r for the type-1 construction.
  LabeledGenerators g = parse_group_file(slurp(dir / "k44.grp"));
  g = LabeledGenerators({"tau", "lambda", "theta1"}, g.generators);
  std::ofstream(dir / "k44t.grp") << format_group_file(g);
  const Run c = run({"construct", "--type", "1", "--group", dir / "k44t.grp"});
  REQUIRE(c.code == 0);
  CHECK(load_map(c.out).size() == 64);
  CHECK(run({"construct", "--type", "2", "--group", dir / "k44t.grp"}).code == 1);

  std::ofstream(dir / "free.pres") << "gens a b\nrel a^2\nrel b^2\n";
  CHECK(run({"todd-coxeter", dir / "free.pres", "--max-cosets", "100"}).code == 2);
}

TEST_CASE("error exit codes") {
  TempDir dir;
  CHECK(run({"analyze", dir / "missing.map"}).code == 1);
  std::ofstream(dir / "bad.map") << "flags 2\nT 1 1\nL 0 1\nR 0 1\nroot 0\n";
  CHECK(run({"analyze", dir / "bad.map"}).code == 1);
  CHECK(run({"build", "dm13"}).code == 1);
  CHECK(run({"build", "dm6"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("census command is deterministic") {
  TempDir dir;
  const Run a = run({"enum-reflexible", "--max-order", "24", "--context-bound", "8", "--out", dir / "a"});
  const Run b = run({"enum-reflexible", "--max-order", "24", "--context-bound", "8", "--out", dir / "b"});
  CHECK((a.code == 0 || a.code == 2));
  CHECK(a.code == b.code);
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir.path / "a")) names.push_back(entry.path().filename().string());
  std::sort(names.begin(), names.end());
  REQUIRE(!names.empty());
  for (const auto& n : names) CHECK(slurp(dir.path / "a" / n) == slurp(dir.path / "b" / n));
  std::size_t b_count = 0;
  for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dir.path / "b")) ++b_count;
  CHECK(b_count == names.size());
  const auto manifest = nlohmann::json::parse(slurp(dir.path / "a" / "manifest.json"));
  CHECK(manifest.contains("skipped"));
  CHECK(manifest.contains("incompleteness"));
  for (const auto& n : names)
    if (n.size() > 4 && n.substr(n.size() - 4) == ".map") CHECK(is_reflexible(load_map(slurp(dir.path / "a" / n))));
}

TEST_CASE("installed binary runs") {
  const std::string cmd = std::string(FLAGMAP_CLI_BINARY) + " build dm1 > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
}

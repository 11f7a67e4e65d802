#include <doctest.h>

#include <set>

#include <random>

#include "support.hpp"

using namespace flagmap;

namespace {

const char* dm12_text = "flags 4\nT 1 0 3 2\nL 2 3 0 1\nR 3 2 1 0\nroot 0\n";

ErrorKind kind_of(const std::string& text) {
  try {
    load_map(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("map files") {
  const RootedMap m = load_map(dm12_text);
  CHECK(m.size() == 4);
  CHECK(context_vector(m) == degenerate_vector(12));
  CHECK(load_map(save_map(m)) == canonical(m));
  CHECK(save_map(load_map(save_map(m))) == save_map(m));

  CHECK(kind_of("flags 2\nT 1 1\nL 0 1\nR 0 1\nroot 0\n") == ErrorKind::Format);
  CHECK(kind_of("flags 4\nT 1 0 3 2\nL 0 1 2 3\nR 0 1 2 3\nroot 0\n") == ErrorKind::InvariantViolation);
  CHECK(kind_of("flags 4\nT 1 0 3 2\nL 1 2 3 0\nR 0 1 2 3\nroot 0\n") == ErrorKind::InvariantViolation);
  // (TL)^2 fails.
  CHECK(kind_of("flags 3\nT 1 0 2\nL 0 2 1\nR 0 1 2\nroot 0\n") == ErrorKind::InvariantViolation);
  CHECK(kind_of("flags 4\nT 1 0 3 2\nL 2 3 0 1\nR 0 1 2 3\nroot 9\n") == ErrorKind::InvariantViolation);
  CHECK(kind_of("flags 4\nT 1 0 3 2\nR 0 1 2 3\nroot 0\n") == ErrorKind::Format);
  try {
    load_map("flags 4\nT 1 0 3 2\nL 3 2 1 0\nR 0 1 2 3\nroot 0\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(TL)^2") != std::string::npos);
  }
}

TEST_CASE("canonical save is stable under relabelling") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const RootedMap m = testing::random_map(rng, 4);
    std::vector<Point> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Permutation s(perm);
    const RootedMap relabelled(m.t().conjugate_by(s), m.l().conjugate_by(s), m.r().conjugate_by(s), s[m.root()]);
    CHECK(save_map(relabelled) == save_map(m));
    CHECK(canonical(m).root() == 0);
  }
}

TEST_CASE("cells and surface") {
  const SurfaceInfo tet = cells_and_surface(testing::tetrahedron());
  CHECK(tet.cells.vertices.size() == 4);
  CHECK(tet.cells.edges.size() == 6);
  CHECK(tet.cells.faces.size() == 4);
  CHECK(tet.euler_characteristic == 2);
  CHECK(tet.orientability == Orientability::Orientable);
  CHECK(tet.signed_genus == 0);

  const SurfaceInfo d2 = cells_and_surface(testing::delta(2));
  CHECK(d2.orientability == Orientability::NonOrientable);
  CHECK(d2.signed_genus == -1);

  CHECK(cells_and_surface(testing::dm(9)).orientability == Orientability::BoundaryDegenerate);
  CHECK(cells_and_surface(load_map(dm12_text)).orientability == Orientability::NonOrientable);
}

TEST_CASE("edge orbits have size 1, 2 or 4 and duality keeps Euler characteristic") {
  std::mt19937 rng(12);
  std::vector<RootedMap> maps = testing::sample_maps();
  for (int i = 0; i < 10; ++i) maps.push_back(testing::random_map(rng, 3 + i % 4, 0.0));
  for (const auto& m : maps) {
    const SurfaceInfo s = cells_and_surface(m);
    for (const auto& e : s.cells.edges.blocks) CHECK((e.size() == 1 || e.size() == 2 || e.size() == 4));
    const RootedMap d = dual(m);
    const SurfaceInfo sd = cells_and_surface(d);
    CHECK(sd.euler_characteristic == s.euler_characteristic);
    CHECK(sd.cells.vertices.size() == s.cells.faces.size());
    CHECK(sd.cells.faces.size() == s.cells.vertices.size());
    // Petrie circuits of the dual are those of m, flag for flag.
    auto sorted = [](std::vector<std::vector<Point>> p) {
      for (auto& b : p) std::sort(b.begin(), b.end());
      std::sort(p.begin(), p.end());
      return p;
    };
    CHECK(sorted(sd.cells.petrie.blocks) == sorted(s.cells.petrie.blocks));
  }
}

TEST_CASE("triality") {
  const RootedMap tet = testing::tetrahedron();
  const GenusSymbol g = genus_symbol(tet);
  CHECK(g.genus == std::array<long long, 6>{0, 0, -1, -1, -1, -1});
  CHECK(g.iso == std::array<int, 6>{1, 1, 3, 3, 5, 5});
  CHECK(g.hexagonal == 3);
  CHECK(triality_class(tet).size() == 3);

  const RootedMap m = testing::k44_torus();
  const GenusSymbol s = genus_symbol(m);
  CHECK(s.genus == std::array<long long, 6>{1, 1, 1, 1, 1, 1});
  CHECK(s.hexagonal == 1);

  for (const auto& x : testing::sample_maps()) {
    CHECK(isomorphic(dual(dual(x)), x));
    CHECK(isomorphic(petrie(petrie(x)), x));
    RootedMap y = x;
    for (int i = 0; i < 3; ++i) y = petrie(dual(y));
    CHECK(isomorphic(y, x, IsoMode::Generalized));
    const auto cls = triality_class(x);
    CHECK((cls.size() == 1 || cls.size() == 2 || cls.size() == 3 || cls.size() == 6));
    const GenusSymbol gs = genus_symbol(x);
    CHECK(gs.hexagonal == static_cast<int>(cls.size()));
  }
}

TEST_CASE("isomorphisms") {
  const RootedMap e3 = testing::epsilon(3);
  const RootedMap d3 = testing::delta(3);
  const auto self = isomorphism(e3, e3);
  REQUIRE(self);
  CHECK(self->is_identity());
  CHECK(!isomorphic(e3, d3));
  CHECK(!isomorphic(e3, d3, IsoMode::Generalized));
  CHECK(isomorphic(petrie(e3), d3));
}

TEST_CASE("automorphisms") {
  const RootedMap tet = testing::tetrahedron();
  CHECK(automorphism_group(tet).order() == 24);
  CHECK(is_reflexible(tet));

  const RootedMap q = testing::path_quotient();
  CHECK(!is_reflexible(q));
  const Orbits o = automorphism_group(q).orbits();
  CHECK(o.size() == 2);

  const RootedMap dm1 = testing::dm(1);
  CHECK(automorphism_group(dm1).order() == 1);
  CHECK(is_reflexible(dm1));
}

TEST_CASE("automorphism group is semiregular and bounded by Mon") {
  std::mt19937 rng(13);
  std::vector<RootedMap> maps = testing::sample_maps();
  for (int i = 0; i < 15; ++i) maps.push_back(testing::random_map(rng, 2 + i % 4));
  for (const auto& m : maps) {
    const auto autos = automorphisms(m);
    std::set<Point> images;
    for (const auto& a : autos) CHECK(images.insert(a[m.root()]).second);
    const auto aut = automorphism_group(m).order();
    const auto mon = m.monodromy().order();
    CHECK(aut == autos.size());
    CHECK(m.size() % aut == 0);
    CHECK(aut <= m.size());
    CHECK(m.size() <= mon);
    CHECK((aut == m.size()) == (mon == m.size()));
    CHECK((aut == m.size()) == is_reflexible(m));
  }
}

TEST_CASE("rerooting") {
  const RootedMap tet = testing::tetrahedron();
  CHECK(tet.reroot(tet.root()) == tet);
  for (Point x = 0; x < tet.size(); x += 5) CHECK(isomorphic(tet.reroot(x), tet));

  const RootedMap q = testing::path_quotient();
  const Orbits o = automorphism_group(q).orbits();
  for (Point x = 0; x < q.size(); ++x)
    for (Point y = 0; y < q.size(); ++y)
      if (o.block_of[x] != o.block_of[y]) CHECK(!isomorphic(q.reroot(x), q.reroot(y)));

  const auto simple = simple_reroots(tet);
  CHECK(simple[1].root() == tet.act(tet.root(), "T"));
  CHECK(simple[2].root() == tet.act(tet.root(), "L"));
  CHECK(simple[3].root() == tet.act(tet.root(), "TL"));
}

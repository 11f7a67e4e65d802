#include <doctest.h>

#include <random>
#include <unordered_map>

#include "support.hpp"

using namespace flagmap;

namespace {

NamedSet named(std::initializer_list<Named> list) {
  NamedSet s;
  for (Named a : list) s.set(static_cast<std::size_t>(a));
  return s;
}

// Left multiplication by each element of g permutes the constructed flags
// as automorphisms, and the blocks {(x, s)} regularly.
void check_block_regularity(const LabeledGenerators& g, const RootedMap& m) {
  const auto elems = g.group().elements();
  const std::size_t width = m.size() / elems.size();
  REQUIRE(width * elems.size() == m.size());
  std::unordered_map<Permutation, Point, PermutationHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Point>(i));
  for (const auto& h : elems) {
    std::vector<Point> images(m.size());
    for (std::size_t e = 0; e < elems.size(); ++e)
      for (std::size_t off = 0; off < width; ++off) images[e * width + off] = index.at(h * elems[e]) * width + off;
    const Permutation a(images);
    CHECK(is_automorphism(m, a));
    if (!h.is_identity()) CHECK(a[0] / width != 0);
  }
}

}  // namespace

TEST_CASE("named automorphisms") {
  CHECK(name_of(Named::SigmaX1) == "sigma_x1");
  CHECK(defining_word(Named::SigmaX2) == "ltrl");
  CHECK(defining_word(Named::Theta4) == "ltrtl");
  CHECK(named_from_label("theta3") == Named::Theta3);
  CHECK(!named_from_label("theta5"));
  CHECK(named_automorphisms_present(testing::tetrahedron()).all());
  for (const auto& m : testing::sample_maps())
    if (is_reflexible(m)) CHECK(named_automorphisms_present(m).all());
  // Each name is present exactly when some automorphism sends the root to root.W.
  const RootedMap path = testing::path_quotient();
  const NamedSet present = named_automorphisms_present(path);
  for (std::size_t i = 0; i < named_count; ++i) {
    const Named a = static_cast<Named>(i);
    CHECK(present.test(i) == automorphism_to(path, path.act(path.root(), defining_word(a))).has_value());
  }
  CHECK(!present.all());
}

TEST_CASE("type table rows") {
  CHECK(type_labels.size() == 14);
  CHECK(required_set("1").all());
  CHECK(required_set("2") == named({Named::Tau, Named::SigmaX1, Named::SigmaX2, Named::Theta1, Named::Theta2,
                                    Named::Theta3, Named::Theta4}));
  CHECK(required_set("2P") == named({Named::Phi, Named::Gamma1, Named::Gamma2, Named::Theta1, Named::Theta2,
                                     Named::Theta3, Named::Theta4}));
  CHECK(required_set("2ex") ==
        named({Named::Tau, Named::SigmaF1, Named::SigmaF2, Named::Gamma1, Named::Gamma2}));
  CHECK(required_set("2Pex") ==
        named({Named::Phi, Named::SigmaX1, Named::SigmaX2, Named::SigmaF1, Named::SigmaF2}));
  CHECK(required_set("3") == named({Named::Theta1, Named::Theta2, Named::Theta3, Named::Theta4}));
  CHECK(required_set("4*") == named({Named::SigmaF1, Named::Theta3, Named::Theta4}));
  CHECK(required_set("4P") == named({Named::Gamma1, Named::Theta2, Named::Theta3}));
  CHECK(required_set("5") == named({Named::SigmaX1, Named::SigmaX2}));
  CHECK(required_set("5P") == named({Named::Gamma1, Named::Gamma2}));
  CHECK(!is_type_label("6"));
}

TEST_CASE("type transforms and the partial order") {
  CHECK(type_dual("2") == "2*");
  CHECK(type_petrie("2") == "2");
  CHECK(type_petrie("2*") == "2P");
  CHECK(type_dual("1") == "1");
  CHECK(type_petrie("3") == "3");
  for (auto t : type_labels) {
    CHECK(type_precedes(t, "1"));
    CHECK(type_dual(type_dual(t)) == t);
    CHECK(type_petrie(type_petrie(t)) == t);
    // The required set moves with the transform: Du swaps T and L in the words.
    CHECK(required_set(type_dual(t)).count() == required_set(t).count());
  }
  CHECK(type_precedes("5", "2"));
  CHECK(type_precedes("3", "2"));
  CHECK(type_precedes("4", "2"));
  CHECK(!type_precedes("2", "3"));
  CHECK(type_precedes("5P", "2ex"));
}

TEST_CASE("classification") {
  const auto tet = classify_type(testing::tetrahedron());
  REQUIRE(tet);
  CHECK(tet->label == "1");
  CHECK(tet->rooting == 0);
  CHECK(tet->present.all());
  const auto e5 = classify_type(testing::epsilon(5));
  REQUIRE(e5);
  CHECK(e5->label == "1");
  // The quotient is a path with two edges on the sphere: the reflection
  // through the middle vertex swaps the edges, but no automorphism maps a
  // leaf flag to a middle flag.
  const RootedMap path = testing::path_quotient();
  CHECK(is_edge_transitive(path));
  CHECK(automorphism_group(path).orbits().size() == 2);
  const auto t = classify_type(path);
  REQUIRE(t);
  CHECK(t->label == "2");
  CHECK(!t->present.all());

  // Classification succeeds exactly on the edge-transitive maps.
  std::mt19937 rng(5);
  int rejected = 0;
  for (int i = 0; i < 30; ++i) {
    const RootedMap m = testing::random_map(rng, 2 + i % 3);
    const bool et = is_edge_transitive(m);
    CHECK(classify_type(m).has_value() == et);
    if (!et) {
      ++rejected;
      CHECK_THROWS_AS(map_symbol(m), Error);
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("map symbols") {
  const MapSymbol tet = map_symbol(testing::tetrahedron());
  CHECK(tet.to_string() == "<3;3;4>");
  CHECK(!tet.advisory);
  const MapSymbol k44 = map_symbol(testing::k44_torus());
  CHECK(k44.to_string() == "<4;4;4>");
  CHECK(symbol_conditions_hold("1", k44));
  CHECK(map_symbol(testing::dm(9)).advisory);
  CHECK_THROWS_AS(map_symbol(testing::dm(9), true), Error);
  const MapSymbol path = map_symbol(testing::path_quotient());
  CHECK(path.to_string() == "<1,2;4;4>");
  CHECK(symbol_conditions_hold("2", path));
}

TEST_CASE("construction, type 1 round trip") {
  for (const auto& m : {testing::tetrahedron(), testing::epsilon(4), testing::dm(6, 5), testing::delta(3)}) {
    const Enumeration e{m.labeled(), m.size()};
    const LabeledGenerators g({"tau", "lambda", "theta1"}, e.action.generators);
    const ConstructionReport r = construct_from_group("1", g);
    CHECK(isomorphic(r.map, m));
    CHECK(r.exact);
    check_block_regularity(g, r.map);
  }
}

TEST_CASE("construction, type 2 from S3") {
  const LabeledGenerators g({"tau", "theta1", "theta2"}, {Permutation::from_cycles(3, {{0, 1}}),
                                                         Permutation::from_cycles(3, {{0, 1}}),
                                                         Permutation::from_cycles(3, {{1, 2}})});
  const ConstructionReport r = construct_from_group("2", g);
  CHECK(r.map.size() == 12);
  CHECK(r.requested == "2");
  check_block_regularity(g, r.map);
  // The report is whatever classification finds; exactness must match it.
  CHECK(r.exact == (r.detected && *r.detected == "2"));
  if (r.detected) CHECK(type_precedes("2", *r.detected));
}

TEST_CASE("construction, type 3 and checks on the input") {
  const LabeledGenerators g(
      {"theta1", "theta2", "theta3", "theta4"},
      {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{1, 2}}),
       Permutation::from_cycles(4, {{2, 3}}), Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  const ConstructionReport r = construct_from_group("3", g);
  CHECK(r.map.size() == 4 * 24);
  check_block_regularity(g, r.map);

  try {
    construct_from_group("3", LabeledGenerators({"tau"}, {Permutation(2)}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LabelMismatch);
  }
  try {
    construct_from_group("2", LabeledGenerators({"tau", "theta1", "theta2"},
                                                {Permutation::from_cycles(3, {{0, 1, 2}}), Permutation(3),
                                                 Permutation(3)}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RelationViolation);
  }
  CHECK_THROWS_AS(construct_from_group("2*", g), Error);
}

TEST_CASE("constructed samples of every constructible type") {
  // Small groups from presentations, relabelled for each type.
  struct Case {
    const char* type;
    const char* presentation;
    std::vector<std::string> labels;
  };
  const std::vector<Case> cases{
      {"2", "gens a b c\nrel a^2\nrel b^2\nrel c^2\nrel (a*b)^3\nrel (b*c)^2\nrel (a*c)^4\n", {"tau", "theta1", "theta2"}},
      {"2ex", "gens a b\nrel a^2\nrel b^4\nrel (a*b)^4\nrel (a*b^2)^4\n", {"tau", "sigma_f1"}},
      {"3", "gens a b c d\nrel a^2\nrel b^2\nrel c^2\nrel d^2\nrel (a*b)^2\nrel (c*d)^2\nrel (a*c)^3\nrel (b*d)^3\nrel (a*d)^2\nrel (b*c)^2\n",
       {"theta1", "theta2", "theta3", "theta4"}},
      {"4", "gens a b c\nrel a^4\nrel b^2\nrel c^2\nrel (b*c)^2\nrel (a*b)^4\nrel (a*c)^4\nrel (a*b*c)^2\n", {"sigma_x1", "theta2", "theta4"}},
      {"5", "gens a b\nrel a^3\nrel b^3\nrel (a*b)^2\n", {"sigma_x1", "sigma_x2"}},
  };
  for (const auto& c : cases) {
    const Enumeration e = todd_coxeter(parse_presentation(c.presentation));
    const LabeledGenerators g(c.labels, e.action.generators);
    const ConstructionReport r = construct_from_group(c.type, g);
    check_block_regularity(g, r.map);
    // |Aut| <= flags <= |Mon|, equality together.
    const auto aut = automorphism_group(r.map).order();
    const auto mon = r.map.monodromy().order();
    CHECK(aut <= r.map.size());
    CHECK(r.map.size() <= mon);
    CHECK((aut == r.map.size()) == (mon == r.map.size()));
    if (r.detected) {
      CHECK(type_precedes(c.type, *r.detected));
      // The four simple re-rootings multiply to a reflexible map with the same Mon.
      const auto roots = simple_reroots(r.map);
      const RootedMap prod = parallel_product_all(roots);
      CHECK(is_reflexible(prod));
      CHECK(prod.monodromy().order() == mon);
      // Du and Pe move the type as the table says.
      const auto du = classify_type(dual(r.map));
      const auto pe = classify_type(petrie(r.map));
      REQUIRE(du);
      REQUIRE(pe);
      CHECK(du->label == type_dual(*r.detected));
      CHECK(pe->label == type_petrie(*r.detected));
      const MapSymbol s = map_symbol(classify_type(r.map)->rooted);
      if (!s.advisory) CHECK(symbol_conditions_hold(*r.detected, s));
      // Quotients have a type at least as large.
      for (const auto& h : minimal_normal_subgroups(r.map.monodromy())) {
        const auto qt = classify_type(monodromy_quotient(r.map, h).target);
        REQUIRE(qt);
        CHECK(type_precedes(*r.detected, qt->label));
      }
    }
  }
}

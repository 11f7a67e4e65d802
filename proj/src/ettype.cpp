#include "flagmap/ettype.hpp"

#include <algorithm>
#include <unordered_map>

#include "flagmap/fpres.hpp"

namespace flagmap {

namespace {

struct NamedInfo {
  std::string_view name;
  std::string_view word;
};

constexpr NamedInfo named_table[named_count] = {
    {"sigma_x1", "rt"},  {"sigma_x2", "ltrl"}, {"sigma_f1", "lr"},   {"sigma_f2", "trtl"},
    {"gamma1", "ltr"},   {"gamma2", "trl"},    {"theta1", "r"},      {"theta2", "lrl"},
    {"theta3", "trt"},   {"theta4", "ltrtl"},  {"tau", "t"},         {"lambda", "l"},
    {"phi", "lt"},
};

NamedSet set_of(std::initializer_list<Named> names) {
  NamedSet s;
  for (Named n : names) s.set(static_cast<std::size_t>(n));
  return s;
}

using N = Named;

const NamedSet type_sets[14] = {
    NamedSet().set(),
    set_of({N::Tau, N::SigmaX1, N::SigmaX2, N::Theta1, N::Theta2, N::Theta3, N::Theta4}),
    set_of({N::Lambda, N::SigmaF1, N::SigmaF2, N::Theta1, N::Theta2, N::Theta3, N::Theta4}),
    set_of({N::Phi, N::Gamma1, N::Gamma2, N::Theta1, N::Theta2, N::Theta3, N::Theta4}),
    set_of({N::Tau, N::SigmaF1, N::SigmaF2, N::Gamma1, N::Gamma2}),
    set_of({N::Lambda, N::SigmaX1, N::SigmaX2, N::Gamma1, N::Gamma2}),
    set_of({N::Phi, N::SigmaX1, N::SigmaX2, N::SigmaF1, N::SigmaF2}),
    set_of({N::Theta1, N::Theta2, N::Theta3, N::Theta4}),
    set_of({N::SigmaX1, N::Theta2, N::Theta4}),
    set_of({N::SigmaF1, N::Theta3, N::Theta4}),
    set_of({N::Gamma1, N::Theta2, N::Theta3}),
    set_of({N::SigmaX1, N::SigmaX2}),
    set_of({N::SigmaF1, N::SigmaF2}),
    set_of({N::Gamma1, N::Gamma2}),
};

std::size_t type_index(std::string_view t) {
  for (std::size_t i = 0; i < type_labels.size(); ++i)
    if (type_labels[i] == t) return i;
  throw Error(ErrorKind::InvalidArgument, "unknown edge-transitive type '" + std::string(t) + "'");
}

// Splits "2*ex" into base "2", variant '*', suffix "ex".
struct TypeParts {
  std::string base;
  char variant = 0;
  std::string suffix;
};

TypeParts split(std::string_view t) {
  (void)type_index(t);
  TypeParts p;
  p.base = std::string(1, t[0]);
  std::size_t i = 1;
  if (i < t.size() && (t[i] == '*' || t[i] == 'P')) p.variant = t[i++];
  p.suffix = std::string(t.substr(i));
  return p;
}

std::string join(const TypeParts& p) {
  if (p.base == "1" || p.base == "3") return p.base;
  std::string s = p.base;
  if (p.variant) s += p.variant;
  return s + p.suffix;
}

}  // namespace

const std::array<std::string_view, 14> type_labels = {
    "1", "2", "2*", "2P", "2ex", "2*ex", "2Pex", "3", "4", "4*", "4P", "5", "5*", "5P"};

std::string_view name_of(Named a) { return named_table[static_cast<std::size_t>(a)].name; }
std::string_view defining_word(Named a) { return named_table[static_cast<std::size_t>(a)].word; }

std::optional<Named> named_from_label(std::string_view label) {
  for (std::size_t i = 0; i < named_count; ++i)
    if (named_table[i].name == label) return static_cast<Named>(i);
  return std::nullopt;
}

std::string format_named_set(const NamedSet& s) {
  std::string out;
  for (std::size_t i = 0; i < named_count; ++i) {
    if (!s.test(i)) continue;
    if (!out.empty()) out += ',';
    out += named_table[i].name;
  }
  return out;
}

NamedSet named_automorphisms_present(const RootedMap& m) {
  NamedSet s;
  for (std::size_t i = 0; i < named_count; ++i)
    if (automorphism_to(m, m.act(m.root(), named_table[i].word))) s.set(i);
  return s;
}

bool is_type_label(std::string_view label) {
  return std::find(type_labels.begin(), type_labels.end(), label) != type_labels.end();
}

NamedSet required_set(std::string_view type) { return type_sets[type_index(type)]; }

bool type_precedes(std::string_view t, std::string_view u) {
  const NamedSet a = required_set(t), b = required_set(u);
  return (a & b) == a;
}

std::string type_dual(std::string_view t) {
  TypeParts p = split(t);
  if (p.variant == 0)
    p.variant = '*';
  else if (p.variant == '*')
    p.variant = 0;
  return join(p);
}

std::string type_petrie(std::string_view t) {
  TypeParts p = split(t);
  if (p.variant == '*')
    p.variant = 'P';
  else if (p.variant == 'P')
    p.variant = '*';
  return join(p);
}

bool is_edge_transitive(const RootedMap& m) {
  const std::size_t n = m.size();
  const Orbits aut = automorphism_group(m).orbits();
  const Permutation e[] = {m.t(), m.l()};
  const Orbits edges = orbits(n, e);
  std::vector<bool> reached(aut.size(), false);
  for (Point x : edges.blocks[edges.block_of[m.root()]]) reached[aut.block_of[x]] = true;
  for (const auto& edge : edges.blocks)
    if (std::none_of(edge.begin(), edge.end(), [&](Point x) { return reached[aut.block_of[x]]; }))
      return false;
  return true;
}

std::optional<TypeResult> classify_type(const RootedMap& m) {
  if (!is_edge_transitive(m)) return std::nullopt;
  const auto reroots = simple_reroots(m);
  for (int i = 0; i < 4; ++i) {
    const NamedSet present = named_automorphisms_present(reroots[i]);
    for (std::size_t t = 0; t < type_labels.size(); ++t)
      if (type_sets[t] == present) return TypeResult{std::string(type_labels[t]), i, reroots[i], present};
  }
  return std::nullopt;
}

std::string MapSymbol::to_string() const {
  auto part = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return "<" + part(a) + ";" + part(b) + ";" + part(c) + ">";
}

MapSymbol map_symbol(const RootedMap& m, bool strict) {
  if (!is_edge_transitive(m)) throw Error(ErrorKind::NotEdgeTransitive, "map is not edge-transitive");
  MapSymbol s;
  s.advisory = boundary_degenerate(m);
  if (s.advisory && strict)
    throw Error(ErrorKind::DegenerateSymbol, "map symbol is not certified for degenerate maps");

  const Orbits aut = automorphism_group(m).orbits();
  const SurfaceInfo info = cells_and_surface(m);
  const Point root = m.root();

  // Cells through the root edge: the one containing the root, and the one
  // containing root.L (vertices) or root.T (faces, Petrie circuits).
  auto entry = [&](const Orbits& cells, Point other) {
    const auto& c0 = cells.blocks[cells.block_of[root]];
    const auto& c1 = cells.blocks[cells.block_of[other]];
    const std::uint64_t d0 = (c0.size() + 1) / 2, d1 = (c1.size() + 1) / 2;
    const bool same = std::any_of(c1.begin(), c1.end(),
                                  [&](Point x) { return aut.block_of[x] == aut.block_of[root]; });
    return same ? std::vector<std::uint64_t>{d0} : std::vector<std::uint64_t>{d0, d1};
  };
  s.a = entry(info.cells.vertices, m.l()[root]);
  s.b = entry(info.cells.faces, m.t()[root]);
  s.c = entry(info.cells.petrie, m.t()[root]);
  return s;
}

bool symbol_conditions_hold(std::string_view type, const MapSymbol& s) {
  auto all = [](const std::vector<std::uint64_t>& v, std::uint64_t d) {
    return std::all_of(v.begin(), v.end(), [d](std::uint64_t x) { return x % d == 0; });
  };
  const TypeParts p = split(type);
  // The distinguished entry is a for the plain form, b for *, c for P.
  const int special = p.variant == '*' ? 1 : p.variant == 'P' ? 2 : 0;
  const std::vector<std::uint64_t>* e[3] = {&s.a, &s.b, &s.c};
  const auto& x = *e[special];
  const auto& y = *e[(special + 1) % 3];
  const auto& z = *e[(special + 2) % 3];
  if (p.base == "1") return true;
  if (p.base == "3") return all(s.a, 2) && all(s.b, 2) && all(s.c, 2);
  if (p.base == "2" && p.suffix == "ex") return all(x, 2);
  if (p.base == "2" || p.base == "5") return all(y, 2) && all(z, 2);
  if (p.base == "4") return all(x, 2) && all(y, 4) && all(z, 4);
  return false;
}

// ---- construction ---------------------------------------------------------

std::vector<std::string> construction_labels(std::string_view type) {
  if (type == "1") return {"tau", "lambda", "theta1"};
  if (type == "2") return {"tau", "theta1", "theta2"};
  if (type == "2ex") return {"tau", "sigma_f1"};
  if (type == "3") return {"theta1", "theta2", "theta3", "theta4"};
  if (type == "4") return {"sigma_x1", "theta2", "theta4"};
  if (type == "5") return {"sigma_x1", "sigma_x2"};
  throw Error(ErrorKind::InvalidArgument,
              "construction is defined for types 1, 2, 2ex, 3, 4, 5, not '" + std::string(type) + "'");
}

namespace {

std::vector<std::string_view> underlined_relations(std::string_view type) {
  if (type == "1") return {"tau^2", "lambda^2", "theta1^2", "(tau*lambda)^2"};
  if (type == "2") return {"tau^2", "theta1^2", "theta2^2"};
  if (type == "2ex") return {"tau^2"};
  if (type == "3") return {"theta1^2", "theta2^2", "theta3^2", "theta4^2"};
  if (type == "4") return {"theta2^2", "theta4^2"};
  return {};
}

}  // namespace

ConstructionReport construct_from_group(std::string_view type, const LabeledGenerators& g,
                                        std::size_t max_elements) {
  const auto labels = construction_labels(type);
  {
    auto want = labels;
    auto have = g.labels;
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) {
      std::string w;
      for (const auto& l : labels) w += (w.empty() ? "" : ", ") + l;
      throw Error(ErrorKind::LabelMismatch, "type " + std::string(type) + " needs generators " + w);
    }
  }
  for (std::string_view rel : underlined_relations(type))
    if (!evaluate(g, parse_word(rel)).is_identity())
      throw Error(ErrorKind::RelationViolation, "relation " + std::string(rel) + " does not hold");

  GroupLimits limits;
  limits.max_elements = max_elements;
  limits.max_degree = std::max(limits.max_degree, g.degree());
  const auto elems = g.group(limits).elements();
  std::unordered_map<Permutation, Point, PermutationHash> index;
  index.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Point>(i));

  // Right multiplication tables.
  auto table = [&](const Permutation& x) {
    std::vector<Point> t(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) t[i] = index.at(elems[i] * x);
    return t;
  };
  auto by = [&](std::string_view label) { return table(g.at(label)); };
  auto by_inv = [&](std::string_view label) { return table(g.at(label).inverse()); };

  const std::size_t order = elems.size();
  std::size_t width = 1;
  if (type == "2" || type == "2ex") width = 2;
  if (type == "3" || type == "4" || type == "5") width = 4;
  const std::size_t n = order * width;
  std::vector<Point> T(n), L(n), R(n);
  auto flag = [&](std::size_t e, std::size_t off) { return static_cast<Point>(e * width + off); };

  if (width == 1) {
    const auto tau = by("tau"), lam = by("lambda"), th1 = by("theta1");
    for (std::size_t e = 0; e < order; ++e) {
      T[e] = tau[e];
      L[e] = lam[e];
      R[e] = th1[e];
    }
  } else if (width == 2) {
    const auto tau = by("tau");
    std::vector<Point> r0, r1;
    std::size_t j0 = 0, j1 = 1;
    if (type == "2") {
      r0 = by("theta1");
      r1 = by("theta2");
    } else {
      r0 = by_inv("sigma_f1");
      r1 = by("sigma_f1");
      j0 = 1;
      j1 = 0;
    }
    for (std::size_t e = 0; e < order; ++e) {
      for (std::size_t j = 0; j < 2; ++j) {
        T[flag(e, j)] = flag(tau[e], j);
        L[flag(e, j)] = flag(e, 1 - j);
      }
      R[flag(e, 0)] = flag(r0[e], j0);
      R[flag(e, 1)] = flag(r1[e], j1);
    }
  } else {
    // R on (g, j, k): right factor and target offset per (j, k).
    std::array<std::vector<Point>, 4> mult;
    std::array<std::size_t, 4> target{};
    if (type == "3") {
      mult = {by("theta1"), by("theta2"), by("theta3"), by("theta4")};
      target = {0, 1, 2, 3};
    } else if (type == "4") {
      mult = {by("sigma_x1"), by("theta2"), by_inv("sigma_x1"), by("theta4")};
      target = {2, 1, 0, 3};
    } else {
      mult = {by("sigma_x1"), by_inv("sigma_x2"), by_inv("sigma_x1"), by("sigma_x2")};
      target = {2, 3, 0, 1};
    }
    for (std::size_t e = 0; e < order; ++e) {
      for (std::size_t off = 0; off < 4; ++off) {
        T[flag(e, off)] = flag(e, off ^ 2u);
        L[flag(e, off)] = flag(e, off ^ 1u);
        R[flag(e, off)] = flag(mult[off][e], target[off]);
      }
    }
  }

  std::optional<RootedMap> m;
  try {
    m.emplace(Permutation(std::move(T)), Permutation(std::move(L)), Permutation(std::move(R)), 0);
  } catch (const Error& err) {
    throw Error(ErrorKind::NonFaithfulAction,
                std::string("group does not yield a map of this type: ") + err.what());
  }
  ConstructionReport rep{*m, std::string(type), std::nullopt, false, named_automorphisms_present(*m)};
  if (auto t = classify_type(*m)) rep.detected = t->label;
  rep.exact = rep.detected == rep.requested;
  return rep;
}

}  // namespace flagmap

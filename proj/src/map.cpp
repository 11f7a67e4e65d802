#include "flagmap/map.hpp"

#include <sstream>

namespace flagmap {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvariantViolation, what);
}

bool is_involution(const Permutation& p) {
  for (std::size_t x = 0; x < p.degree(); ++x)
    if (p[p[static_cast<Point>(x)]] != x) return false;
  return true;
}

}  // namespace

RootedMap::RootedMap(Permutation t, Permutation l, Permutation r, Point root)
    : t_(std::move(t)), l_(std::move(l)), r_(std::move(r)), root_(root) {
  require(t_.degree() >= 1, "map has no flags");
  require(l_.degree() == t_.degree() && r_.degree() == t_.degree(), "T, L, R differ in degree");
  require(root_ < t_.degree(), "root out of range");
  require(is_involution(t_), "T not an involution");
  require(is_involution(l_), "L not an involution");
  require(is_involution(r_), "R not an involution");
  require(is_involution(t_ * l_), "(TL)^2 is not the identity");
  const Permutation gens[] = {t_, l_, r_};
  require(orbits(t_.degree(), gens).is_transitive(), "action not transitive");
}

LabeledGenerators RootedMap::labeled() const { return LabeledGenerators({"t", "l", "r"}, {t_, l_, r_}); }

PermGroup RootedMap::monodromy(GroupLimits limits) const { return PermGroup(size(), {t_, l_, r_}, limits); }

Permutation RootedMap::word(std::string_view w) const {
  Permutation p = Permutation::identity(size());
  for (char c : w) {
    switch (c) {
      case 'T': case 't': p = p * t_; break;
      case 'L': case 'l': p = p * l_; break;
      case 'R': case 'r': p = p * r_; break;
      default: throw Error(ErrorKind::InvalidArgument, std::string("bad letter in map word: ") + c);
    }
  }
  return p;
}

Point RootedMap::act(Point x, std::string_view w) const {
  for (char c : w) {
    switch (c) {
      case 'T': case 't': x = t_[x]; break;
      case 'L': case 'l': x = l_[x]; break;
      case 'R': case 'r': x = r_[x]; break;
      default: throw Error(ErrorKind::InvalidArgument, std::string("bad letter in map word: ") + c);
    }
  }
  return x;
}

RootedMap RootedMap::reroot(Point flag) const {
  if (flag >= size()) throw Error(ErrorKind::InvalidArgument, "flag out of range");
  RootedMap m = *this;
  m.root_ = flag;
  return m;
}

// ---- file format ----------------------------------------------------------

RootedMap load_map(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  long long n = -1;
  long long root = -1;
  std::optional<std::vector<Point>> imgs[3];
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (key == "flags") {
      if (n >= 0) throw Error(ErrorKind::Format, where + "duplicate flags line");
      if (!(ls >> n) || n <= 0) throw Error(ErrorKind::Format, where + "bad flag count");
    } else if (key == "T" || key == "L" || key == "R") {
      if (n < 0) throw Error(ErrorKind::Format, where + "generator line before flags line");
      const int g = key == "T" ? 0 : key == "L" ? 1 : 2;
      if (imgs[g]) throw Error(ErrorKind::Format, where + "duplicate " + key + " line");
      std::vector<Point> v;
      long long x;
      while (ls >> x) {
        if (x < 0 || x >= n) throw Error(ErrorKind::Format, where + "image out of range");
        v.push_back(static_cast<Point>(x));
      }
      if (!ls.eof()) throw Error(ErrorKind::Format, where + "non-numeric image");
      if (static_cast<long long>(v.size()) != n)
        throw Error(ErrorKind::Format, where + "expected " + std::to_string(n) + " images");
      imgs[g] = std::move(v);
      continue;
    } else if (key == "root") {
      if (root >= 0) throw Error(ErrorKind::Format, where + "duplicate root line");
      if (!(ls >> root) || root < 0) throw Error(ErrorKind::Format, where + "bad root");
    } else {
      throw Error(ErrorKind::Format, where + "unknown keyword '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) throw Error(ErrorKind::Format, where + "trailing text");
  }
  if (n < 0) throw Error(ErrorKind::Format, "missing flags line");
  for (int g = 0; g < 3; ++g)
    if (!imgs[g]) throw Error(ErrorKind::Format, std::string("missing ") + "TLR"[g] + " line");
  if (root < 0) throw Error(ErrorKind::Format, "missing root line");
  if (root >= n) throw Error(ErrorKind::InvariantViolation, "root out of range");
  return RootedMap(Permutation(std::move(*imgs[0])), Permutation(std::move(*imgs[1])),
                   Permutation(std::move(*imgs[2])), static_cast<Point>(root));
}

RootedMap canonical(const RootedMap& m) {
  const std::size_t n = m.size();
  std::vector<Point> order{m.root()};
  std::vector<std::int64_t> id(n, -1);
  id[m.root()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int g = 0; g < 3; ++g) {
      Point y = m.generator(g)[order[i]];
      if (id[y] < 0) {
        id[y] = static_cast<std::int64_t>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<Point> img[3];
  for (int g = 0; g < 3; ++g) {
    img[g].resize(n);
    for (std::size_t i = 0; i < n; ++i) img[g][i] = static_cast<Point>(id[m.generator(g)[order[i]]]);
  }
  return RootedMap(Permutation(std::move(img[0])), Permutation(std::move(img[1])),
                   Permutation(std::move(img[2])), 0);
}

std::string save_map(const RootedMap& m) {
  const RootedMap c = canonical(m);
  std::ostringstream out;
  out << "flags " << c.size() << '\n';
  for (int g = 0; g < 3; ++g) {
    out << "TLR"[g];
    for (Point x : c.generator(g).images()) out << ' ' << x;
    out << '\n';
  }
  out << "root " << c.root() << '\n';
  return out.str();
}

// ---- cells and surface ----------------------------------------------------

std::string_view to_string(Orientability o) {
  switch (o) {
    case Orientability::Orientable: return "orientable";
    case Orientability::NonOrientable: return "non-orientable";
    case Orientability::BoundaryDegenerate: return "boundary-degenerate";
  }
  return "unknown";
}

bool boundary_degenerate(const RootedMap& m) {
  return m.t().has_fixed_point() || m.l().has_fixed_point() || m.r().has_fixed_point() ||
         (m.t() * m.l()).has_fixed_point();
}

SurfaceInfo cells_and_surface(const RootedMap& m) {
  const std::size_t n = m.size();
  SurfaceInfo s;
  const Permutation tl = m.t() * m.l();
  {
    const Permutation v[] = {m.t(), m.r()};
    const Permutation e[] = {m.t(), m.l()};
    const Permutation f[] = {m.l(), m.r()};
    const Permutation p[] = {tl, m.r()};
    s.cells = {orbits(n, v), orbits(n, e), orbits(n, f), orbits(n, p)};
  }
  const Permutation ori[] = {m.r() * m.t(), m.r() * m.l()};
  s.orientable_double_cover = orbits(n, ori).size() == 2;
  s.euler_characteristic = static_cast<long long>(s.cells.vertices.size()) -
                           static_cast<long long>(s.cells.edges.size()) +
                           static_cast<long long>(s.cells.faces.size());
  const long long deficit = 2 - s.euler_characteristic;
  s.signed_genus = s.orientable_double_cover ? deficit / 2 : -deficit;
  if (boundary_degenerate(m))
    s.orientability = Orientability::BoundaryDegenerate;
  else
    s.orientability = s.orientable_double_cover ? Orientability::Orientable : Orientability::NonOrientable;
  return s;
}

// ---- triality -------------------------------------------------------------

RootedMap dual(const RootedMap& m) { return RootedMap(m.l(), m.t(), m.r(), m.root()); }

RootedMap petrie(const RootedMap& m) { return RootedMap(m.t(), m.t() * m.l(), m.r(), m.root()); }

std::array<RootedMap, 6> triality_members(const RootedMap& m) {
  RootedMap du = dual(m);
  RootedMap pe = petrie(m);
  RootedMap pedu = petrie(du);
  RootedMap dupe = dual(pe);
  RootedMap dupedu = dual(pedu);
  return {m, du, pe, pedu, dupe, dupedu};
}

GenusSymbol genus_symbol(const RootedMap& m) {
  const auto members = triality_members(m);
  GenusSymbol g;
  for (int i = 0; i < 6; ++i) {
    g.genus[i] = cells_and_surface(members[i]).signed_genus;
    g.advisory = g.advisory || boundary_degenerate(members[i]);
    g.iso[i] = i + 1;
    for (int j = 0; j < i; ++j) {
      if (g.iso[j] == j + 1 && isomorphic(members[j], members[i], IsoMode::Generalized)) {
        g.iso[i] = j + 1;
        break;
      }
    }
    if (g.iso[i] == i + 1) ++g.hexagonal;
  }
  return g;
}

std::vector<RootedMap> triality_class(const RootedMap& m) {
  const auto members = triality_members(m);
  const GenusSymbol g = genus_symbol(m);
  std::vector<RootedMap> out;
  for (int i = 0; i < 6; ++i)
    if (g.iso[i] == i + 1) out.push_back(members[i]);
  return out;
}

// ---- isomorphisms ---------------------------------------------------------

namespace {

// Grows the unique T/L/R-respecting map sending `from` to `to`.
std::optional<Permutation> grow(const RootedMap& m, Point from, const RootedMap& n, Point to) {
  const std::size_t size = m.size();
  constexpr Point unset = static_cast<Point>(-1);
  std::vector<Point> image(size, unset);
  std::vector<bool> used(size, false);
  std::vector<Point> queue{from};
  image[from] = to;
  used[to] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Point x = queue[i];
    for (int g = 0; g < 3; ++g) {
      const Point y = m.generator(g)[x];
      const Point z = n.generator(g)[image[x]];
      if (image[y] == unset) {
        if (used[z]) return std::nullopt;
        image[y] = z;
        used[z] = true;
        queue.push_back(y);
      } else if (image[y] != z) {
        return std::nullopt;
      }
    }
  }
  return Permutation(std::move(image));
}

}  // namespace

std::optional<Permutation> isomorphism(const RootedMap& m, const RootedMap& n, IsoMode mode) {
  if (m.size() != n.size()) return std::nullopt;
  if (mode == IsoMode::Rooted) return grow(m, m.root(), n, n.root());
  for (std::size_t d = 0; d < n.size(); ++d)
    if (auto p = grow(m, m.root(), n, static_cast<Point>(d))) return p;
  return std::nullopt;
}

bool isomorphic(const RootedMap& m, const RootedMap& n, IsoMode mode) {
  return isomorphism(m, n, mode).has_value();
}

std::optional<Permutation> automorphism_to(const RootedMap& m, Point d) {
  if (d >= m.size()) throw Error(ErrorKind::InvalidArgument, "flag out of range");
  return grow(m, m.root(), m, d);
}

std::vector<Permutation> automorphisms(const RootedMap& m) {
  std::vector<Permutation> out;
  for (std::size_t d = 0; d < m.size(); ++d)
    if (auto a = automorphism_to(m, static_cast<Point>(d))) out.push_back(std::move(*a));
  return out;
}

PermGroup automorphism_group(const RootedMap& m) {
  // Aut acts semiregularly, so the root's orbit under the chosen generators
  // identifies the subgroup they generate.
  const std::size_t n = m.size();
  std::vector<Permutation> gens;
  std::vector<bool> reached(n, false);
  reached[m.root()] = true;
  std::vector<Point> orbit{m.root()};
  for (std::size_t d = 0; d < n; ++d) {
    if (reached[d]) continue;
    auto a = automorphism_to(m, static_cast<Point>(d));
    if (!a) continue;
    gens.push_back(std::move(*a));
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : gens) {
        const Point y = g[orbit[i]];
        if (!reached[y]) {
          reached[y] = true;
          orbit.push_back(y);
        }
      }
    }
  }
  return PermGroup(n, std::move(gens));
}

bool is_reflexible(const RootedMap& m) {
  for (std::size_t d = 0; d < m.size(); ++d)
    if (!automorphism_to(m, static_cast<Point>(d))) return false;
  return true;
}

std::array<RootedMap, 4> simple_reroots(const RootedMap& m) {
  const Point id = m.root();
  return {m, m.reroot(m.t()[id]), m.reroot(m.l()[id]), m.reroot(m.l()[m.t()[id]])};
}

}  // namespace flagmap

#include "flagmap/perm.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "flagmap/stab_chain.hpp"

namespace flagmap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::UndeclaredGenerator: return "undeclared-generator";
    case ErrorKind::Format: return "format";
    case ErrorKind::InvariantViolation: return "invariant-violation";
    case ErrorKind::BoundExceeded: return "bound-exceeded";
    case ErrorKind::EnumerationOverflow: return "enumeration-overflow";
    case ErrorKind::StabilizerNotContained: return "stabilizer-not-contained";
    case ErrorKind::NotNormal: return "not-normal";
    case ErrorKind::NotAnAutomorphism: return "not-an-automorphism";
    case ErrorKind::NotReflexible: return "not-reflexible";
    case ErrorKind::NotEdgeTransitive: return "not-edge-transitive";
    case ErrorKind::LabelMismatch: return "label-mismatch";
    case ErrorKind::RelationViolation: return "relation-violation";
    case ErrorKind::NonFaithfulAction: return "non-faithful-action";
    case ErrorKind::DegenerateSymbol: return "degenerate-symbol";
    case ErrorKind::VerificationFailed: return "verification-failed";
  }
  return "unknown";
}

// ---- Permutation ----------------------------------------------------------

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorKind::Format, "image list is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    std::vector<Point> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]])
        throw Error(ErrorKind::Format, "bad cycle");
      used[c[i]] = true;
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::has_fixed_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) return true;
  return false;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree())
    throw Error(ErrorKind::InvalidArgument, "degree mismatch in product");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Permutation Permutation::pow(long long exponent) const {
  const std::size_t n = images_.size();
  Permutation r;
  r.images_.resize(n);
  std::vector<bool> done(n, false);
  std::vector<Point> cycle;
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    cycle.clear();
    for (Point x = static_cast<Point>(s); !done[x]; x = images_[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    const long long len = static_cast<long long>(cycle.size());
    long long shift = exponent % len;
    if (shift < 0) shift += len;
    for (long long i = 0; i < len; ++i) r.images_[cycle[i]] = cycle[(i + shift) % len];
  }
  return r;
}

Permutation Permutation::conjugate_by(const Permutation& rhs) const {
  // rhs^-1 * this * rhs sends rhs[x] to rhs[this[x]].
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[rhs.images_[i]] = rhs.images_[images_[i]];
  return r;
}

std::uint64_t Permutation::order() const {
  const std::size_t n = images_.size();
  std::vector<bool> done(n, false);
  std::uint64_t result = 1;
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(s); !done[x]; x = images_[x]) {
      done[x] = true;
      ++len;
    }
    const std::uint64_t g = std::gcd(result, len);
    const unsigned __int128 next = static_cast<unsigned __int128>(result / g) * len;
    if (next > UINT64_MAX) throw Error(ErrorKind::BoundExceeded, "permutation order overflows");
    result = static_cast<std::uint64_t>(next);
  }
  return result;
}

std::size_t Permutation::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (done[s] || images_[s] == s) continue;
    out += '(';
    for (Point x = static_cast<Point>(s); !done[x]; x = images_[x]) {
      done[x] = true;
      if (x != s) out += ' ';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---- orbits ---------------------------------------------------------------

Orbits orbits(std::size_t degree, std::span<const Permutation> generators) {
  Orbits o;
  constexpr auto unseen = static_cast<std::uint32_t>(-1);
  o.block_of.assign(degree, unseen);
  std::vector<Point> stack;
  for (std::size_t s = 0; s < degree; ++s) {
    if (o.block_of[s] != unseen) continue;
    const auto id = static_cast<std::uint32_t>(o.blocks.size());
    std::vector<Point> block{static_cast<Point>(s)};
    o.block_of[s] = id;
    stack.assign(1, static_cast<Point>(s));
    while (!stack.empty()) {
      Point x = stack.back();
      stack.pop_back();
      for (const auto& g : generators) {
        Point y = g[x];
        if (o.block_of[y] == unseen) {
          o.block_of[y] = id;
          block.push_back(y);
          stack.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    o.blocks.push_back(std::move(block));
  }
  return o;
}

Orbits orbits(const PermGroup& group) { return group.orbits(); }

// ---- PermGroup ------------------------------------------------------------

struct PermGroup::Cache {
  std::once_flag once;
  std::unique_ptr<StabChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, GroupLimits limits)
    : degree_(degree), limits_(limits), cache_(std::make_shared<Cache>()) {
  if (degree > limits.max_degree)
    throw Error(ErrorKind::BoundExceeded, "degree " + std::to_string(degree) + " exceeds bound");
  for (auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorKind::InvalidArgument, "generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
}

const StabChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<StabChain>(degree_, generators_, std::span<const Point>{}, limits_);
  });
  return *cache_->chain;
}

std::uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return chain().contains(p);
}

bool PermGroup::is_trivial() const { return generators_.empty(); }

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::same_as(const PermGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

bool PermGroup::is_normal_in(const PermGroup& overgroup) const {
  for (const auto& g : overgroup.generators())
    for (const auto& n : generators_)
      if (!contains(n.conjugate_by(g))) return false;
  return true;
}

std::vector<Permutation> PermGroup::stabilizer_generators(Point point) const {
  if (point >= degree_) throw Error(ErrorKind::InvalidArgument, "point out of range");
  const Point base[] = {point};
  StabChain c(degree_, generators_, base, limits_);
  return c.strong_generators(1);
}

std::vector<Permutation> PermGroup::elements() const {
  const std::uint64_t n = order();
  if (n > limits_.max_elements)
    throw Error(ErrorKind::BoundExceeded,
                "group of order " + std::to_string(n) + " exceeds the element bound");
  std::vector<Permutation> out{Permutation::identity(degree_)};
  std::unordered_set<Permutation, PermutationHash> seen{out.front()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation y = out[i] * g;
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  return out;
}

// ---- LabeledGenerators ----------------------------------------------------

LabeledGenerators::LabeledGenerators(std::vector<std::string> l, std::vector<Permutation> g)
    : labels(std::move(l)), generators(std::move(g)) {
  if (labels.size() != generators.size())
    throw Error(ErrorKind::InvalidArgument, "label and generator counts differ");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (labels[i] == labels[j]) throw Error(ErrorKind::Format, "duplicate label " + labels[i]);
    if (generators[i].degree() != generators.front().degree())
      throw Error(ErrorKind::Format, "generators of different degree");
  }
}

std::size_t LabeledGenerators::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  return labels.size();
}

const Permutation& LabeledGenerators::at(std::string_view label) const {
  std::size_t i = index_of(label);
  if (i == labels.size())
    throw Error(ErrorKind::LabelMismatch, "missing generator label " + std::string(label));
  return generators[i];
}

PermGroup LabeledGenerators::group(GroupLimits limits) const {
  return PermGroup(degree(), generators, limits);
}

// ---- normal subgroups -----------------------------------------------------

PermGroup normal_closure(const PermGroup& group, std::span<const Permutation> subset) {
  StabChain chain(group.degree(), {}, {}, group.limits());
  std::vector<Permutation> gens;
  std::deque<Permutation> queue;
  for (const auto& s : subset) {
    if (chain.add_generator(s)) {
      gens.push_back(s);
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Permutation n = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : group.generators()) {
      Permutation c = n.conjugate_by(g);
      if (chain.add_generator(c)) {
        gens.push_back(c);
        queue.push_back(std::move(c));
      }
    }
  }
  return PermGroup(group.degree(), std::move(gens), group.limits());
}

std::vector<std::vector<std::size_t>> conjugacy_classes(std::span<const Permutation> elements,
                                                        std::span<const Permutation> generators) {
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

  std::vector<bool> done(elements.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t s = 0; s < elements.size(); ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> cls{s};
    done[s] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (const auto& g : generators) {
        auto it = index.find(elements[cls[i]].conjugate_by(g));
        if (it == index.end())
          throw Error(ErrorKind::InvalidArgument, "element list is not closed under conjugation");
        if (!done[it->second]) {
          done[it->second] = true;
          cls.push_back(it->second);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& group) {
  if (group.is_trivial()) return {};
  const auto elems = group.elements();
  const auto classes = conjugacy_classes(elems, group.generators());

  // Every minimal normal subgroup is the normal closure of any of its
  // elements of prime order, and every normal subgroup is a union of classes.
  struct Candidate {
    PermGroup group;
    std::vector<bool> classes;
    std::size_t size = 0;
  };
  std::vector<Candidate> cands;
  for (const auto& cls : classes) {
    const Permutation& rep = elems[cls.front()];
    if (!is_prime(rep.order())) continue;
    const Permutation one[] = {rep};
    Candidate c{normal_closure(group, one), std::vector<bool>(classes.size(), false), 0};
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (c.group.contains(elems[classes[k].front()])) {
        c.classes[k] = true;
        ++c.size;
      }
    }
    if (std::none_of(cands.begin(), cands.end(),
                     [&](const Candidate& o) { return o.classes == c.classes; }))
      cands.push_back(std::move(c));
  }

  std::vector<std::pair<std::vector<Permutation>, PermGroup>> minimal;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < cands.size() && is_min; ++j) {
      if (i == j || cands[j].size >= cands[i].size) continue;
      bool subset = true;
      for (std::size_t k = 0; k < classes.size() && subset; ++k)
        if (cands[j].classes[k] && !cands[i].classes[k]) subset = false;
      if (subset) is_min = false;
    }
    if (!is_min) continue;
    std::vector<Permutation> members;
    for (std::size_t k = 0; k < classes.size(); ++k)
      if (cands[i].classes[k])
        for (std::size_t e : classes[k]) members.push_back(elems[e]);
    std::sort(members.begin(), members.end());
    minimal.emplace_back(std::move(members), cands[i].group);
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<PermGroup> out;
  out.reserve(minimal.size());
  for (auto& m : minimal) out.push_back(std::move(m.second));
  return out;
}

// ---- congruence -----------------------------------------------------------

bool congruent_labeled_groups(const LabeledGenerators& a, const LabeledGenerators& b,
                              std::size_t max_elements) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> match(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    match[i] = b.index_of(a.labels[i]);
    if (match[i] == b.size()) return false;
  }
  if (a.size() == 0) return true;

  std::unordered_map<Permutation, Permutation, PermutationHash> fwd;
  std::unordered_set<Permutation, PermutationHash> used;
  std::vector<std::pair<Permutation, Permutation>> queue;
  queue.emplace_back(Permutation::identity(a.degree()), Permutation::identity(b.degree()));
  fwd.emplace(queue.front().first, queue.front().second);
  used.insert(queue.front().second);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      Permutation x = queue[q].first * a.generators[i];
      Permutation y = queue[q].second * b.generators[match[i]];
      auto it = fwd.find(x);
      if (it != fwd.end()) {
        if (it->second != y) return false;
        continue;
      }
      if (!used.insert(y).second) return false;
      fwd.emplace(x, y);
      queue.emplace_back(std::move(x), std::move(y));
      if (queue.size() > max_elements)
        throw Error(ErrorKind::BoundExceeded, "congruence check exceeds the element bound");
    }
  }
  return true;
}

// ---- .grp format ----------------------------------------------------------

LabeledGenerators parse_group_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  long long degree = -1;
  std::vector<std::string> labels;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (key == "degree") {
      if (degree >= 0 || !(ls >> degree) || degree <= 0)
        throw Error(ErrorKind::Format, where + "bad degree line");
    } else if (key == "gen") {
      if (degree < 0) throw Error(ErrorKind::Format, where + "gen before degree");
      std::string label;
      if (!(ls >> label)) throw Error(ErrorKind::Format, where + "missing label");
      std::vector<Point> img;
      long long v;
      while (ls >> v) {
        if (v < 0 || v >= degree) throw Error(ErrorKind::Format, where + "image out of range");
        img.push_back(static_cast<Point>(v));
      }
      if (!ls.eof()) throw Error(ErrorKind::Format, where + "non-numeric image");
      if (static_cast<long long>(img.size()) != degree)
        throw Error(ErrorKind::Format, where + "expected " + std::to_string(degree) + " images");
      labels.push_back(label);
      gens.emplace_back(std::move(img));
    } else {
      throw Error(ErrorKind::Format, where + "unknown keyword '" + key + "'");
    }
  }
  if (degree < 0) throw Error(ErrorKind::Format, "missing degree line");
  return LabeledGenerators(std::move(labels), std::move(gens));
}

std::string format_group_file(const LabeledGenerators& group) {
  std::ostringstream out;
  out << "degree " << group.degree() << '\n';
  for (std::size_t i = 0; i < group.size(); ++i) {
    out << "gen " << group.labels[i];
    for (Point x : group.generators[i].images()) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

}  // namespace flagmap

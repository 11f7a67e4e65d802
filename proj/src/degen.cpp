#include "flagmap/degen.hpp"

#include <algorithm>
#include <numeric>

namespace flagmap {

const std::array<std::string_view, 7> context_words = {"t", "l", "r", "t*l", "r*t", "r*l", "t*l*r"};

std::string ContextVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 7; ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + ")";
}

ContextVector context_vector(const LabeledGenerators& g) {
  ContextVector v;
  for (std::size_t i = 0; i < 7; ++i) v[i] = word_order(g, parse_word(context_words[i]));
  return v;
}

ContextVector context_vector(const RootedMap& m) {
  static constexpr std::string_view letters[7] = {"T", "L", "R", "TL", "RT", "RL", "TLR"};
  ContextVector v;
  for (std::size_t i = 0; i < 7; ++i) v[i] = m.word(letters[i]).order();
  return v;
}

std::string_view to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::Degenerate: return "degenerate";
    case Degeneracy::SlightlyDegenerate: return "slightly-degenerate";
    case Degeneracy::NonDegenerate: return "non-degenerate";
  }
  return "unknown";
}

Degeneracy classify(const ContextVector& v) {
  if (*std::min_element(v.e.begin(), v.e.end()) == 1) return Degeneracy::Degenerate;
  if (std::min({v[4], v[5], v[6]}) == 2) return Degeneracy::SlightlyDegenerate;
  return Degeneracy::NonDegenerate;
}

Degeneracy classify_degeneracy(const RootedMap& m) { return classify(context_vector(m)); }

ContextVector lcm_vector_predict(const ContextVector& v, const ContextVector& w) {
  ContextVector r;
  for (std::size_t i = 0; i < 7; ++i) r[i] = std::lcm(v[i], w[i]);
  return r;
}

ContextVector dual_vector(const ContextVector& v) {
  ContextVector r = v;
  std::swap(r[0], r[1]);
  std::swap(r[4], r[5]);
  return r;
}

ContextVector petrie_vector(const ContextVector& v) {
  ContextVector r = v;
  std::swap(r[1], r[3]);
  std::swap(r[5], r[6]);
  return r;
}

Presentation context_presentation(const ContextVector& v) {
  Presentation p;
  p.generators = {"t", "l", "r"};
  for (std::size_t i = 0; i < 7; ++i)
    p.relators.push_back(parse_word(context_words[i]).pow(static_cast<long long>(v[i])));
  return p;
}

RootedMap regular_map(const LabeledGenerators& g) {
  if (g.size() == 0) {
    const Permutation id = Permutation::identity(1);
    return RootedMap(id, id, id, 0);
  }
  return RootedMap(g.at("t"), g.at("l"), g.at("r"), 0);
}

ContextVector degenerate_vector(int index, std::optional<std::uint64_t> k) {
  const bool needs_k = index >= 6 && index <= 8;
  if (index < 1 || index > 12) throw Error(ErrorKind::InvalidArgument, "degenerate map index must be 1..12");
  if (needs_k != k.has_value())
    throw Error(ErrorKind::InvalidArgument, needs_k ? "this family needs k" : "this map takes no k");
  if (needs_k && *k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  using V = std::array<std::uint64_t, 7>;
  const std::uint64_t K = k.value_or(0);
  static const V fixed[13] = {
      {},
      {1, 1, 1, 1, 1, 1, 1},
      {1, 1, 2, 1, 2, 2, 2},
      {2, 1, 1, 2, 2, 1, 2},
      {1, 2, 1, 2, 1, 2, 2},
      {2, 2, 1, 1, 2, 2, 1},
      {},
      {},
      {},
      {2, 2, 1, 2, 2, 2, 2},
      {2, 2, 2, 2, 1, 2, 2},
      {2, 2, 2, 2, 2, 1, 2},
      {2, 2, 2, 2, 2, 2, 1},
  };
  switch (index) {
    case 6: return ContextVector{V{2, 1, 2, 2, K, 2, K}};
    case 7: return ContextVector{V{1, 2, 2, 2, 2, K, K}};
    case 8: return ContextVector{V{2, 2, 2, 1, K, K, 2}};
    default: return ContextVector{fixed[index]};
  }
}

std::uint64_t degenerate_order(int index, std::optional<std::uint64_t> k) {
  (void)degenerate_vector(index, k);
  switch (index) {
    case 1: return 1;
    case 2: case 3: case 4: case 5: return 2;
    case 6: case 7: case 8: return 2 * *k;
    default: return 4;
  }
}

RootedMap build_degenerate(int index, std::optional<std::uint64_t> k) {
  const ContextVector v = degenerate_vector(index, k);
  const Enumeration e = todd_coxeter(context_presentation(v), std::max<std::size_t>(64, 16 * k.value_or(1)));
  return regular_map(e.action);
}

Presentation slightly_degenerate_presentation(SlightFamily family, std::uint64_t k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be at least 2");
  const auto K = static_cast<long long>(k);
  Presentation p;
  p.generators = {"t", "l", "r"};
  for (const char* w : {"t^2", "l^2", "r^2", "(t*l)^2", "(r*t)^2"}) p.relators.push_back(parse_word(w));
  const Word lr = parse_word("l*r");
  const Word tlr = parse_word("t*l*r");
  const Word t = parse_word("t");
  const bool even = k % 2 == 0;
  if (family == SlightFamily::Epsilon) {
    p.relators.push_back(lr.pow(K));
    p.relators.push_back(tlr.pow(even ? K : 2 * K));
  } else if (even) {
    p.relators.push_back(t * lr.pow(K));
    p.relators.push_back(t * tlr.pow(K));
  } else {
    p.relators.push_back(lr.pow(2 * K));
    p.relators.push_back(tlr.pow(K));
  }
  return p;
}

RootedMap build_slightly_degenerate(SlightFamily family, std::uint64_t k) {
  const Enumeration e = todd_coxeter(slightly_degenerate_presentation(family, k),
                                     std::max<std::size_t>(256, 64 * k));
  return regular_map(e.action);
}

}  // namespace flagmap

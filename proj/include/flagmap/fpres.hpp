#ifndef FLAGMAP_FPRES_HPP
#define FLAGMAP_FPRES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flagmap/perm.hpp"

namespace flagmap {

struct Syllable {
  std::string gen;
  long long exp = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A freely reduced word: adjacent syllables never share a generator and no
// exponent is zero.
struct Word {
  std::vector<Syllable> syllables;

  Word() = default;
  explicit Word(std::vector<Syllable> s);

  bool empty() const noexcept { return syllables.empty(); }
  std::size_t length() const;  // sum of |exp|
  Word inverse() const;
  Word pow(long long e) const;
  Word operator*(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;
};

// Parses "t*l", "(t*l*r)^3", "r^-1". Names are [a-z][a-z0-9_]*.
// Throws SyntaxError with the column of the offending character (line 1).
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t index_of(std::string_view name) const;
};

Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

struct Enumeration {
  // Regular action on the cosets of the trivial subgroup; coset 0 is the identity.
  LabeledGenerators action;
  std::uint64_t order = 0;
};

inline constexpr std::size_t default_max_cosets = 100'000;

// Throws EnumerationOverflow when more than max_cosets live cosets would be needed.
Enumeration todd_coxeter(const Presentation& p, std::size_t max_cosets = default_max_cosets);

Permutation evaluate(const LabeledGenerators& g, const Word& w);
std::uint64_t word_order(const LabeledGenerators& g, const Word& w);

}  // namespace flagmap

#endif  // FLAGMAP_FPRES_HPP

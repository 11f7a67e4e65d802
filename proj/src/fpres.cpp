#include "flagmap/fpres.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace flagmap {

// ---- Word -----------------------------------------------------------------

Word::Word(std::vector<Syllable> s) {
  for (auto& syl : s) {
    if (syl.exp == 0) continue;
    if (!syllables.empty() && syllables.back().gen == syl.gen) {
      syllables.back().exp += syl.exp;
      if (syllables.back().exp == 0) syllables.pop_back();
    } else {
      syllables.push_back(std::move(syl));
    }
  }
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& s : syllables) n += static_cast<std::size_t>(std::llabs(s.exp));
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> s(syllables.rbegin(), syllables.rend());
  for (auto& x : s) x.exp = -x.exp;
  return Word(std::move(s));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Syllable> s = syllables;
  s.insert(s.end(), rhs.syllables.begin(), rhs.syllables.end());
  return Word(std::move(s));
}

Word Word::pow(long long e) const {
  const Word base = e < 0 ? inverse() : *this;
  Word out;
  for (long long i = 0; i < std::llabs(e); ++i) out = out * base;
  return out;
}

namespace {

bool name_start(char c) { return c >= 'a' && c <= 'z'; }
bool name_char(char c) { return name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'; }

class WordParser {
 public:
  WordParser(std::string_view text, std::size_t line, std::size_t col0)
      : text_(text), line_(line), col0_(col0) {}

  Word parse_all() {
    skip();
    if (pos_ == text_.size()) fail("expected a word");
    Word w = word();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(line_, col0_ + pos_ + 1, msg);
  }

  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
  }

  Word word() {
    Word w = term();
    skip();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      w = w * term();
      skip();
    }
    return w;
  }

  Word term() {
    skip();
    Word w;
    if (pos_ >= text_.size()) fail("expected a generator or '('");
    if (text_[pos_] == '(') {
      ++pos_;
      w = word();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    } else if (text_[pos_] == '1') {
      ++pos_;  // the identity
    } else if (name_start(text_[pos_])) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
      w = Word({Syllable{std::string(text_.substr(start, pos_ - start)), 1}});
    } else {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    skip();
    while (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip();
      w = w.pow(integer());
      skip();
    }
    return w;
  }

  long long integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    if (pos_ - digits > 9) {
      pos_ = start;
      fail("exponent too large");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text, 1, 0).parse_all(); }

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.syllables.size(); ++i) {
    if (i) out += '*';
    out += w.syllables[i].gen;
    if (w.syllables[i].exp != 1) out += '^' + std::to_string(w.syllables[i].exp);
  }
  return out;
}

// ---- Presentation ---------------------------------------------------------

std::size_t Presentation::index_of(std::string_view name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  return static_cast<std::size_t>(it - generators.begin());
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t i = 0;
    auto blank = [&](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size() && blank(line[i])) ++i;
    if (i == line.size()) continue;
    std::size_t k = i;
    while (k < line.size() && !blank(line[k])) ++k;
    std::string_view key = line.substr(i, k - i);

    if (key == "gens") {
      std::size_t j = k;
      bool any = false;
      while (true) {
        while (j < line.size() && blank(line[j])) ++j;
        if (j == line.size()) break;
        std::size_t s = j;
        if (!name_start(line[j])) throw SyntaxError(lineno, j + 1, "bad generator name");
        while (j < line.size() && name_char(line[j])) ++j;
        if (j < line.size() && !blank(line[j])) throw SyntaxError(lineno, j + 1, "bad generator name");
        std::string name(line.substr(s, j - s));
        if (p.index_of(name) != p.generators.size())
          throw SyntaxError(lineno, s + 1, "generator '" + name + "' declared twice");
        p.generators.push_back(std::move(name));
        any = true;
      }
      if (!any) throw SyntaxError(lineno, k + 1, "expected generator names");
    } else if (key == "rel") {
      Word w = WordParser(line.substr(k), lineno, k).parse_all();
      for (const auto& s : w.syllables)
        if (p.index_of(s.gen) == p.generators.size())
          throw Error(ErrorKind::UndeclaredGenerator,
                      "line " + std::to_string(lineno) + ": undeclared generator '" + s.gen + "'");
      p.relators.push_back(std::move(w));
    } else {
      throw SyntaxError(lineno, i + 1, "expected 'gens' or 'rel'");
    }
  }
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens";
  for (const auto& g : p.generators) out += ' ' + g;
  out += '\n';
  for (const auto& r : p.relators) {
    if (r.empty()) continue;
    out += "rel " + format_word(r) + '\n';
  }
  return out;
}

// ---- Todd-Coxeter ---------------------------------------------------------

namespace {

// HLT coset enumeration with lookahead, following the standard
// DEFINE / SCAN_AND_FILL / COINCIDENCE formulation.
class CosetTable {
 public:
  CosetTable(std::size_t ngens, std::vector<std::vector<int>> relators, std::size_t max_cosets)
      : cols_(2 * ngens), rels_(std::move(relators)), max_(max_cosets) {
    add_coset();
  }

  void run() {
    for (std::size_t a = 0; a < live_flag_.size(); ++a) {
      if (!live(a)) continue;
      bool done = false;
      while (!done) {
        done = true;
        for (const auto& w : rels_) {
          if (!live(a)) break;
          if (!scan_and_fill(static_cast<int>(a), w)) {
            make_room(a);
            done = false;
            break;
          }
        }
        if (!done || !live(a)) continue;
        for (std::size_t x = 0; x < cols_; ++x) {
          if (at(a, x) >= 0) continue;
          if (live_count_ >= max_) {
            make_room(a);
            done = false;
            break;
          }
          define(static_cast<int>(a), x);
        }
      }
    }
  }

  std::size_t live_count() const { return live_count_; }

  // Live cosets renumbered in creation order.
  std::vector<std::vector<Point>> permutations() const {
    std::vector<int> id(live_flag_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < live_flag_.size(); ++c)
      if (live_flag_[c]) id[c] = n++;
    std::vector<std::vector<Point>> out(cols_ / 2, std::vector<Point>(n));
    for (std::size_t c = 0; c < live_flag_.size(); ++c) {
      if (!live_flag_[c]) continue;
      for (std::size_t g = 0; g < cols_ / 2; ++g) {
        int t = at(c, 2 * g);
        if (t < 0 || id[t] < 0) throw Error(ErrorKind::VerificationFailed, "incomplete coset table");
        out[g][id[c]] = static_cast<Point>(id[t]);
      }
    }
    return out;
  }

 private:
  static std::size_t inv(std::size_t x) { return x ^ 1u; }
  int& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }
  int at(std::size_t c, std::size_t x) const { return table_[c * cols_ + x]; }
  bool live(std::size_t c) const { return c < live_flag_.size() && live_flag_[c]; }

  int add_coset() {
    const int c = static_cast<int>(live_flag_.size());
    table_.resize(table_.size() + cols_, -1);
    live_flag_.push_back(true);
    parent_.push_back(c);
    ++live_count_;
    return c;
  }

  void define(int a, std::size_t x) {
    int b = add_coset();
    at(a, x) = b;
    at(b, inv(x)) = a;
  }

  // Lookahead, then compaction when the dead cosets dominate. Throws when no
  // room was recovered.
  void make_room(std::size_t& current) {
    for (std::size_t c = 0; c < live_flag_.size(); ++c) {
      for (const auto& w : rels_) {
        if (!live(c)) break;
        scan(static_cast<int>(c), w);
      }
    }
    if (live_count_ >= max_)
      throw Error(ErrorKind::EnumerationOverflow,
                  "coset enumeration needs more than " + std::to_string(max_) + " cosets");
    if (live_flag_.size() > 2 * live_count_ + 64) compact(current);
  }

  void compact(std::size_t& current) {
    std::vector<int> id(live_flag_.size(), -1);
    int n = 0;
    std::size_t new_current = 0;
    for (std::size_t c = 0; c < live_flag_.size(); ++c) {
      if (c == current) new_current = static_cast<std::size_t>(n);
      if (live_flag_[c]) id[c] = n++;
    }
    std::vector<int> table(static_cast<std::size_t>(n) * cols_, -1);
    for (std::size_t c = 0; c < live_flag_.size(); ++c) {
      if (!live_flag_[c]) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        int t = at(c, x);
        table[id[c] * cols_ + x] = t < 0 ? -1 : id[t];
      }
    }
    table_ = std::move(table);
    live_flag_.assign(n, true);
    parent_.resize(n);
    for (int c = 0; c < n; ++c) parent_[c] = c;
    current = new_current;
  }

  // Returns false when a definition was needed but the table is full.
  bool scan_and_fill(int a, const std::vector<int>& w) {
    int f = a, b = a;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, inv(w[j])) >= 0) b = at(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inv(w[i])) = f;
        return true;
      }
      if (live_count_ >= max_) return false;
      define(f, w[i]);
    }
  }

  void scan(int a, const std::vector<int>& w) {
    int f = a, b = a;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && at(b, inv(w[j])) >= 0) b = at(b, inv(w[j--]));
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      at(f, w[i]) = b;
      at(b, inv(w[i])) = f;
    }
  }

  int rep(int k) {
    int l = k;
    while (parent_[l] != l) l = parent_[l];
    while (parent_[k] != l) {
      int next = parent_[k];
      parent_[k] = l;
      k = next;
    }
    return l;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int g = queue[qi];
      live_flag_[g] = false;
      --live_count_;
      for (std::size_t x = 0; x < cols_; ++x) {
        const int d = at(g, x);
        if (d < 0) continue;
        at(g, x) = -1;
        if (at(d, inv(x)) == g) at(d, inv(x)) = -1;
        const int m = rep(g), n = rep(d);
        if (at(m, x) >= 0) {
          merge(n, at(m, x), queue);
        } else if (at(n, inv(x)) >= 0) {
          merge(m, at(n, inv(x)), queue);
        } else {
          at(m, x) = n;
          at(n, inv(x)) = m;
        }
      }
    }
  }

  std::size_t cols_;
  std::vector<std::vector<int>> rels_;
  std::size_t max_;
  std::vector<int> table_;
  std::vector<bool> live_flag_;
  std::vector<int> parent_;
  std::size_t live_count_ = 0;
};

}  // namespace

Enumeration todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  if (max_cosets < 1) throw Error(ErrorKind::InvalidArgument, "max_cosets must be positive");
  std::vector<std::vector<int>> rels;
  for (const auto& r : p.relators) {
    std::vector<int> cols;
    for (const auto& s : r.syllables) {
      const std::size_t g = p.index_of(s.gen);
      if (g == p.generators.size())
        throw Error(ErrorKind::UndeclaredGenerator, "undeclared generator '" + s.gen + "'");
      const int col = static_cast<int>(2 * g + (s.exp < 0 ? 1 : 0));
      for (long long e = 0; e < std::llabs(s.exp); ++e) cols.push_back(col);
    }
    if (!cols.empty()) rels.push_back(std::move(cols));
  }

  CosetTable table(p.generators.size(), rels, max_cosets);
  table.run();
  auto perms = table.permutations();

  Enumeration e;
  e.order = table.live_count();
  std::vector<Permutation> gens;
  for (auto& img : perms) gens.emplace_back(std::move(img));
  if (p.generators.empty()) {
    e.action = LabeledGenerators();
    return e;
  }
  e.action = LabeledGenerators(p.generators, std::move(gens));

  for (const auto& r : p.relators)
    if (!evaluate(e.action, r).is_identity())
      throw Error(ErrorKind::VerificationFailed, "enumerated table violates relator " + format_word(r));
  return e;
}

Permutation evaluate(const LabeledGenerators& g, const Word& w) {
  const std::size_t n = g.degree();
  Permutation result = Permutation::identity(n);
  for (const auto& s : w.syllables) {
    const std::size_t i = g.index_of(s.gen);
    if (i == g.size()) throw Error(ErrorKind::UndeclaredGenerator, "undeclared generator '" + s.gen + "'");
    result = result * g.generators[i].pow(s.exp);
  }
  return result;
}

std::uint64_t word_order(const LabeledGenerators& g, const Word& w) { return evaluate(g, w).order(); }

}  // namespace flagmap

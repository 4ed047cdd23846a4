#pragma once

// Elements of the right-angled Artin group as words in signed generators.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

struct Letter {
  Vertex vertex = 0;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {vertex, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Position order used by normal forms: vertex order, then +1 before -1.
inline bool letter_less(const Letter& a, const Letter& b) {
  if (a.vertex != b.vertex) return a.vertex < b.vertex;
  return a.exponent > b.exponent;
}

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
inline Word generator(Vertex v, int exponent = 1) { return {Letter{v, exponent}}; }

/// A word in left-greedy canonical form: freely reduced, and the
/// lexicographically least arrangement of its commutation class.
class NormalForm {
 public:
  NormalForm() = default;

  const Word& word() const& { return letters_; }
  Word word() && { return std::move(letters_); }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_generator(Vertex v) const {
    return letters_.size() == 1 && letters_[0] == Letter{v, 1};
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  friend NormalForm normal_form(const DefiningGraph& g, const Word& x);
  explicit NormalForm(Word w) : letters_(std::move(w)) {}
  Word letters_;
};

/// Commutation-invariant reduction: every letter is cancelled against an
/// inverse it can reach through commuting letters. The result is reduced
/// but not sorted.
Word reduce(const DefiningGraph& g, const Word& x);

NormalForm normal_form(const DefiningGraph& g, const Word& x);

bool words_equal(const DefiningGraph& g, const Word& x, const Word& y);

struct CyclicReduction {
  NormalForm core;
  Word conjugator;
};

/// x = conjugator * core * conjugator^-1, with no letter that can move to
/// the front of the core inverse to a letter that can move to its end.
CyclicReduction cyclic_reduce(const DefiningGraph& g, const Word& x);

/// Largest absolute exponent of a maximal run of w^{+-1} in the normal form.
std::size_t max_power(const DefiningGraph& g, const Word& x, Vertex w);

/// Every vertex of normal_form(x) lies in perp(s).
bool centralizes(const DefiningGraph& g, const Word& x, VertexSet s);

/// Letters that can be shuffled to the front (first) or end (last) of a
/// reduced word, as positions into it.
std::vector<std::size_t> first_letters(const DefiningGraph& g, const Word& reduced);
std::vector<std::size_t> last_letters(const DefiningGraph& g, const Word& reduced);

/// Letters commute iff their vertices are equal or adjacent.
inline bool commute(const DefiningGraph& g, Vertex a, Vertex b) {
  return a == b || g.adjacent(a, b);
}

/// Parse whitespace-separated `name`, `name^-1`, `name^k` tokens.
Word parse_word(const DefiningGraph& g, std::string_view text);
/// Run-length formatting: `a b^2 c^-1`; the empty word prints as `1`.
std::string format_word(const DefiningGraph& g, const Word& w);
inline std::string format_word(const DefiningGraph& g, const NormalForm& w) {
  return format_word(g, w.word());
}

}  // namespace raag

#include "raag/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "raag/error.hpp"

namespace raag {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

namespace {

void check_letters(const DefiningGraph& g, const Word& x) {
  for (const Letter& l : x) {
    g.check(l.vertex);
    if (l.exponent != 1 && l.exponent != -1) throw InputError("letter exponent must be +1 or -1");
  }
}

}  // namespace

Word reduce(const DefiningGraph& g, const Word& x) {
  check_letters(g, x);
  Word out;
  out.reserve(x.size());
  for (const Letter& l : x) {
    bool cancelled = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      if (out[j].vertex == l.vertex) {
        if (out[j].exponent == -l.exponent) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (!g.adjacent(out[j].vertex, l.vertex)) break;
    }
    if (!cancelled) out.push_back(l);
  }
  return out;
}

NormalForm normal_form(const DefiningGraph& g, const Word& x) {
  Word rest = reduce(g, x);
  Word out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // A letter is available when every earlier letter commutes with it and
    // carries a different vertex.
    VertexSet earlier;
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const Vertex v = rest[i].vertex;
      if (earlier.is_subset_of(g.link(v)) &&
          (best == rest.size() || letter_less(rest[i], rest[best]))) {
        best = i;
      }
      earlier.insert(v);
      if (earlier == g.vertices()) break;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return NormalForm(std::move(out));
}

bool words_equal(const DefiningGraph& g, const Word& x, const Word& y) {
  return normal_form(g, x) == normal_form(g, y);
}

std::vector<std::size_t> first_letters(const DefiningGraph& g, const Word& reduced) {
  std::vector<std::size_t> out;
  VertexSet earlier;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const Vertex v = reduced[i].vertex;
    if (earlier.is_subset_of(g.link(v))) out.push_back(i);
    earlier.insert(v);
  }
  return out;
}

std::vector<std::size_t> last_letters(const DefiningGraph& g, const Word& reduced) {
  std::vector<std::size_t> out;
  VertexSet later;
  for (std::size_t i = reduced.size(); i-- > 0;) {
    const Vertex v = reduced[i].vertex;
    if (later.is_subset_of(g.link(v))) out.push_back(i);
    later.insert(v);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

CyclicReduction cyclic_reduce(const DefiningGraph& g, const Word& x) {
  Word w = normal_form(g, x).word();
  Word conjugator;
  for (;;) {
    const auto firsts = first_letters(g, w);
    const auto lasts = last_letters(g, w);
    std::size_t pick_first = w.size();
    std::size_t pick_last = w.size();
    for (std::size_t i : firsts) {
      for (std::size_t j : lasts) {
        if (i == j || !(w[i] == w[j].inverse())) continue;
        if (pick_first == w.size() || letter_less(w[i], w[pick_first])) {
          pick_first = i;
          pick_last = j;
        }
      }
    }
    if (pick_first == w.size()) break;
    conjugator.push_back(w[pick_first]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(std::max(pick_first, pick_last)));
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(std::min(pick_first, pick_last)));
  }
  return {normal_form(g, w), normal_form(g, conjugator).word()};
}

std::size_t max_power(const DefiningGraph& g, const Word& x, Vertex w) {
  g.check(w);
  const NormalForm nf = normal_form(g, x);
  std::size_t best = 0;
  std::size_t run = 0;
  int sign = 0;
  for (const Letter& l : nf.word()) {
    if (l.vertex != w) {
      run = 0;
      continue;
    }
    if (run > 0 && l.exponent == sign) {
      ++run;
    } else {
      run = 1;
      sign = l.exponent;
    }
    best = std::max(best, run);
  }
  return best;
}

bool centralizes(const DefiningGraph& g, const Word& x, VertexSet s) {
  const VertexSet perp = perp_of(g, s);
  for (const Letter& l : normal_form(g, x).word()) {
    if (!perp.contains(l.vertex)) return false;
  }
  return true;
}

Word parse_word(const DefiningGraph& g, std::string_view text) {
  Word out;
  std::istringstream tokens{std::string(text)};
  std::string token;
  while (tokens >> token) {
    const auto caret = token.find('^');
    const std::string name = token.substr(0, caret);
    long exponent = 1;
    if (caret != std::string::npos) {
      const std::string digits = token.substr(caret + 1);
      const char* begin = digits.data();
      const char* end = begin + digits.size();
      auto [ptr, ec] = std::from_chars(begin, end, exponent);
      if (ec != std::errc() || ptr != end || digits.empty()) {
        throw InputError("malformed exponent in word token '" + token + "'");
      }
      if (exponent == 0) throw InputError("zero exponent in word token '" + token + "'");
    }
    if (name == "1" && !g.has_vertex(name) && caret == std::string::npos) continue;
    const Vertex v = g.index(name);
    const int sign = exponent > 0 ? 1 : -1;
    for (long i = 0; i < std::labs(exponent); ++i) out.push_back({v, sign});
  }
  return out;
}

std::string format_word(const DefiningGraph& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long power = static_cast<long>(j - i) * w[i].exponent;
    if (!out.empty()) out += ' ';
    out += g.name(w[i].vertex);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

}  // namespace raag

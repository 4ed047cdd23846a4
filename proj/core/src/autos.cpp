#include "raag/autos.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "raag/conjugation.hpp"
#include "raag/error.hpp"
#include "raag/vertex_order.hpp"

namespace raag {

AutWord inverse(const AutWord& f) {
  AutWord out;
  out.reserve(f.size());
  for (auto it = f.rbegin(); it != f.rend(); ++it) out.push_back(it->inverse());
  return out;
}

AutWord concat(const AutWord& a, const AutWord& b) {
  AutWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

AutWord power(const AutWord& f, int k) {
  const AutWord base = k >= 0 ? f : inverse(f);
  AutWord out;
  for (int i = 0; i < std::abs(k); ++i) out = concat(out, base);
  return out;
}

AutWord commutator(const AutWord& f, const AutWord& g) {
  return concat(concat(f, g), concat(inverse(f), inverse(g)));
}

void validate(const DefiningGraph& g, const ElementaryAut& e) {
  if (e.sign != 1 && e.sign != -1) throw InputError("elementary sign must be +1 or -1");
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Inversion>) {
          g.check(k.v);
        } else if constexpr (std::is_same_v<T, Transvection>) {
          g.check(k.v);
          g.check(k.w);
          if (k.v == k.w) throw InputError("transvection needs distinct vertices");
          if (!dominates(g, k.v, k.w)) {
            throw InputError("transvection " + g.name(k.v) + "->" + g.name(k.v) + g.name(k.w) +
                             " needs " + g.name(k.v) + " <= " + g.name(k.w));
          }
        } else if constexpr (std::is_same_v<T, PartialConjugation>) {
          g.check(k.u);
          g.check(k.component);
          const auto parts = components(g, g.vertices() - g.star(k.u));
          if (std::find(parts.begin(), parts.end(), k.component) == parts.end()) {
            throw InputError(g.format(k.component) + " is not a component of the graph minus st(" +
                             g.name(k.u) + ")");
          }
        } else {
          if (k.image.size() != g.size()) throw InputError("symmetry has the wrong number of images");
          VertexSet hit;
          for (Vertex v : k.image) {
            g.check(v);
            hit.insert(v);
          }
          if (hit != g.vertices()) throw InputError("symmetry is not a bijection");
          for (Vertex u = 0; u < g.size(); ++u) {
            for (Vertex v = 0; v < g.size(); ++v) {
              if (g.adjacent(u, v) != g.adjacent(k.image[u], k.image[v])) {
                throw InputError("symmetry does not preserve adjacency");
              }
            }
          }
        }
      },
      e.kind);
}

void validate(const DefiningGraph& g, const AutWord& f) {
  for (const auto& e : f) validate(g, e);
}

bool is_adjacent_transvection(const DefiningGraph& g, const ElementaryAut& e) {
  const auto* t = std::get_if<Transvection>(&e.kind);
  return t != nullptr && g.adjacent(t->v, t->w);
}

namespace {

// Append the image of one letter under one elementary automorphism.
void substitute(const ElementaryAut& e, const Letter& l, Word& out) {
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Inversion>) {
          out.push_back(l.vertex == k.v ? l.inverse() : l);
        } else if constexpr (std::is_same_v<T, Transvection>) {
          if (l.vertex != k.v) {
            out.push_back(l);
          } else if (l.exponent > 0) {
            out.push_back(l);
            out.push_back({k.w, e.sign});
          } else {
            out.push_back({k.w, -e.sign});
            out.push_back(l);
          }
        } else if constexpr (std::is_same_v<T, PartialConjugation>) {
          if (k.component.contains(l.vertex)) {
            out.push_back({k.u, e.sign});
            out.push_back(l);
            out.push_back({k.u, -e.sign});
          } else {
            out.push_back(l);
          }
        } else {
          Vertex target = k.image[l.vertex];
          if (e.sign < 0) {
            const auto it = std::find(k.image.begin(), k.image.end(), l.vertex);
            target = static_cast<Vertex>(it - k.image.begin());
          }
          out.push_back({target, l.exponent});
        }
      },
      e.kind);
}

Word image_of(const std::vector<NormalForm>& images, const Word& x) {
  Word out;
  for (const Letter& l : x) {
    const Word& img = images[l.vertex].word();
    if (l.exponent > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      const Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return out;
}

}  // namespace

std::vector<NormalForm> generator_images(const DefiningGraph& g, const AutWord& f) {
  validate(g, f);
  std::vector<NormalForm> images;
  images.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) images.push_back(normal_form(g, generator(v)));
  for (const auto& e : f) {
    for (auto& img : images) {
      Word next;
      for (const Letter& l : img.word()) substitute(e, l, next);
      img = normal_form(g, next);
    }
  }
  return images;
}

NormalForm apply(const DefiningGraph& g, const AutWord& f, const Word& x) {
  const auto images = generator_images(g, f);
  for (const Letter& l : x) g.check(l.vertex);
  return normal_form(g, image_of(images, x));
}

namespace {

// Shortest representative of the coset h A_{allowed}: drop trailing letters
// from `allowed` until none is left.
Word strip_trailing(const DefiningGraph& g, Word h, VertexSet allowed) {
  h = normal_form(g, h).word();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i : last_letters(g, h)) {
      if (allowed.contains(h[i].vertex)) {
        h.erase(h.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return normal_form(g, h).word();
}

}  // namespace

std::optional<Word> inner_conjugator(const DefiningGraph& g, const AutWord& f) {
  const auto images = generator_images(g, f);
  // Every conjugator still in play lies in the coset conj * A_{free}.
  Word conj;
  VertexSet free = g.vertices();
  for (Vertex x = 0; x < g.size(); ++x) {
    const Word y = concat(concat(inverse(conj), images[x].word()), conj);
    const CyclicReduction cr = cyclic_reduce(g, y);
    if (!cr.core.is_generator(x)) return std::nullopt;
    const Word h = strip_trailing(g, cr.conjugator, g.star(x));
    for (const Letter& l : h) {
      if (!free.contains(l.vertex)) return std::nullopt;
    }
    conj = normal_form(g, concat(conj, h)).word();
    free &= g.star(x);
  }
  return conj;
}

AutWord vhat_conjugation(const DefiningGraph& g, Vertex v, VertexSet part) {
  g.check(part);
  const auto parts = vhat_components(g, v).nontrivial();
  if (std::find(parts.begin(), parts.end(), part) == parts.end()) {
    throw InputError(g.format(part) + " is not a nontrivial " + g.name(v) + "-hat component");
  }
  AutWord out;
  for (VertexSet c : components(g, g.vertices() - g.star(v))) {
    if (c.is_subset_of(part)) out.push_back(partial_conjugation(v, c));
  }
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t m = inner == 0 ? 0 : b[0].size();
  IntMatrix out(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

IntMatrix abelianization_matrix(const DefiningGraph& g, const AutWord& f) {
  const auto images = generator_images(g, f);
  IntMatrix m(g.size(), std::vector<std::int64_t>(g.size(), 0));
  for (Vertex j = 0; j < g.size(); ++j) {
    for (const Letter& l : images[j].word()) m[l.vertex][j] += l.exponent;
  }
  return m;
}

std::vector<ElementaryAut> laurence_generators(const DefiningGraph& g, GeneratorFilter filter) {
  const bool drop_adjacent =
      filter == GeneratorFilter::kNoAdjacent || filter == GeneratorFilter::kPureNoAdjacent;
  const bool pure = filter == GeneratorFilter::kPure || filter == GeneratorFilter::kPureNoAdjacent;
  std::vector<ElementaryAut> out;
  for (Vertex v = 0; v < g.size(); ++v) out.push_back(inversion(v));
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex w = 0; w < g.size(); ++w) {
      if (v == w || !dominates(g, v, w)) continue;
      if (drop_adjacent && g.adjacent(v, w)) continue;
      out.push_back(transvection(v, w));
    }
  }
  for (Vertex u = 0; u < g.size(); ++u) {
    for (VertexSet c : components(g, g.vertices() - g.star(u))) {
      out.push_back(partial_conjugation(u, c));
    }
  }
  if (!pure) {
    for (auto& image : graph_automorphisms(g)) out.push_back(symmetry(std::move(image)));
  }
  return out;
}

namespace {

struct NormalFormLess {
  bool operator()(const Word& a, const Word& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
  }
};

// Group elements of word length <= bound, shortest first.
std::vector<Word> ball(const DefiningGraph& g, std::size_t bound) {
  std::vector<Word> out{Word{}};
  std::set<Word, NormalFormLess> seen{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= bound; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Vertex v = 0; v < g.size(); ++v) {
        for (int s : {1, -1}) {
          Word next = normal_form(g, concat(out[i], generator(v, s))).word();
          if (seen.insert(next).second) out.push_back(std::move(next));
        }
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace

LambdaEstimate lambda_bounded(const DefiningGraph& g, const AutWord& f, Vertex w,
                              std::size_t bound) {
  g.check(w);
  const auto images = generator_images(g, f);
  LambdaEstimate best;
  best.bound = bound;
  bool first = true;
  for (const Word& c : ball(g, bound)) {
    std::size_t worst = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (v == w) continue;
      const Word twisted = concat(concat(c, images[v].word()), inverse(c));
      worst = std::max(worst, max_power(g, twisted, w));
    }
    if (first || worst < best.value) {
      best.value = worst;
      best.best_conjugator = c;
      first = false;
    }
  }
  return best;
}

namespace {

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

ElementaryKind parse_kind(const DefiningGraph& g, const std::string& head, const std::string& body,
                          const std::string& token) {
  if (head == "inv") return Inversion{g.index(trim(body))};
  if (head == "tv") {
    const auto args = split(body, ',');
    if (args.size() != 2) throw InputError("tv takes two vertices in '" + token + "'");
    return Transvection{g.index(args[0]), g.index(args[1])};
  }
  if (head == "pc") {
    const auto bar = body.find('|');
    if (bar == std::string::npos) throw InputError("pc needs 'u|c1,c2,...' in '" + token + "'");
    PartialConjugation pc{g.index(trim(body.substr(0, bar))), {}};
    for (const auto& name : split(body.substr(bar + 1), ',')) {
      if (!name.empty()) pc.component.insert(g.index(name));
    }
    return pc;
  }
  if (head == "sym") {
    Symmetry s;
    for (Vertex v = 0; v < g.size(); ++v) s.image.push_back(v);
    VertexSet assigned;
    for (const auto& pair : split(body, ',')) {
      if (pair.empty()) continue;
      const auto arrow = pair.find("->");
      if (arrow == std::string::npos) throw InputError("sym needs 'a->b' pairs in '" + token + "'");
      const Vertex from = g.index(trim(pair.substr(0, arrow)));
      if (assigned.contains(from)) throw InputError("sym maps a vertex twice in '" + token + "'");
      assigned.insert(from);
      s.image[from] = g.index(trim(pair.substr(arrow + 2)));
    }
    return s;
  }
  throw InputError("unknown elementary automorphism '" + token + "'");
}

}  // namespace

AutWord parse_autword(const DefiningGraph& g, std::string_view text) {
  AutWord out;
  const std::string all = trim(text);
  if (all.empty() || all == "id") return out;
  for (const auto& token : split(all, ';')) {
    if (token.empty()) continue;
    const auto open = token.find('(');
    const auto close = token.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      throw InputError("malformed elementary automorphism '" + token + "'");
    }
    long exponent = 1;
    const std::string suffix = trim(token.substr(close + 1));
    if (!suffix.empty()) {
      if (suffix.front() != '^') throw InputError("malformed suffix in '" + token + "'");
      const char* begin = suffix.data() + 1;
      const char* end = suffix.data() + suffix.size();
      auto [ptr, ec] = std::from_chars(begin, end, exponent);
      if (ec != std::errc() || ptr != end || exponent == 0) {
        throw InputError("malformed exponent in '" + token + "'");
      }
    }
    const ElementaryKind kind = parse_kind(g, trim(token.substr(0, open)),
                                           token.substr(open + 1, close - open - 1), token);
    const ElementaryAut e{kind, exponent > 0 ? 1 : -1};
    validate(g, e);
    for (long i = 0; i < std::labs(exponent); ++i) out.push_back(e);
  }
  return out;
}

std::string format_elementary(const DefiningGraph& g, const ElementaryAut& e) {
  std::string out = std::visit(
      [&](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Inversion>) {
          return "inv(" + g.name(k.v) + ")";
        } else if constexpr (std::is_same_v<T, Transvection>) {
          return "tv(" + g.name(k.v) + "," + g.name(k.w) + ")";
        } else if constexpr (std::is_same_v<T, PartialConjugation>) {
          std::string s = "pc(" + g.name(k.u) + "|";
          bool first = true;
          for (Vertex c : k.component) {
            if (!first) s += ",";
            s += g.name(c);
            first = false;
          }
          return s + ")";
        } else {
          std::string s = "sym(";
          bool first = true;
          for (Vertex v = 0; v < k.image.size(); ++v) {
            if (k.image[v] == v) continue;
            if (!first) s += ",";
            s += g.name(v) + "->" + g.name(k.image[v]);
            first = false;
          }
          return s + ")";
        }
      },
      e.kind);
  if (e.sign < 0) out += "^-1";
  return out;
}

std::string format_autword(const DefiningGraph& g, const AutWord& f) {
  if (f.empty()) return "id";
  std::string out;
  for (const auto& e : f) {
    if (!out.empty()) out += "; ";
    out += format_elementary(g, e);
  }
  return out;
}

}  // namespace raag

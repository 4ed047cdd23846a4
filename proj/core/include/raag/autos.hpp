#pragma once

// Elementary (Laurence) automorphisms and words in them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

struct Inversion {
  Vertex v = 0;
  friend bool operator==(const Inversion&, const Inversion&) = default;
};

/// v -> v w, for v <= w and v != w.
struct Transvection {
  Vertex v = 0;
  Vertex w = 0;
  friend bool operator==(const Transvection&, const Transvection&) = default;
};

/// x -> u x u^-1 for every x in `component`, a component of the graph minus st(u).
struct PartialConjugation {
  Vertex u = 0;
  VertexSet component;
  friend bool operator==(const PartialConjugation&, const PartialConjugation&) = default;
};

/// Graph automorphism; image[v] is the image of v.
struct Symmetry {
  std::vector<Vertex> image;
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

using ElementaryKind = std::variant<Inversion, Transvection, PartialConjugation, Symmetry>;

/// An elementary automorphism with a sign; sign -1 denotes its inverse.
struct ElementaryAut {
  ElementaryKind kind;
  int sign = 1;

  ElementaryAut inverse() const { return {kind, -sign}; }
  bool is_transvection() const { return std::holds_alternative<Transvection>(kind); }
  bool is_symmetry() const { return std::holds_alternative<Symmetry>(kind); }
  friend bool operator==(const ElementaryAut&, const ElementaryAut&) = default;
};

inline ElementaryAut inversion(Vertex v, int sign = 1) { return {Inversion{v}, sign}; }
inline ElementaryAut transvection(Vertex v, Vertex w, int sign = 1) {
  return {Transvection{v, w}, sign};
}
inline ElementaryAut partial_conjugation(Vertex u, VertexSet c, int sign = 1) {
  return {PartialConjugation{u, c}, sign};
}
inline ElementaryAut symmetry(std::vector<Vertex> image, int sign = 1) {
  return {Symmetry{std::move(image)}, sign};
}

/// Applied left to right: the first letter acts first.
using AutWord = std::vector<ElementaryAut>;

AutWord inverse(const AutWord& f);
AutWord concat(const AutWord& a, const AutWord& b);
AutWord power(const AutWord& f, int k);
/// f g f^-1 g^-1 in application order.
AutWord commutator(const AutWord& f, const AutWord& g);

/// Throws InputError if the letter is not a valid generator of `g`.
void validate(const DefiningGraph& g, const ElementaryAut& e);
void validate(const DefiningGraph& g, const AutWord& f);

/// Adjacent transvections join commuting vertices.
bool is_adjacent_transvection(const DefiningGraph& g, const ElementaryAut& e);

/// Image of every generator, in normal form.
std::vector<NormalForm> generator_images(const DefiningGraph& g, const AutWord& f);

NormalForm apply(const DefiningGraph& g, const AutWord& f, const Word& x);

/// The conjugator g with f(x) = g x g^-1 for all generators x, if any.
std::optional<Word> inner_conjugator(const DefiningGraph& g, const AutWord& f);
inline bool is_inner(const DefiningGraph& g, const AutWord& f) {
  return inner_conjugator(g, f).has_value();
}

/// Product of the partial conjugations by v of the components of the graph
/// minus st(v) that lie in `part`. Throws InputError unless `part` is a
/// nontrivial v-hat component.
AutWord vhat_conjugation(const DefiningGraph& g, Vertex v, VertexSet part);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Column j holds the exponent sums of the image of vertex j.
IntMatrix abelianization_matrix(const DefiningGraph& g, const AutWord& f);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);

enum class GeneratorFilter {
  kFull,              // S
  kNoAdjacent,        // S-tilde
  kPure,              // S^0
  kPureNoAdjacent,    // S-tilde^0
};

/// Inversions, transvections, partial conjugations and (unless pure)
/// symmetries, in that order; adjacent transvections dropped by the tilde
/// filters.
std::vector<ElementaryAut> laurence_generators(const DefiningGraph& g, GeneratorFilter filter);

struct LambdaEstimate {
  std::size_t value = 0;
  std::size_t bound = 0;
  Word best_conjugator;
};

/// Minimum, over inner twists by conjugators of length <= bound, of the
/// largest w-power in the images of the vertices other than w. An upper
/// bound on the minimum over all representatives.
LambdaEstimate lambda_bounded(const DefiningGraph& g, const AutWord& f, Vertex w,
                              std::size_t bound);

/// Text format: `inv(v)`, `tv(v,w)`, `pc(u|c1,c2)`, `sym(a->b,b->a)`, each
/// optionally suffixed `^-1`, separated by semicolons.
AutWord parse_autword(const DefiningGraph& g, std::string_view text);
std::string format_elementary(const DefiningGraph& g, const ElementaryAut& e);
/// The empty word prints as `id`.
std::string format_autword(const DefiningGraph& g, const AutWord& f);

}  // namespace raag

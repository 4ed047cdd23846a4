#include "raag/homs.hpp"

#include <bit>

#include "raag/conjugation.hpp"
#include "raag/error.hpp"
#include "raag/vertex_order.hpp"

namespace raag {

Vertex HomTarget::to_target(Vertex v) const {
  if (!span.contains(v)) throw InputError("vertex is not in the target graph");
  const std::uint64_t below = span.bits() & ((std::uint64_t{1} << v) - 1);
  return static_cast<Vertex>(std::popcount(below));
}

namespace {

HomTarget make_target(const DefiningGraph& g, VertexSet span, VertexSet cls) {
  return {g.induced(span), span, cls};
}

VertexSet to_target(const HomTarget& t, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out.insert(t.to_target(v));
  return out;
}

void require_maximal(const DefiningGraph& g, VertexSet cls) {
  g.check(cls);
  const auto c = classify(g);
  const std::size_t i = c.find_class(cls);
  if (cls.empty() || i == c.classes.size()) {
    throw InputError(g.format(cls) + " is not an equivalence class");
  }
  if (!c.is_maximal_class(i)) throw InputError(g.format(cls) + " is not a maximal class");
}

void reject_symmetries(const AutWord& f) {
  for (const auto& e : f) {
    if (e.is_symmetry()) {
      throw InputError("graph symmetries are outside the pure outer automorphism group");
    }
  }
}

// Partial conjugations by u of the components of (span - st(u)) inside
// `allowed`, expressed in the target's indexing.
void append_pieces(const DefiningGraph& g, const HomTarget& t, Vertex u, VertexSet allowed,
                   int sign, AutWord& out) {
  for (VertexSet piece : components(g, t.span - g.star(u))) {
    if (piece.is_subset_of(allowed)) {
      out.push_back(partial_conjugation(t.to_target(u), to_target(t, piece), sign));
    } else {
      RAAG_INVARIANT(!piece.intersects(allowed), "component piece straddles a partial conjugation");
    }
  }
}

// Exclusion of `cls` on graph g, without the maximality check.
HomImage exclude_unchecked(const DefiningGraph& g, VertexSet cls, const AutWord& f) {
  HomImage out{make_target(g, g.vertices() - cls, cls), {}};
  const HomTarget& t = out.target;
  for (const auto& e : f) {
    if (const auto* inv = std::get_if<Inversion>(&e.kind)) {
      if (!cls.contains(inv->v)) out.word.push_back(inversion(t.to_target(inv->v), e.sign));
    } else if (const auto* tv = std::get_if<Transvection>(&e.kind)) {
      if (!cls.contains(tv->v) && !cls.contains(tv->w)) {
        out.word.push_back(transvection(t.to_target(tv->v), t.to_target(tv->w), e.sign));
      }
    } else if (const auto* pc = std::get_if<PartialConjugation>(&e.kind)) {
      if (!cls.contains(pc->u)) append_pieces(g, t, pc->u, pc->component - cls, e.sign, out.word);
    }
  }
  return out;
}

}  // namespace

VertexSet maximal_class_of(const DefiningGraph& g, Vertex v) {
  g.check(v);
  const auto c = classify(g);
  const std::size_t i = c.class_of[v];
  if (!c.is_maximal_class(i)) throw InputError("'" + g.name(v) + "' is not a maximal vertex");
  return c.classes[i];
}

HomImage restrict_to_star(const DefiningGraph& g, VertexSet cls, const AutWord& f) {
  if (!is_connected(g)) throw InputError("restriction needs a connected graph");
  require_maximal(g, cls);
  validate(g, f);
  reject_symmetries(f);

  VertexSet star;
  for (Vertex v : cls) star |= g.star(v);
  HomImage out{make_target(g, star, cls), {}};
  const HomTarget& t = out.target;
  for (const auto& e : f) {
    if (const auto* inv = std::get_if<Inversion>(&e.kind)) {
      if (star.contains(inv->v)) out.word.push_back(inversion(t.to_target(inv->v), e.sign));
    } else if (const auto* tv = std::get_if<Transvection>(&e.kind)) {
      if (!star.contains(tv->v)) continue;
      RAAG_INVARIANT(star.contains(tv->w), "transvection leaves the star of a maximal class");
      out.word.push_back(transvection(t.to_target(tv->v), t.to_target(tv->w), e.sign));
    } else if (const auto* pc = std::get_if<PartialConjugation>(&e.kind)) {
      if (star.contains(pc->u)) {
        append_pieces(g, t, pc->u, pc->component, e.sign, out.word);
        continue;
      }
      // The conjugator lies outside st[v]: the action on st[v] is either
      // trivial or conjugation by u, hence inner.
      const VertexSet moved = star - g.star(pc->u);
      RAAG_INVARIANT(moved.is_subset_of(pc->component) || !moved.intersects(pc->component),
                     "partial conjugation splits the star of a maximal class");
      bool single = false;
      for (const auto& part : vhat_components(g, pc->u).parts) {
        if (moved.is_subset_of(part.vertices)) single = true;
      }
      RAAG_INVARIANT(single || moved.empty(),
                     "star of a maximal class meets several hat-components");
    }
  }
  return out;
}

HomImage exclude(const DefiningGraph& g, VertexSet cls, const AutWord& f) {
  require_maximal(g, cls);
  validate(g, f);
  reject_symmetries(f);
  return exclude_unchecked(g, cls, f);
}

HomImage project(const DefiningGraph& g, VertexSet cls, const AutWord& f) {
  if (!is_connected(g)) throw InputError("projection needs a connected graph");
  require_maximal(g, cls);
  validate(g, f);
  reject_symmetries(f);
  if (is_clique(g, g.vertices())) {
    return {make_target(g, {}, cls), {}};
  }
  const HomImage r = restrict_to_star(g, cls, f);
  HomImage e = exclude_unchecked(r.target.graph, to_target(r.target, cls), r.word);
  // Re-express the target span in the source graph's indexing.
  VertexSet span;
  const auto star_members = r.target.span.members();
  for (Vertex v : e.target.span) span.insert(star_members[v]);
  e.target.span = span;
  e.target.cls = cls;
  return e;
}

bool in_kr(const DefiningGraph& g, const AutWord& f) {
  if (!is_connected(g)) throw InputError("K_R membership needs a connected graph");
  const auto c = classify(g);
  for (std::size_t i : c.maximal) {
    const HomImage r = restrict_to_star(g, c.classes[i], f);
    if (!is_inner(r.target.graph, r.word)) return false;
  }
  return true;
}

}  // namespace raag

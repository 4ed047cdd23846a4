#include "raag/conjugation.hpp"

#include "raag/error.hpp"
#include "raag/vertex_order.hpp"

namespace raag {

std::size_t VhatDecomposition::nontrivial_count() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.trivial ? 0 : 1;
  return n;
}

std::vector<VertexSet> VhatDecomposition::nontrivial() const {
  std::vector<VertexSet> out;
  for (const auto& p : parts) {
    if (!p.trivial) out.push_back(p.vertices);
  }
  return out;
}

VhatDecomposition vhat_components(const DefiningGraph& g, Vertex v) {
  g.check(v);
  const VertexSet star = g.star(v);
  const VertexSet rest = g.vertices() - VertexSet::singleton(v);
  // An edge lies in st(v) iff both endpoints do.
  auto allowed = [&](Vertex x) {
    VertexSet out = g.link(x) & rest;
    if (star.contains(x)) out -= star;
    return out;
  };

  VhatDecomposition out;
  out.vertex = v;
  VertexSet unseen = rest;
  while (!unseen.empty()) {
    VertexSet part = VertexSet::singleton(unseen.front());
    VertexSet frontier = part;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex x : frontier) next |= allowed(x);
      next -= part;
      part |= next;
      frontier = next;
    }
    out.parts.push_back({part, part.is_subset_of(star)});
    unseen -= part;
  }
  return out;
}

std::size_t chat(const DefiningGraph& g, Vertex v) {
  return vhat_components(g, v).nontrivial_count();
}

std::size_t kr_rank(const DefiningGraph& g) {
  if (!is_connected(g)) throw InputError("kernel ranks need a connected graph");
  std::size_t rank = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    const std::size_t c = chat(g, v);
    if (c > 1) rank += c - 1;
  }
  return rank;
}

std::size_t kp_rank(const DefiningGraph& g) {
  const std::size_t kr = kr_rank(g);
  return kr + classify(g).leaflike.size();
}

}  // namespace raag

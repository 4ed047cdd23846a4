#include "raag/vertex_order.hpp"

#include "raag/error.hpp"

namespace raag {

bool dominates(const DefiningGraph& g, Vertex v, Vertex w) {
  g.check(v);
  g.check(w);
  return g.link(v).is_subset_of(g.star(w));
}

bool VertexClassification::is_maximal_class(std::size_t index) const {
  for (std::size_t m : maximal) {
    if (m == index) return true;
  }
  return false;
}

std::size_t VertexClassification::find_class(VertexSet c) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == c) return i;
  }
  return classes.size();
}

VertexClassification classify(const DefiningGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> dom(n, std::vector<bool>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) dom[v][w] = dominates(g, v, w);
  }

  VertexClassification out;
  out.class_of.assign(n, n);
  for (Vertex v = 0; v < n; ++v) {
    if (out.class_of[v] != n) continue;
    VertexSet c;
    for (Vertex w = v; w < n; ++w) {
      if (dom[v][w] && dom[w][v]) c.insert(w);
    }
    for (Vertex w : c) out.class_of[w] = out.classes.size();
    out.classes.push_back(c);
  }

  const std::size_t k = out.classes.size();
  out.le.assign(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out.le[i][j] = dom[out.classes[i].front()][out.classes[j].front()];
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    bool top = true;
    for (std::size_t j = 0; j < k && top; ++j) {
      if (j != i && out.le[i][j]) top = false;
    }
    if (top) {
      out.maximal.push_back(i);
      out.maximal_vertices |= out.classes[i];
    }
    const VertexSet c = out.classes[i];
    if (c.size() == 1 || is_clique(g, c)) {
      out.kind.push_back(ClassKind::kAbelian);
    } else {
      RAAG_INVARIANT(is_discrete(g, c), "equivalence class is neither a clique nor discrete");
      out.kind.push_back(ClassKind::kFree);
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    const VertexSet tops = g.link(v) & out.maximal_vertices;
    if (tops.size() == 1) {
      if (dom[v][tops.front()]) out.leaflike.insert(v);
    } else if (tops.size() > 1) {
      const std::size_t c = out.class_of[tops.front()];
      if (tops.is_subset_of(out.classes[c]) && dom[v][tops.front()]) {
        out.ambiguous_leaflike.insert(v);
      }
    }
  }
  return out;
}

ClassStar class_star(const DefiningGraph& g, VertexSet c) {
  g.check(c);
  if (c.empty()) throw InputError("empty set is not an equivalence class");
  const auto cls = classify(g);
  if (cls.find_class(c) == cls.classes.size()) {
    throw InputError(g.format(c) + " is not an equivalence class");
  }
  ClassStar out;
  for (Vertex v : c) out.star |= g.star(v);
  out.link = out.star - c;
  return out;
}

Vertex leaf_base(const DefiningGraph& g, const VertexClassification& cls, Vertex v) {
  if (!cls.leaflike.contains(v)) throw InputError("'" + g.name(v) + "' is not leaf-like");
  return (g.link(v) & cls.maximal_vertices).front();
}

}  // namespace raag

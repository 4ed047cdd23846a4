#pragma once

// The domination order on vertices and its equivalence classes.

#include <cstddef>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

enum class ClassKind { kAbelian, kFree };

/// v <= w iff lk(v) is contained in st(w).
bool dominates(const DefiningGraph& g, Vertex v, Vertex w);

struct VertexClassification {
  /// Equivalence classes ordered by least member.
  std::vector<VertexSet> classes;
  /// class_of[v] indexes into `classes`.
  std::vector<std::size_t> class_of;
  /// le[i][j] iff classes[i] <= classes[j].
  std::vector<std::vector<bool>> le;
  /// Indices of classes with no strictly larger class.
  std::vector<std::size_t> maximal;
  std::vector<ClassKind> kind;
  VertexSet maximal_vertices;
  VertexSet leaflike;
  /// Vertices whose link holds several maximal vertices that are all
  /// equivalent to each other. Not counted as leaf-like; reported instead.
  VertexSet ambiguous_leaflike;

  bool is_maximal_class(std::size_t index) const;
  /// Index of the class equal to `c`, or classes.size() if none.
  std::size_t find_class(VertexSet c) const;
};

VertexClassification classify(const DefiningGraph& g);

struct ClassStar {
  VertexSet star;
  VertexSet link;
};

/// st[v] as the union of the stars of the class members, lk[v] = st[v] - [v].
/// Throws InputError if `c` is not an equivalence class of `g`.
ClassStar class_star(const DefiningGraph& g, VertexSet c);

/// The unique maximal vertex in lk(v) for a leaf-like v.
Vertex leaf_base(const DefiningGraph& g, const VertexClassification& cls, Vertex v);

}  // namespace raag

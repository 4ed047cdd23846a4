#pragma once

// Restriction, exclusion and projection homomorphisms, applied generator by
// generator, and membership in the restriction kernel.

#include <vector>

#include "raag/autos.hpp"
#include "raag/graph.hpp"

namespace raag {

/// Host of an image: the full subgraph st[v], the graph minus [v], or lk[v].
struct HomTarget {
  DefiningGraph graph;
  /// Vertices of the source graph spanning `graph`, in order.
  VertexSet span;
  /// The class [v] the map was built from, in source-graph indices.
  VertexSet cls;

  /// Translate a source vertex into the target's indexing.
  Vertex to_target(Vertex v) const;
};

struct HomImage {
  HomTarget target;
  AutWord word;  // over target.graph
};

/// Restriction to A_{st[v]} for a maximal class `cls` of a connected graph.
HomImage restrict_to_star(const DefiningGraph& g, VertexSet cls, const AutWord& f);

/// Exclusion: the quotient killing every generator of the maximal class `cls`.
HomImage exclude(const DefiningGraph& g, VertexSet cls, const AutWord& f);

/// Projection to A_{lk[v]}: restriction followed by exclusion on st[v].
/// Trivial when the graph is complete.
HomImage project(const DefiningGraph& g, VertexSet cls, const AutWord& f);

/// True iff every restriction to the star of a maximal class is inner.
bool in_kr(const DefiningGraph& g, const AutWord& f);

/// The class of `v`, checked to be maximal.
VertexSet maximal_class_of(const DefiningGraph& g, Vertex v);

}  // namespace raag

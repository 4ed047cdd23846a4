#pragma once

// Homogeneous-dimension recognition and galleries of top-dimensional cliques.

#include <cstddef>
#include <optional>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// Either a dimension (homogeneous) or a witness clique whose link is
/// neither discrete nor connected. An empty witness clique means the graph
/// itself is disconnected and has an edge.
struct HomogeneityResult {
  std::optional<std::size_t> dimension;
  std::optional<VertexSet> witness;

  bool homogeneous() const { return dimension.has_value(); }
};

/// Evaluates the recursive definition: empty is 0, nonempty discrete is 1,
/// connected with every vertex link homogeneous of dimension n-1 is n.
HomogeneityResult homogeneous_dimension(const DefiningGraph& g);

/// Same recursion on the full subgraph spanned by `s`.
std::optional<std::size_t> homogeneous_dimension(const DefiningGraph& g, VertexSet s);

/// Clique-link characterization: connected, and the link of every
/// non-maximal clique is discrete or connected; the dimension is then the
/// size of a maximal clique. Empty and discrete graphs are handled by the
/// base cases (0 and 1).
std::optional<std::size_t> homogeneous_via_links(const DefiningGraph& g);

/// Shortest sequence of n-cliques from `alpha` to `beta` whose consecutive
/// members share n-1 vertices. Throws InputError unless `g` is homogeneous
/// of dimension n >= 2 and both inputs are n-cliques.
std::vector<VertexSet> gallery(const DefiningGraph& g, VertexSet alpha, VertexSet beta);

}  // namespace raag

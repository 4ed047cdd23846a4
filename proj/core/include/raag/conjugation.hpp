#pragma once

// v-hat components and the ranks of the restriction and projection kernels.

#include <cstddef>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

struct VhatPart {
  VertexSet vertices;
  /// Trivial parts lie entirely inside st(v).
  bool trivial = false;
};

/// Partition of V - {v}: x and y share a part iff an edge path joins them
/// without using any edge of st(v).
struct VhatDecomposition {
  Vertex vertex = 0;
  std::vector<VhatPart> parts;

  std::size_t nontrivial_count() const;
  std::vector<VertexSet> nontrivial() const;
};

VhatDecomposition vhat_components(const DefiningGraph& g, Vertex v);

/// Number of nontrivial v-hat components.
std::size_t chat(const DefiningGraph& g, Vertex v);

/// Sum over v of max(chat(v) - 1, 0). Throws InputError on disconnected input.
std::size_t kr_rank(const DefiningGraph& g);

/// kr_rank plus one leaf transvection per leaf-like vertex.
std::size_t kp_rank(const DefiningGraph& g);

}  // namespace raag

#pragma once

// Named graphs and exhaustive graph enumeration for tests.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag::testing {

DefiningGraph make_graph(const std::vector<std::string>& names,
                         const std::vector<std::pair<std::string, std::string>>& edges);

/// Path a-b-c-... on n vertices named a, b, c, ...
DefiningGraph path(std::size_t n);
/// Cycle a-b-...-a on n >= 3 vertices.
DefiningGraph cycle(std::size_t n);
DefiningGraph complete(std::size_t n);
DefiningGraph discrete(std::size_t n);
/// Triangle abc with a pendant edge c-d.
DefiningGraph triangle_tail();
/// Centre a joined to b, c, d.
DefiningGraph claw();
/// b joined to a, c1, c2; arms c1-d1 and c2-d2.
DefiningGraph spider();
/// 1-skeleton of the octahedron: a,b,c,d,e,f with opposite pairs a/f, b/d, c/e.
DefiningGraph octahedron();

/// Graph on n vertices v0.. whose edges are the set bits of `code`, indexed
/// by pairs (i<j) in lexicographic order.
DefiningGraph graph_from_code(std::size_t n, std::uint64_t code);

/// Every labelled graph on n vertices.
void for_each_labelled_graph(std::size_t n, const std::function<void(const DefiningGraph&)>& fn);

/// One representative per isomorphism class on n vertices (n <= 7).
std::vector<DefiningGraph> unlabelled_graphs(std::size_t n);

/// Isomorphism representatives on 1..max_n vertices, optionally connected only.
std::vector<DefiningGraph> graph_corpus(std::size_t max_n, bool connected_only);

}  // namespace raag::testing

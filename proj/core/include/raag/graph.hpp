#pragma once

// Defining graphs and the link/star/perp calculus on vertex sets.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

/// Index of a vertex in its host graph's canonical (declaration) order.
using Vertex = std::size_t;

/// A subset of the vertices of one host graph, stored as a bitmask.
/// Iteration visits members in canonical order.
class VertexSet {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static constexpr VertexSet singleton(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  /// The first `n` vertices.
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  /// Least member in canonical order. Requires a nonempty set.
  constexpr Vertex front() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> members() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order on vertex sets: lexicographic on the sorted member lists.
bool canonical_less(VertexSet a, VertexSet b);

/// Finite simplicial graph with named vertices. Immutable after construction.
/// Declaration order of the vertices is the canonical order used everywhere.
class DefiningGraph {
 public:
  DefiningGraph() = default;

  /// Throws InputError on duplicate names, unknown endpoints or self-loops.
  DefiningGraph(std::vector<std::string> names,
                const std::vector<std::pair<std::string, std::string>>& edges);

  /// Build from adjacency rows over indices; names default to v0, v1, ...
  static DefiningGraph from_adjacency(std::vector<VertexSet> adjacency,
                                      std::vector<std::string> names = {});

  std::size_t size() const { return names_.size(); }
  VertexSet vertices() const { return VertexSet::first(size()); }
  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a vertex name; throws InputError if unknown.
  Vertex index(std::string_view name) const;
  bool has_vertex(std::string_view name) const;

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  VertexSet link(Vertex v) const { return adjacency_[v]; }
  VertexSet star(Vertex v) const { return adjacency_[v] | VertexSet::singleton(v); }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Full subgraph spanned by `s`, vertex order inherited. The i-th vertex of
  /// the result is the i-th member of `s`.
  DefiningGraph induced(VertexSet s) const;

  /// Throws InputError if `s` mentions a vertex beyond this graph.
  void check(VertexSet s) const;
  void check(Vertex v) const;

  std::string format(VertexSet s) const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> adjacency_;
};

/// Parse the line-oriented graph file format. Errors carry line numbers.
DefiningGraph parse_graph(std::string_view text);
DefiningGraph load_graph(const std::string& path);
std::string to_graph_text(const DefiningGraph& g);

enum class Neighborhood { kLink, kStar, kPerp };

/// link(S) = intersection of links, perp(S) = intersection of stars,
/// star(S) = link(S) plus S. All three are the full vertex set for S empty.
VertexSet neighborhood(const DefiningGraph& g, VertexSet s, Neighborhood kind);

inline VertexSet link_of(const DefiningGraph& g, VertexSet s) {
  return neighborhood(g, s, Neighborhood::kLink);
}
inline VertexSet star_of(const DefiningGraph& g, VertexSet s) {
  return neighborhood(g, s, Neighborhood::kStar);
}
inline VertexSet perp_of(const DefiningGraph& g, VertexSet s) {
  return neighborhood(g, s, Neighborhood::kPerp);
}

bool is_clique(const DefiningGraph& g, VertexSet s);

/// No edges inside `s`.
bool is_discrete(const DefiningGraph& g, VertexSet s);

/// Connected components of the full subgraph spanned by `s`, ordered by
/// least member.
std::vector<VertexSet> components(const DefiningGraph& g, VertexSet s);

bool is_connected(const DefiningGraph& g, VertexSet s);
inline bool is_connected(const DefiningGraph& g) { return is_connected(g, g.vertices()); }

/// Maximal cliques of the full subgraph spanned by `s` (pivoting
/// Bron-Kerbosch), sorted canonically.
std::vector<VertexSet> maximal_cliques(const DefiningGraph& g, VertexSet s);
inline std::vector<VertexSet> maximal_cliques(const DefiningGraph& g) {
  return maximal_cliques(g, g.vertices());
}

/// Every clique (including the empty one) of `g`, by size then canonically.
std::vector<VertexSet> all_cliques(const DefiningGraph& g);

bool has_triangle(const DefiningGraph& g);

/// Adjacency-preserving permutations, as images of each vertex, in
/// lexicographic order; the identity comes first.
std::vector<std::vector<Vertex>> graph_automorphisms(const DefiningGraph& g);

}  // namespace raag

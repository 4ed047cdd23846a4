#include "support/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace raag::testing {

namespace {

std::string letter_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

std::vector<std::string> letter_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(letter_name(i));
  return out;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Adjacency as a bit code under a relabelling `perm` (new index of each vertex).
std::uint64_t code_under(const std::vector<std::uint64_t>& adj, const std::vector<int>& perm) {
  const std::size_t n = adj.size();
  std::vector<std::uint64_t> relabelled(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (adj[v] >> w & 1) relabelled[perm[v]] |= std::uint64_t{1} << perm[w];
    }
  }
  std::uint64_t code = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (relabelled[i] >> j & 1) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

// Smallest code over relabellings that sort vertices by a refined degree
// signature; permutations only act within equal-signature blocks.
std::uint64_t canonical_code(const std::vector<std::uint64_t>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> signature(n);
  for (std::size_t v = 0; v < n; ++v) {
    signature[v].push_back(std::popcount(adj[v]));
    std::vector<int> nbr;
    for (std::size_t w = 0; w < n; ++w) {
      if (adj[v] >> w & 1) nbr.push_back(std::popcount(adj[w]));
    }
    std::sort(nbr.begin(), nbr.end());
    signature[v].insert(signature[v].end(), nbr.begin(), nbr.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return signature[a] < signature[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && signature[order[j]] == signature[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::vector<int> perm(n);
      for (std::size_t pos = 0; pos < n; ++pos) perm[order[pos]] = static_cast<int>(pos);
      best = std::min(best, code_under(adj, perm));
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      rec(b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

std::vector<std::uint64_t> adjacency_of(std::size_t n, std::uint64_t code) {
  std::vector<std::uint64_t> adj(n, 0);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (code >> bit & 1) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return adj;
}

}  // namespace

DefiningGraph make_graph(const std::vector<std::string>& names,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  return DefiningGraph(names, edges);
}

DefiningGraph path(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(letter_name(i), letter_name(i + 1));
  return make_graph(letter_names(n), edges);
}

DefiningGraph cycle(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(letter_name(i), letter_name((i + 1) % n));
  return make_graph(letter_names(n), edges);
}

DefiningGraph complete(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(letter_name(i), letter_name(j));
  }
  return make_graph(letter_names(n), edges);
}

DefiningGraph discrete(std::size_t n) { return make_graph(letter_names(n), {}); }

DefiningGraph triangle_tail() {
  return make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}});
}

DefiningGraph claw() {
  return make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
}

DefiningGraph spider() {
  return make_graph({"a", "b", "c1", "d1", "c2", "d2"},
                    {{"a", "b"}, {"b", "c1"}, {"b", "c2"}, {"c1", "d1"}, {"c2", "d2"}});
}

DefiningGraph octahedron() {
  const std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
  const std::set<std::pair<std::string, std::string>> opposite{{"a", "f"}, {"b", "d"}, {"c", "e"}};
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (!opposite.contains({names[i], names[j]})) edges.emplace_back(names[i], names[j]);
    }
  }
  return make_graph(names, edges);
}

DefiningGraph graph_from_code(std::size_t n, std::uint64_t code) {
  const auto adj = adjacency_of(n, code);
  std::vector<VertexSet> sets;
  for (std::uint64_t a : adj) sets.emplace_back(a);
  return DefiningGraph::from_adjacency(sets);
}

void for_each_labelled_graph(std::size_t n, const std::function<void(const DefiningGraph&)>& fn) {
  const std::uint64_t count = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < count; ++code) fn(graph_from_code(n, code));
}

std::vector<DefiningGraph> unlabelled_graphs(std::size_t n) {
  // Grow representatives one vertex at a time; every graph on n vertices is
  // a one-vertex extension of some graph on n-1 vertices.
  std::set<std::uint64_t> level{0};
  for (std::size_t m = 1; m < n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const auto adj = adjacency_of(m, code);
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << m); ++nbrs) {
        auto grown = adj;
        grown.push_back(nbrs);
        for (std::size_t v = 0; v < m; ++v) {
          if (nbrs >> v & 1) grown[v] |= std::uint64_t{1} << m;
        }
        next.insert(canonical_code(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<DefiningGraph> out;
  if (n == 0) return out;
  for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  return out;
}

std::vector<DefiningGraph> graph_corpus(std::size_t max_n, bool connected_only) {
  std::vector<DefiningGraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& g : unlabelled_graphs(n)) {
      if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace raag::testing

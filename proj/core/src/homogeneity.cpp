#include "raag/homogeneity.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "raag/error.hpp"

namespace raag {

namespace {

class DimensionMemo {
 public:
  explicit DimensionMemo(const DefiningGraph& g) : g_(g) {}

  // kNone marks "not homogeneous".
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t of(VertexSet s) {
    if (s.empty()) return 0;
    auto it = memo_.find(s.bits());
    if (it != memo_.end()) return it->second;
    const std::size_t d = compute(s);
    memo_.emplace(s.bits(), d);
    return d;
  }

 private:
  std::size_t compute(VertexSet s) {
    if (is_discrete(g_, s)) return 1;
    if (!is_connected(g_, s)) return kNone;
    std::size_t common = kNone;
    for (Vertex v : s) {
      const std::size_t d = of(g_.link(v) & s);
      if (d == kNone) return kNone;
      if (common == kNone) {
        common = d;
      } else if (common != d) {
        return kNone;
      }
    }
    return common + 1;
  }

  const DefiningGraph& g_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

bool discrete_or_connected(const DefiningGraph& g, VertexSet s) {
  return is_discrete(g, s) || is_connected(g, s);
}

}  // namespace

std::optional<std::size_t> homogeneous_dimension(const DefiningGraph& g, VertexSet s) {
  g.check(s);
  DimensionMemo memo(g);
  const std::size_t d = memo.of(s);
  if (d == DimensionMemo::kNone) return std::nullopt;
  return d;
}

HomogeneityResult homogeneous_dimension(const DefiningGraph& g) {
  HomogeneityResult out;
  out.dimension = homogeneous_dimension(g, g.vertices());
  if (out.dimension) return out;
  // A failing graph has a clique whose link is neither discrete nor connected;
  // report the first one in canonical order.
  for (VertexSet clique : all_cliques(g)) {
    if (!discrete_or_connected(g, link_of(g, clique))) {
      out.witness = clique;
      return out;
    }
  }
  RAAG_INVARIANT(false, "non-homogeneous graph without a witness clique");
}

std::optional<std::size_t> homogeneous_via_links(const DefiningGraph& g) {
  if (g.size() == 0) return 0;
  if (is_discrete(g, g.vertices())) return 1;
  if (!is_connected(g)) return std::nullopt;
  const auto tops = maximal_cliques(g);
  std::size_t top_size = 0;
  for (VertexSet c : tops) top_size = std::max(top_size, c.size());
  for (VertexSet clique : all_cliques(g)) {
    if (std::find(tops.begin(), tops.end(), clique) != tops.end()) continue;
    if (!discrete_or_connected(g, link_of(g, clique))) return std::nullopt;
  }
  return top_size;
}

std::vector<VertexSet> gallery(const DefiningGraph& g, VertexSet alpha, VertexSet beta) {
  g.check(alpha);
  g.check(beta);
  const auto dim = homogeneous_dimension(g, g.vertices());
  if (!dim || *dim < 2) throw InputError("gallery needs a homogeneous graph of dimension >= 2");
  const std::size_t n = *dim;
  for (VertexSet c : {alpha, beta}) {
    if (c.size() != n || !is_clique(g, c)) {
      throw InputError(g.format(c) + " is not a " + std::to_string(n) + "-clique");
    }
  }
  if (alpha == beta) return {alpha};

  // Every maximal clique has n vertices, so the chambers are exactly these.
  const auto chambers = maximal_cliques(g);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < chambers.size(); ++i) index.emplace(chambers[i].bits(), i);
  const std::size_t start = index.at(alpha.bits());
  const std::size_t goal = index.at(beta.bits());

  auto adjacent = [&](std::size_t i, std::size_t j) {
    return (chambers[i] & chambers[j]).size() == n - 1;
  };
  const std::size_t unseen = chambers.size();
  std::vector<std::size_t> dist(chambers.size(), unseen);
  dist[goal] = 0;
  std::deque<std::size_t> queue{goal};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t next = 0; next < chambers.size(); ++next) {
      if (dist[next] != unseen || !adjacent(cur, next)) continue;
      dist[next] = dist[cur] + 1;
      queue.push_back(next);
    }
  }
  RAAG_INVARIANT(dist[start] != unseen, "homogeneous graph with disconnected chambers");

  // Walk down the distance layers; among equally short continuations take the
  // chamber whose bitmask is smallest.
  std::vector<VertexSet> path{alpha};
  for (std::size_t at = start; at != goal;) {
    std::size_t best = unseen;
    for (std::size_t next = 0; next < chambers.size(); ++next) {
      if (dist[next] + 1 != dist[at] || !adjacent(at, next)) continue;
      if (best == unseen || chambers[next].bits() < chambers[best].bits()) best = next;
    }
    at = best;
    path.push_back(chambers[at]);
  }
  return path;
}

}  // namespace raag

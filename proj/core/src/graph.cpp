#include "raag/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "raag/error.hpp"

namespace raag {

bool canonical_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

DefiningGraph::DefiningGraph(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)), adjacency_(names_.size()) {
  if (names_.size() > VertexSet::kMaxVertices) {
    throw InputError("graphs are limited to 64 vertices");
  }
  std::unordered_map<std::string, Vertex> seen;
  for (Vertex v = 0; v < names_.size(); ++v) {
    if (!seen.emplace(names_[v], v).second) {
      throw InputError("duplicate vertex '" + names_[v] + "'");
    }
  }
  for (const auto& [a, b] : edges) {
    auto ia = seen.find(a);
    auto ib = seen.find(b);
    if (ia == seen.end()) throw InputError("unknown endpoint '" + a + "'");
    if (ib == seen.end()) throw InputError("unknown endpoint '" + b + "'");
    if (ia->second == ib->second) throw InputError("self-loop at '" + a + "'");
    adjacency_[ia->second].insert(ib->second);
    adjacency_[ib->second].insert(ia->second);
  }
}

DefiningGraph DefiningGraph::from_adjacency(std::vector<VertexSet> adjacency,
                                            std::vector<std::string> names) {
  const std::size_t n = adjacency.size();
  if (n > VertexSet::kMaxVertices) throw InputError("graphs are limited to 64 vertices");
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  }
  if (names.size() != n) throw InputError("name count does not match adjacency");
  for (Vertex v = 0; v < n; ++v) {
    if (adjacency[v].contains(v)) throw InputError("self-loop at '" + names[v] + "'");
    if (!adjacency[v].is_subset_of(VertexSet::first(n))) {
      throw InputError("adjacency row out of range");
    }
    for (Vertex u : adjacency[v]) {
      if (!adjacency[u].contains(v)) throw InputError("adjacency is not symmetric");
    }
  }
  DefiningGraph g;
  g.names_ = std::move(names);
  g.adjacency_ = std::move(adjacency);
  return g;
}

Vertex DefiningGraph::index(std::string_view name) const {
  for (Vertex v = 0; v < names_.size(); ++v) {
    if (names_[v] == name) return v;
  }
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

bool DefiningGraph::has_vertex(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t DefiningGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> DefiningGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DefiningGraph DefiningGraph::induced(VertexSet s) const {
  check(s);
  std::vector<Vertex> keep = s.members();
  std::vector<std::string> names;
  std::vector<VertexSet> adjacency(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    names.push_back(names_[keep[i]]);
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) adjacency[i].insert(j);
    }
  }
  return from_adjacency(std::move(adjacency), std::move(names));
}

void DefiningGraph::check(VertexSet s) const {
  if (!s.is_subset_of(vertices())) throw InputError("vertex set mentions an unknown vertex");
}

void DefiningGraph::check(Vertex v) const {
  if (v >= size()) throw InputError("unknown vertex index " + std::to_string(v));
}

std::string DefiningGraph::format(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += names_[v];
    first = false;
  }
  return out + "}";
}

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

DefiningGraph parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t vertices_line = 0;
  std::size_t edges_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("vertices:")) {
      if (vertices_line != 0) parse_fail(lineno, "second 'vertices:' line");
      vertices_line = lineno;
      std::istringstream tokens{std::string(line.substr(9))};
      std::string name;
      while (tokens >> name) {
        if (!valid_name(name)) parse_fail(lineno, "invalid vertex name '" + name + "'");
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          parse_fail(lineno, "duplicate vertex '" + name + "'");
        }
        names.push_back(name);
      }
    } else if (line.starts_with("edges:")) {
      if (edges_line != 0) parse_fail(lineno, "second 'edges:' line");
      edges_line = lineno;
      std::istringstream tokens{std::string(line.substr(6))};
      std::string token;
      while (tokens >> token) {
        const auto dash = token.find('-');
        if (dash == std::string::npos || token.find('-', dash + 1) != std::string::npos) {
          parse_fail(lineno, "malformed edge '" + token + "'");
        }
        std::string a = token.substr(0, dash);
        std::string b = token.substr(dash + 1);
        if (!valid_name(a) || !valid_name(b)) parse_fail(lineno, "malformed edge '" + token + "'");
        if (a == b) parse_fail(lineno, "self-loop at '" + a + "'");
        edges.emplace_back(std::move(a), std::move(b));
      }
    } else {
      parse_fail(lineno, "malformed line");
    }
  }
  if (vertices_line == 0) throw InputError("line " + std::to_string(lineno + 1) + ": missing 'vertices:' line");
  for (const auto& [a, b] : edges) {
    for (const auto* endpoint : {&a, &b}) {
      if (std::find(names.begin(), names.end(), *endpoint) == names.end()) {
        parse_fail(edges_line, "unknown endpoint '" + *endpoint + "'");
      }
    }
  }
  if (names.size() > VertexSet::kMaxVertices) parse_fail(vertices_line, "more than 64 vertices");
  return DefiningGraph(std::move(names), edges);
}

DefiningGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string to_graph_text(const DefiningGraph& g) {
  std::string out = "vertices:";
  for (const auto& n : g.names()) out += " " + n;
  out += "\nedges:";
  for (const auto& [u, v] : g.edges()) out += " " + g.name(u) + "-" + g.name(v);
  return out + "\n";
}

VertexSet neighborhood(const DefiningGraph& g, VertexSet s, Neighborhood kind) {
  g.check(s);
  VertexSet links = g.vertices();
  VertexSet stars = g.vertices();
  for (Vertex w : s) {
    links &= g.link(w);
    stars &= g.star(w);
  }
  switch (kind) {
    case Neighborhood::kLink:
      return links;
    case Neighborhood::kPerp:
      return stars;
    case Neighborhood::kStar:
      return links | s;
  }
  return {};
}

bool is_clique(const DefiningGraph& g, VertexSet s) {
  g.check(s);
  for (Vertex v : s) {
    if (!(s - VertexSet::singleton(v)).is_subset_of(g.link(v))) return false;
  }
  return true;
}

bool is_discrete(const DefiningGraph& g, VertexSet s) {
  g.check(s);
  for (Vertex v : s) {
    if (g.link(v).intersects(s)) return false;
  }
  return true;
}

std::vector<VertexSet> components(const DefiningGraph& g, VertexSet s) {
  g.check(s);
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet part = VertexSet::singleton(rest.front());
    VertexSet frontier = part;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.link(v);
      next = (next & s) - part;
      part |= next;
      frontier = next;
    }
    out.push_back(part);
    rest -= part;
  }
  return out;
}

bool is_connected(const DefiningGraph& g, VertexSet s) {
  return components(g, s).size() <= 1;
}

namespace {

void bron_kerbosch(const DefiningGraph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  Vertex pivot = (p | x).front();
  std::size_t best = 0;
  for (Vertex u : p | x) {
    const std::size_t c = (p & g.link(u)).size();
    if (c >= best) {
      best = c;
      pivot = u;
    }
  }
  for (Vertex v : p - g.link(pivot)) {
    bron_kerbosch(g, r | VertexSet::singleton(v), p & g.link(v), x & g.link(v), out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const DefiningGraph& g, VertexSet s) {
  g.check(s);
  std::vector<VertexSet> out;
  bron_kerbosch(g, {}, s, {}, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<VertexSet> all_cliques(const DefiningGraph& g) {
  std::vector<VertexSet> out{VertexSet{}};
  // Extend each clique only by vertices above its largest member.
  for (std::size_t i = 0; i < out.size(); ++i) {
    const VertexSet c = out[i];
    VertexSet candidates = g.vertices();
    for (Vertex v : c) candidates &= g.link(v);
    for (Vertex v : candidates) {
      if (c.empty() || v > c.members().back()) out.push_back(c | VertexSet::singleton(v));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return canonical_less(a, b);
  });
  return out;
}

bool has_triangle(const DefiningGraph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.link(u).intersects(g.link(v))) return true;
  }
  return false;
}

namespace {

void extend_automorphism(const DefiningGraph& g, std::vector<Vertex>& image, VertexSet used,
                         std::vector<std::vector<Vertex>>& out) {
  const Vertex v = image.size();
  if (v == g.size()) {
    out.push_back(image);
    return;
  }
  for (Vertex candidate : g.vertices() - used) {
    if (g.degree(candidate) != g.degree(v)) continue;
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u) {
      ok = g.adjacent(u, v) == g.adjacent(image[u], candidate);
    }
    if (!ok) continue;
    image.push_back(candidate);
    extend_automorphism(g, image, used | VertexSet::singleton(candidate), out);
    image.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Vertex>> graph_automorphisms(const DefiningGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> image;
  extend_automorphism(g, image, {}, out);
  return out;
}

}  // namespace raag

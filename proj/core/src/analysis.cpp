#include "raag/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "raag/conjugation.hpp"
#include "raag/error.hpp"

namespace raag {

std::size_t mu_unitriangular(std::size_t k) {
  if (k < 2) throw InputError("mu(U_k) needs k >= 2");
  return static_cast<std::size_t>(std::bit_width(k - 1));
}

namespace {

// Vertices outside st(v1) grouped into components, keeping those that are
// not inside st(last).
std::vector<VertexSet> escaping_components(const DefiningGraph& g, Vertex first, Vertex last) {
  std::vector<VertexSet> out;
  for (VertexSet c : components(g, g.vertices() - g.star(first))) {
    if (!c.is_subset_of(g.star(last))) out.push_back(c);
  }
  return out;
}

bool nondecreasing(const DefiningGraph& g, const std::vector<Vertex>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!dominates(g, seq[i], seq[i + 1])) return false;
  }
  return true;
}

VertexSet as_set(const std::vector<Vertex>& seq, std::size_t from) {
  VertexSet s;
  for (std::size_t i = from; i < seq.size(); ++i) s.insert(seq[i]);
  return s;
}

class CertificateSearch {
 public:
  explicit CertificateSearch(const DefiningGraph& g) : g_(g), cls_(classify(g)) {}

  std::vector<UkCertificate> run() {
    for (Vertex v = 0; v < g_.size(); ++v) {
      seq_.assign(1, v);
      extend_chain();
      extend_conjugation();
    }
    std::vector<UkCertificate> out = std::move(chains_);
    out.insert(out.end(), conjugations_.begin(), conjugations_.end());
    return out;
  }

 private:
  // Equivalent consecutive vertices appear in increasing order only; any
  // certificate can be rearranged this way without changing its k.
  bool may_follow(Vertex last, Vertex next) const {
    if (seq_.end() != std::find(seq_.begin(), seq_.end(), next)) return false;
    if (!dominates(g_, last, next)) return false;
    if (cls_.class_of[last] == cls_.class_of[next] && next < last) return false;
    return true;
  }

  void extend_chain() {
    if (seq_.size() >= 2) record(chains_, CertificateKind::kChain, seq_.size(), {});
    const VertexSet clique = as_set(seq_, 1);
    for (Vertex x = 0; x < g_.size(); ++x) {
      if (!may_follow(seq_.back(), x)) continue;
      if (!clique.is_subset_of(g_.link(x))) continue;
      seq_.push_back(x);
      extend_chain();
      seq_.pop_back();
    }
  }

  void extend_conjugation() {
    auto escaping = escaping_components(g_, seq_.front(), seq_.back());
    if (escaping.size() >= 2) {
      record(conjugations_, CertificateKind::kChainWithConjugation, seq_.size() + 1,
             std::move(escaping));
    }
    const VertexSet clique = as_set(seq_, 0);
    for (Vertex x = 0; x < g_.size(); ++x) {
      if (!may_follow(seq_.back(), x)) continue;
      if (!clique.is_subset_of(g_.link(x))) continue;
      seq_.push_back(x);
      extend_conjugation();
      seq_.pop_back();
    }
  }

  void record(std::vector<UkCertificate>& into, CertificateKind kind, std::size_t k,
              std::vector<VertexSet> comps) {
    if (!into.empty() && into.front().k > k) return;
    if (!into.empty() && into.front().k < k) into.clear();
    into.push_back({k, kind, seq_, std::move(comps)});
  }

  const DefiningGraph& g_;
  VertexClassification cls_;
  std::vector<Vertex> seq_;
  std::vector<UkCertificate> chains_;
  std::vector<UkCertificate> conjugations_;
};

}  // namespace

bool validate_certificate(const DefiningGraph& g, const UkCertificate& c) {
  const auto& seq = c.vertices;
  for (Vertex v : seq) {
    if (v >= g.size()) return false;
  }
  if (as_set(seq, 0).size() != seq.size()) return false;
  if (!nondecreasing(g, seq)) return false;
  switch (c.kind) {
    case CertificateKind::kChain:
      return c.k >= 2 && seq.size() == c.k && is_clique(g, as_set(seq, 1)) && c.components.empty();
    case CertificateKind::kChainWithConjugation: {
      if (c.k < 2 || seq.size() + 1 != c.k || !is_clique(g, as_set(seq, 0))) return false;
      const auto escaping = escaping_components(g, seq.front(), seq.back());
      return escaping.size() >= 2 && escaping == c.components;
    }
  }
  return false;
}

std::vector<UkCertificate> uk_certificates(const DefiningGraph& g) {
  auto out = CertificateSearch(g).run();
  for (const auto& c : out) {
    RAAG_INVARIANT(validate_certificate(g, c), "emitted certificate fails its own hypotheses");
  }
  return out;
}

std::vector<AutWord> certificate_transvections(const UkCertificate& c) {
  std::vector<AutWord> out;
  for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
    out.push_back({transvection(c.vertices[i], c.vertices[i + 1])});
  }
  return out;
}

MuBounds mu_bounds(const DefiningGraph& g) {
  MuBounds out;
  for (const auto& c : uk_certificates(g)) out.lower = std::max(out.lower, mu_unitriangular(c.k));
  const std::size_t n = g.size();
  if (n == 0) {
    out.upper = 1;
    return out;
  }
  if (const auto dim = homogeneous_dimension(g, g.vertices())) out.upper = *dim;
  if (n >= 2 && is_clique(g, g.vertices())) {
    const std::size_t gl = mu_unitriangular(n) + 1;
    out.upper = out.upper ? std::min(*out.upper, gl) : gl;
  }
  return out;
}

ClassificationFlags classification_flags(const DefiningGraph& g) {
  ClassificationFlags f;
  const bool homogeneous = homogeneous_dimension(g, g.vertices()).has_value();
  f.tits_alternative = homogeneous;
  f.strong_tits_for_tilde = homogeneous;
  bool adjacent_transvection = false;
  for (Vertex v = 0; v < g.size() && !adjacent_transvection; ++v) {
    for (Vertex w : g.link(v)) {
      if (dominates(g, v, w)) {
        adjacent_transvection = true;
        break;
      }
    }
  }
  f.strong_tits_for_full = homogeneous && !adjacent_transvection;
  bool leafless = true;
  for (Vertex v = 0; v < g.size(); ++v) leafless = leafless && g.degree(v) != 1;
  f.two_dim = is_connected(g) && !has_triangle(g) && leafless;
  return f;
}

GeneratorCensus census(const DefiningGraph& g, GeneratorFilter filter) {
  GeneratorCensus c;
  for (const auto& e : laurence_generators(g, filter)) {
    ++c.total;
    if (std::holds_alternative<Inversion>(e.kind)) {
      ++c.inversions;
    } else if (e.is_transvection()) {
      ++c.transvections;
      if (is_adjacent_transvection(g, e)) ++c.adjacent_transvections;
    } else if (std::holds_alternative<PartialConjugation>(e.kind)) {
      ++c.partial_conjugations;
    } else {
      ++c.symmetries;
    }
  }
  return c;
}

StructureReport report(const DefiningGraph& g) {
  StructureReport r;
  r.graph = g;
  r.classification = classify(g);
  r.homogeneity = homogeneous_dimension(g);
  r.connected = is_connected(g);
  if (r.connected) {
    r.kr_rank = kr_rank(g);
    r.kp_rank = kp_rank(g);
  }
  r.census_full = census(g, GeneratorFilter::kFull);
  r.census_tilde = census(g, GeneratorFilter::kNoAdjacent);
  r.census_pure = census(g, GeneratorFilter::kPure);
  r.census_pure_tilde = census(g, GeneratorFilter::kPureNoAdjacent);
  r.certificates = uk_certificates(g);
  std::size_t best_k = 0;
  for (const auto& c : r.certificates) best_k = std::max(best_k, c.k);
  r.mu_lower_log2 = best_k >= 2 ? std::log2(static_cast<double>(best_k)) : 0.0;

  const MuBounds mu = mu_bounds(g);
  r.flags = classification_flags(g);
  r.mu_lower = mu.lower;
  r.mu_upper = mu.upper;
  // Without adjacent transvections the strong Tits alternative holds for the
  // whole group, so every solvable subgroup is virtually abelian.
  if (r.flags.strong_tits_for_full) r.mu_upper = 1;
  const std::size_t n = g.size();
  if (n >= 2 && is_clique(g, g.vertices())) {
    r.gl_interval = std::make_pair(mu_unitriangular(n), mu_unitriangular(n) + 1);
  }
  RAAG_INVARIANT(!r.mu_upper || r.mu_lower <= *r.mu_upper, "mu lower bound exceeds upper bound");
  return r;
}

std::string format_certificate(const DefiningGraph& g, const UkCertificate& c) {
  std::string out = "U_" + std::to_string(c.k) + " ";
  out += c.kind == CertificateKind::kChain ? "chain" : "chain-with-conjugation";
  out += " (";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ",";
    out += g.name(c.vertices[i]);
  }
  out += ")";
  if (!c.components.empty()) {
    out += " components";
    for (VertexSet s : c.components) out += " " + g.format(s);
  }
  return out;
}

namespace {

const char* kind_name(ClassKind k) { return k == ClassKind::kAbelian ? "abelian" : "free"; }

std::vector<std::string> names_of(const DefiningGraph& g, VertexSet s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(g.name(v));
  return out;
}

nlohmann::ordered_json census_json(const GeneratorCensus& c) {
  nlohmann::ordered_json j;
  j["inversions"] = c.inversions;
  j["transvections"] = c.transvections;
  j["adjacent_transvections"] = c.adjacent_transvections;
  j["partial_conjugations"] = c.partial_conjugations;
  j["symmetries"] = c.symmetries;
  j["total"] = c.total;
  return j;
}

std::string census_line(const GeneratorCensus& c) {
  std::ostringstream out;
  out << c.total << " (inversions " << c.inversions << ", transvections " << c.transvections
      << " [adjacent " << c.adjacent_transvections << "], partial conjugations "
      << c.partial_conjugations << ", symmetries " << c.symmetries << ")";
  return out.str();
}

constexpr const char* kUnknown = "unknown (open question)";

}  // namespace

nlohmann::ordered_json report_json(const StructureReport& r) {
  const DefiningGraph& g = r.graph;
  nlohmann::ordered_json j;
  j["graph"]["vertices"] = g.names();
  auto& edges = j["graph"]["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});

  auto& cls = j["classification"];
  cls["classes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.classification.classes.size(); ++i) {
    nlohmann::ordered_json c;
    c["vertices"] = names_of(g, r.classification.classes[i]);
    c["kind"] = kind_name(r.classification.kind[i]);
    c["maximal"] = r.classification.is_maximal_class(i);
    cls["classes"].push_back(c);
  }
  cls["leaflike"] = names_of(g, r.classification.leaflike);
  cls["ambiguous_leaflike"] = names_of(g, r.classification.ambiguous_leaflike);

  auto& hom = j["homogeneity"];
  hom["homogeneous"] = r.homogeneity.homogeneous();
  hom["dimension"] = r.homogeneity.dimension ? nlohmann::ordered_json(*r.homogeneity.dimension)
                                             : nlohmann::ordered_json(nullptr);
  hom["witness"] = r.homogeneity.witness
                       ? nlohmann::ordered_json(names_of(g, *r.homogeneity.witness))
                       : nlohmann::ordered_json(nullptr);

  j["kernel_ranks"]["kr_rank"] = r.kr_rank ? nlohmann::ordered_json(*r.kr_rank) : nlohmann::ordered_json(nullptr);
  j["kernel_ranks"]["kp_rank"] = r.kp_rank ? nlohmann::ordered_json(*r.kp_rank) : nlohmann::ordered_json(nullptr);

  j["generator_census"]["S"] = census_json(r.census_full);
  j["generator_census"]["S_tilde"] = census_json(r.census_tilde);
  j["generator_census"]["S0"] = census_json(r.census_pure);
  j["generator_census"]["S_tilde0"] = census_json(r.census_pure_tilde);

  auto& certs = j["certificates"] = nlohmann::ordered_json::array();
  for (const auto& c : r.certificates) {
    nlohmann::ordered_json cj;
    cj["k"] = c.k;
    cj["kind"] = c.kind == CertificateKind::kChain ? "chain" : "chain-with-conjugation";
    std::vector<std::string> seq;
    for (Vertex v : c.vertices) seq.push_back(g.name(v));
    cj["vertices"] = seq;
    cj["components"] = nlohmann::ordered_json::array();
    for (VertexSet s : c.components) cj["components"].push_back(names_of(g, s));
    certs.push_back(cj);
  }

  j["mu_lower"] = r.mu_lower;
  j["mu_lower_log2"] = r.mu_lower_log2;
  j["mu_upper"] = r.mu_upper ? nlohmann::ordered_json(*r.mu_upper) : nlohmann::ordered_json(kUnknown);
  j["gl_interval"] = r.gl_interval
                         ? nlohmann::ordered_json({r.gl_interval->first, r.gl_interval->second})
                         : nlohmann::ordered_json(nullptr);

  auto& flags = j["flags"];
  flags["residually_finite"] = r.flags.residually_finite;
  flags["tits_alternative"] =
      r.flags.tits_alternative ? nlohmann::ordered_json(true) : nlohmann::ordered_json(kUnknown);
  flags["strong_tits_for_tilde"] = r.flags.strong_tits_for_tilde;
  flags["strong_tits_for_full"] = r.flags.strong_tits_for_full;
  flags["two_dim"] = r.flags.two_dim;
  return j;
}

std::string format_report(const StructureReport& r) {
  const DefiningGraph& g = r.graph;
  std::ostringstream out;
  out << "graph: " << g.size() << " vertices, " << g.edge_count() << " edges"
      << (r.connected ? ", connected" : ", disconnected") << "\n";

  out << "classes:";
  for (std::size_t i = 0; i < r.classification.classes.size(); ++i) {
    out << " " << g.format(r.classification.classes[i]) << "["
        << kind_name(r.classification.kind[i])
        << (r.classification.is_maximal_class(i) ? ",maximal" : "") << "]";
  }
  out << "\nleaf-like: " << g.format(r.classification.leaflike) << "\n";
  if (!r.classification.ambiguous_leaflike.empty()) {
    out << "ambiguous leaf-like (several equivalent maximal neighbours): "
        << g.format(r.classification.ambiguous_leaflike) << "\n";
  }

  out << "homogeneous: ";
  if (r.homogeneity.dimension) {
    out << "yes, dimension " << *r.homogeneity.dimension << "\n";
  } else {
    out << "no, witness clique " << g.format(*r.homogeneity.witness) << "\n";
  }

  if (r.kr_rank) {
    out << "rank K_R: " << *r.kr_rank << "\nrank K_P: " << *r.kp_rank << "\n";
  } else {
    out << "rank K_R: n/a (disconnected)\nrank K_P: n/a (disconnected)\n";
  }

  out << "generators S: " << census_line(r.census_full) << "\n";
  out << "generators S~: " << census_line(r.census_tilde) << "\n";
  out << "generators S0: " << census_line(r.census_pure) << "\n";
  out << "generators S~0: " << census_line(r.census_pure_tilde) << "\n";

  out << "certificates: " << r.certificates.size() << "\n";
  for (const auto& c : r.certificates) out << "  " << format_certificate(g, c) << "\n";

  out << "mu lower: " << r.mu_lower << " (log2 form " << r.mu_lower_log2 << ")\n";
  out << "mu upper: " << (r.mu_upper ? std::to_string(*r.mu_upper) : kUnknown) << "\n";
  if (r.gl_interval) {
    out << "mu(GL) interval: [" << r.gl_interval->first << ", " << r.gl_interval->second << "]\n";
  }

  out << "residually finite: yes\n";
  out << "Tits alternative: " << (r.flags.tits_alternative ? "yes" : kUnknown) << "\n";
  out << "strong Tits (no adjacent transvections subgroup): "
      << (r.flags.strong_tits_for_tilde ? "yes" : "not established") << "\n";
  out << "strong Tits (full group): " << (r.flags.strong_tits_for_full ? "yes" : "not established")
      << "\n";
  out << "connected, triangle-free, leafless: " << (r.flags.two_dim ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace raag

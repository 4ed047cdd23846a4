#pragma once

// Solvable-subgroup certificates, derived-length bounds, structural flags and
// the aggregated report.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "raag/autos.hpp"
#include "raag/graph.hpp"
#include "raag/homogeneity.hpp"
#include "raag/vertex_order.hpp"

namespace raag {

/// floor(log2(k - 1)) + 1, the maximal virtual derived length of the
/// unitriangular group U_k. Throws InputError for k < 2.
std::size_t mu_unitriangular(std::size_t k);

enum class CertificateKind {
  /// v1 <= ... <= vk with v2..vk a clique; transvections v_i -> v_i v_{i+1}.
  kChain,
  /// v1 <= ... <= v_{k-1} a clique, and the graph minus st(v1) has two
  /// components outside st(v_{k-1}); adds partial conjugations of one of them.
  kChainWithConjugation,
};

struct UkCertificate {
  std::size_t k = 0;
  CertificateKind kind = CertificateKind::kChain;
  std::vector<Vertex> vertices;
  /// Components of the graph minus st(v1) not inside st(v_{k-1}); only for
  /// the conjugation kind.
  std::vector<VertexSet> components;

  friend bool operator==(const UkCertificate&, const UkCertificate&) = default;
};

/// Re-check a certificate's hypotheses from the graph alone.
bool validate_certificate(const DefiningGraph& g, const UkCertificate& c);

/// For each kind, every certificate achieving the largest k found (k >= 2).
std::vector<UkCertificate> uk_certificates(const DefiningGraph& g);

/// The transvections v_i -> v_i v_{i+1} of a certificate.
std::vector<AutWord> certificate_transvections(const UkCertificate& c);

struct MuBounds {
  std::size_t lower = 1;
  std::optional<std::size_t> upper;
};

/// lower: best certificate; upper: the homogeneous dimension, or the
/// general-linear bound for complete graphs (whichever is smaller).
MuBounds mu_bounds(const DefiningGraph& g);

struct ClassificationFlags {
  bool residually_finite = true;
  bool tits_alternative = false;
  bool strong_tits_for_tilde = false;
  bool strong_tits_for_full = false;
  bool two_dim = false;

  friend bool operator==(const ClassificationFlags&, const ClassificationFlags&) = default;
};

ClassificationFlags classification_flags(const DefiningGraph& g);

struct GeneratorCensus {
  std::size_t inversions = 0;
  std::size_t transvections = 0;
  std::size_t adjacent_transvections = 0;
  std::size_t partial_conjugations = 0;
  std::size_t symmetries = 0;
  std::size_t total = 0;
};

GeneratorCensus census(const DefiningGraph& g, GeneratorFilter filter);

struct StructureReport {
  DefiningGraph graph;
  VertexClassification classification;
  HomogeneityResult homogeneity;
  bool connected = false;
  std::optional<std::size_t> kr_rank;
  std::optional<std::size_t> kp_rank;
  GeneratorCensus census_full;
  GeneratorCensus census_tilde;
  GeneratorCensus census_pure;
  GeneratorCensus census_pure_tilde;
  std::vector<UkCertificate> certificates;
  std::size_t mu_lower = 1;
  /// log2 of the best certificate's k; the weaker form of the lower bound.
  double mu_lower_log2 = 0.0;
  /// Absent when unknown.
  std::optional<std::size_t> mu_upper;
  /// [mu(U_n), mu(U_n) + 1] for complete graphs on n >= 2 vertices.
  std::optional<std::pair<std::size_t, std::size_t>> gl_interval;
  ClassificationFlags flags;
};

StructureReport report(const DefiningGraph& g);

std::string format_report(const StructureReport& r);
nlohmann::ordered_json report_json(const StructureReport& r);

std::string format_certificate(const DefiningGraph& g, const UkCertificate& c);

}  // namespace raag

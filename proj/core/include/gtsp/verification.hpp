#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtsp/ddfacets.hpp"
#include "gtsp/multigraph.hpp"

// The checks run by the acceptance suite and by `gtsp verify`. Each check is
// exact; sampled inputs are derived deterministically from a seed.
namespace gtsp::verification {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Counts certificates emitted during a run and how many re-verified.
struct CertificateTally {
  std::size_t emitted = 0;
  std::size_t verified = 0;

  void record(bool ok) {
    ++emitted;
    if (ok) ++verified;
  }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

struct InstanceOptions {
  std::vector<int> exhaustive_ns;  // every Eulerian multigraph, mult <= max_mult, m <= max_edges
  int max_mult = 2;
  int max_edges = 12;
  std::vector<int> sampled_ns;  // samples are spread round-robin over these
  std::size_t samples = 0;
  int sample_max_edges = 20;
  std::uint64_t seed = 0;
};

std::vector<Multigraph> build_instances(const InstanceOptions& opts);

// decompose succeeds, verify_certificate passes, |steps| = m - n.
CheckResult check_decomposition(const std::vector<Multigraph>& instances, CertificateTally& tally);

// Every instance is inside S_n + polar cone per LP, its certificate
// re-verifies, and the decomposition-derived combination verifies too.
CheckResult check_inclusion(const std::vector<Multigraph>& instances, CertificateTally& tally);

// Vertices of Q_n are integral Eulerian multigraphs, rays are non-negative and
// in the polar cone, every P_n generator with mult <= 2 and m <= 12 satisfies
// every facet, facets are valid for all generators and irredundant, and a
// permuted insertion order yields the same facets.
CheckResult check_facet_level(const QDescription& q, CertificateTally& tally);

// Every facet of Q_n is a non-negativity or a triangle-metric inequality.
CheckResult check_dichotomy(const QDescription& q);

// For `metrics` random metrics, the minimum over all Eulerian multigraphs
// with mult <= 2 and m <= 2n equals the best tour.
CheckResult check_optimization(int n, std::size_t metrics, std::uint64_t seed);

// a . s >= 0 for random metrics a and all shortcut vectors s at each n, plus
// the double-edge identity for every triple at each n <= identity_max_n.
CheckResult check_polarity(const std::vector<int>& ns, std::size_t metrics, int identity_max_n, std::uint64_t seed);

// face_degree_two_check(x) and gtsp-inside  <=>  stsp-inside, over the given
// instances and over `points_per_q` random points of each supplied Q_n.
CheckResult check_face_property(const std::vector<Multigraph>& instances, const std::vector<const QDescription*>& qs,
                                std::size_t points_per_q, std::uint64_t seed, CertificateTally& tally);

// All certificates counted in tally re-verified, and single-coordinate
// tampering of each certificate kind is detected.
CheckResult check_certificate_soundness(const CertificateTally& tally, std::uint64_t seed);

}  // namespace gtsp::verification

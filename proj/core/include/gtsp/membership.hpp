#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtsp/check.hpp"
#include "gtsp/decompose.hpp"
#include "gtsp/edge_space.hpp"
#include "gtsp/lp.hpp"
#include "gtsp/multigraph.hpp"

namespace gtsp {

// Represents a . x >= alpha.
struct LinearInequality {
  EdgeVector a;
  Rational alpha;

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

// Scales (a, alpha) by a positive rational so all coefficients are integers
// with gcd 1. The zero inequality is returned unchanged.
LinearInequality normalize_integral(LinearInequality ineq);

// A strictly violated triangle inequality a_uv > a_uw + a_wv.
struct MetricViolation {
  Vertex u;
  Vertex v;
  Vertex w;
  Rational lhs;  // a_uv
  Rational rhs;  // a_uw + a_wv

  friend bool operator==(const MetricViolation&, const MetricViolation&) = default;
};

class MetricViolationError : public std::invalid_argument {
 public:
  explicit MetricViolationError(MetricViolation violation);
  const MetricViolation& violation() const { return violation_; }

 private:
  MetricViolation violation_;
};

// nullopt when a lies in the metric cone; otherwise the first violation in
// lexicographic order of (u, v, w).
std::optional<MetricViolation> metric_cone_check(const EdgeVector& a);

// The sets of the identity P_n = (S_n + polar of C_n) intersected with the
// non-negative orthant.
enum class SetKind {
  Polar,      // polar of the metric cone, cone of the shortcut vectors
  Stsp,       // S_n, convex hull of tour vectors
  Minkowski,  // S_n + polar cone
  Gtsp,       // (S_n + polar cone) with x >= 0
};

const char* to_string(SetKind set);
// Accepts "polar", "stsp", "minkowski", "gtsp".
std::optional<SetKind> parse_set_kind(const std::string& name);

struct TourTerm {
  HamiltonianCycle cycle;
  Rational weight;

  friend bool operator==(const TourTerm&, const TourTerm&) = default;
};

struct ShortcutTerm {
  ShortcutTriple triple;
  Rational weight;

  friend bool operator==(const ShortcutTerm&, const ShortcutTerm&) = default;
};

// x = sum lambda_i chi^{C_i} + sum mu_t s_t.
struct InsideCertificate {
  std::vector<TourTerm> tours;
  std::vector<ShortcutTerm> shortcuts;

  friend bool operator==(const InsideCertificate&, const InsideCertificate&) = default;
};

enum class Verdict { Inside, Outside };

struct MembershipAnswer {
  SetKind set;
  Verdict verdict;
  InsideCertificate inside;                  // when Inside
  std::optional<LinearInequality> separator;  // when Outside: a.x < alpha, valid for the set
  // The underlying LP outcome passed lp::verify_certificate_lp. False only
  // for answers decided without an LP (a negative coordinate for Gtsp).
  bool lp_certified = false;

  bool inside_set() const { return verdict == Verdict::Inside; }
};

// Tours and shortcut triples for one n; computed once per n and shared.
struct GeneratorTable {
  int n;
  std::vector<HamiltonianCycle> tours;  // empty for n > 8
  std::vector<std::vector<std::size_t>> tour_edges;
  std::vector<ShortcutTriple> triples;
};

const GeneratorTable& generator_table(int n);

// The LP deciding membership of x in one of the finitely generated sets
// (Polar, Stsp, Minkowski). Rows are the edge coordinates, followed by the
// convexity row sum lambda = 1 when tours are involved; tour columns come
// before shortcut columns, each in enumeration order.
lp::LinearSystem membership_system(SetKind set, const EdgeVector& x);

MembershipAnswer polar_membership(const EdgeVector& y);
// The next three require 3 <= n <= 8 (ScopeError otherwise).
MembershipAnswer stsp_membership(const EdgeVector& x);
MembershipAnswer minkowski_membership(const EdgeVector& x);
MembershipAnswer gtsp_membership(const EdgeVector& x);

MembershipAnswer membership(SetKind set, const EdgeVector& x);

// Re-checks an answer from scratch against the generator lists.
CertificateCheck verify_membership(SetKind set, const EdgeVector& x, const MembershipAnswer& answer);

// lambda = 1 on the base cycle, mu = number of occurrences of each triple.
InsideCertificate inside_certificate_from(const DecompositionCertificate& cert);

// Every vertex degree sum_v x_uv equals 2.
bool face_degree_two_check(const EdgeVector& x);

struct TourOptimum {
  Rational value;
  HamiltonianCycle argmin;
};

// Minimum of a . chi^{E(C)} over all tours, first minimizer in enumeration
// order. Throws MetricViolationError if a is not in the metric cone and
// ScopeError unless 3 <= n <= 8.
TourOptimum optimize_metric(const EdgeVector& a, int n);

// All-pairs shortest-path closure of a non-negative weight vector.
EdgeVector shortest_path_closure(const EdgeVector& weights);

// Closure of weights p/q with p uniform in [1,20] and q in [1,6].
EdgeVector random_metric(int n, std::uint64_t seed);

}  // namespace gtsp

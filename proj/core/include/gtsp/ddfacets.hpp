#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "gtsp/membership.hpp"

namespace gtsp {

namespace dd {

using IntVector = std::vector<mpz_class>;

// Rank of a set of integer row vectors (fraction-free elimination). Stops
// early once the rank reaches `cap`.
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cap = SIZE_MAX);

// Extreme rays of the pointed cone { y : row . y >= 0 for every row },
// computed by the double description method with rows inserted in the given
// order. Adjacency of two rays is decided by the rank of the rows tight at
// both. Each ray is scaled to coprime integers. Throws std::invalid_argument
// if the rows do not have full column rank (the cone is not pointed).
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows);

}  // namespace dd

enum class FacetClass { NonNegativity, TriangleMetric, DichotomyViolation };

const char* to_string(FacetClass c);

// NonNegativity: a is a positive multiple of a unit vector and alpha = 0.
// TriangleMetric: a lies in the metric cone. Anything else is a
// DichotomyViolation.
FacetClass classify_facet(const LinearInequality& ineq);

struct ClassifiedFacet {
  LinearInequality inequality;
  FacetClass facet_class;
};

struct VRepresentation {
  std::vector<EdgeVector> vertices;
  std::vector<EdgeVector> rays;
};

// Q_n = (S_n + polar metric cone) intersected with x >= 0, both ways round.
struct QDescription {
  int n;
  std::vector<ClassifiedFacet> facets;  // irredundant, sorted by (a, alpha)
  VRepresentation extreme;              // sorted lexicographically
};

// Homogenizes tours as (chi^C, 1) and shortcut vectors as (s, 0), computes
// the facets of their cone, adds the halfspaces x_e >= 0 and runs the double
// description again to get the vertices and rays of Q_n. A candidate
// inequality is kept as a facet when the extreme elements tight on it have
// homogenized rank |E_n|. insertion_seed = 0 keeps the canonical insertion
// order; any other value inserts generators and halfspaces in a seeded random
// order. Requires n in {4, 5} (ScopeError otherwise); throws std::logic_error
// if some facet is a DichotomyViolation.
QDescription describe_Q(int n, std::uint64_t insertion_seed = 0);

std::vector<ClassifiedFacet> facets_of_Q(int n);
VRepresentation extreme_elements_of_Q(int n);

// Rank of the homogenized extreme elements (vertices as (v, 1), rays as
// (r, 0)) that satisfy the inequality with equality.
std::size_t tight_rank(const VRepresentation& extreme, const LinearInequality& ineq);

}  // namespace gtsp

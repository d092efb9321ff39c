#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gtsp/check.hpp"
#include "gtsp/multigraph.hpp"

namespace gtsp {

// Writes a connected Eulerian multigraph x as
//   x = chi^{E(C)} + sum_t (chi^{uw} + chi^{wv} - chi^{uv})
// by repeatedly replacing a two-edge path u-w-v through a vertex w of degree
// >= 4 with the single edge uv until a Hamiltonian cycle remains.
//
// When G \ w is disconnected, u and v are taken from distinct components
// (split-merge). Otherwise any two distinct neighbours of w work
// (connected-shortcut): G \ w keeps its edges and gains uv, and w keeps
// degree >= 2. The double-edge-pair move covers a vertex whose edges all go to
// one neighbour; with the smallest-index tie-breaking below that neighbour
// always qualifies for one of the first two kinds, so the move is kept for
// completeness but never selected by choose_reduction.

enum class ReductionKind { SplitMerge, ConnectedShortcut, DoubleEdgePair };

const char* to_string(ReductionKind kind);

struct ReductionStep {
  ReductionKind kind;
  // One triple, or two for DoubleEdgePair, in subtraction order.
  std::vector<ShortcutTriple> triples;
  Vertex witness;
};

struct DecompositionCertificate {
  HamiltonianCycle base_cycle;
  // Subtraction order: steps.front() is removed from the input first.
  std::vector<ShortcutTriple> steps;

  friend bool operator==(const DecompositionCertificate&, const DecompositionCertificate&) = default;
};

// Thrown by decompose for inputs outside P_n's generator set.
class NotEulerianError : public std::invalid_argument {
 public:
  explicit NotEulerianError(const std::string& what) : std::invalid_argument(what) {}
};

// Requires is_eulerian_connected(g) and m > n (std::invalid_argument otherwise).
// Picks the smallest-index vertex w of degree >= 4 admitting a split-merge,
// else the smallest admitting a connected-shortcut, else a double-edge-pair;
// u and v are the smallest valid choices.
ReductionStep choose_reduction(const Multigraph& g);

// The two-shortcut move 2 chi^{uw} = (chi^{vu} + chi^{uw} - chi^{vw}) +
// (chi^{vw} + chi^{wu} - chi^{vu}) at a vertex w whose only neighbour is u,
// with v the smallest neighbour of u other than w. Requires degree(w) >= 4.
ReductionStep double_edge_pair_step(const Multigraph& g, Vertex w);

// g -= shortcut_vector(t); throws std::invalid_argument if a multiplicity
// would become negative.
void subtract_shortcut(Multigraph& g, const ShortcutTriple& t);

// Throws NotEulerianError naming an odd-degree vertex or a disconnection.
DecompositionCertificate decompose(const Multigraph& x);

// Checks chi^{E(C)} + sum of shortcut vectors == x exactly, and that replaying
// the steps from x keeps every intermediate a connected Eulerian multigraph.
CertificateCheck verify_certificate(const Multigraph& x, const DecompositionCertificate& cert);

}  // namespace gtsp

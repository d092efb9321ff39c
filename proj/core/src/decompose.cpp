#include "gtsp/decompose.hpp"

#include <algorithm>
#include <string>

namespace gtsp {

namespace {

std::vector<Vertex> distinct_neighbors(const Multigraph& g, Vertex w) {
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= g.n(); ++u) {
    if (u != w && g.mult(u, w) > 0) out.push_back(u);
  }
  return out;
}

std::string edge_name(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

std::string triple_name(const ShortcutTriple& t) {
  return "(" + std::to_string(t.u()) + "," + std::to_string(t.w()) + "," + std::to_string(t.v()) + ")";
}

// Explains why g fails is_eulerian_connected, or returns an empty string.
std::string eulerian_failure(const Multigraph& g) {
  for (Vertex v = 1; v <= g.n(); ++v) {
    const int d = degree(g, v);
    if (d % 2 != 0) return "vertex " + std::to_string(v) + " has odd degree " + std::to_string(d);
  }
  if (!is_connected_spanning(g)) {
    std::vector<bool> seen(static_cast<std::size_t>(g.n()) + 1, false);
    std::vector<Vertex> stack{1};
    seen[1] = true;
    std::vector<Vertex> comp;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y = 1; y <= g.n(); ++y) {
        if (y != x && !seen[y] && g.mult(x, y) > 0) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::string text;
    for (Vertex x : comp) text += (text.empty() ? "{" : ",") + std::to_string(x);
    return "graph is not connected on [" + std::to_string(g.n()) + "]; component of vertex 1 is " + text + "}";
  }
  return {};
}

}  // namespace

const char* to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::SplitMerge:
      return "split-merge";
    case ReductionKind::ConnectedShortcut:
      return "connected-shortcut";
    case ReductionKind::DoubleEdgePair:
      return "double-edge-pair";
  }
  return "unknown";
}

void subtract_shortcut(Multigraph& g, const ShortcutTriple& t) {
  if (g.mult(t.u(), t.w()) < 1 || g.mult(t.w(), t.v()) < 1) {
    throw std::invalid_argument("subtracting shortcut " + triple_name(t) + " makes a multiplicity negative");
  }
  g.add(t.u(), t.w(), -1);
  g.add(t.w(), t.v(), -1);
  g.add(t.u(), t.v(), 1);
}

ReductionStep double_edge_pair_step(const Multigraph& g, Vertex w) {
  const auto nbrs = distinct_neighbors(g, w);
  if (degree(g, w) < 4 || nbrs.size() != 1) {
    throw std::invalid_argument("double-edge-pair needs a vertex of degree >= 4 with a single neighbour");
  }
  const Vertex u = nbrs.front();
  Vertex v = 0;
  for (Vertex x : distinct_neighbors(g, u)) {
    if (x != w) {
      v = x;
      break;
    }
  }
  if (v == 0) throw std::invalid_argument("double-edge-pair needs u to have a neighbour other than w");
  return {ReductionKind::DoubleEdgePair, {ShortcutTriple(v, u, w), ShortcutTriple(v, w, u)}, w};
}

ReductionStep choose_reduction(const Multigraph& g) {
  if (!is_eulerian_connected(g)) {
    throw std::invalid_argument("choose_reduction: " + eulerian_failure(g));
  }
  if (g.edge_count() <= g.n()) throw std::invalid_argument("choose_reduction: graph already has m = n edges");

  std::vector<Vertex> heavy;
  for (Vertex w = 1; w <= g.n(); ++w) {
    if (degree(g, w) >= 4) heavy.push_back(w);
  }
  // m > n and all degrees even force some degree >= 4.
  if (heavy.empty()) throw std::logic_error("choose_reduction: no vertex of degree >= 4 although m > n");

  for (Vertex w : heavy) {
    const auto comps = remove_vertex_components(g, w);
    if (comps.size() < 2) continue;
    std::vector<int> comp_of(static_cast<std::size_t>(g.n()) + 1, -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (Vertex x : comps[c]) comp_of[x] = static_cast<int>(c);
    }
    const auto nbrs = distinct_neighbors(g, w);
    const Vertex u = nbrs.front();
    for (Vertex v : nbrs) {
      if (comp_of[v] != comp_of[u]) return {ReductionKind::SplitMerge, {ShortcutTriple(u, w, v)}, w};
    }
  }
  for (Vertex w : heavy) {
    const auto nbrs = distinct_neighbors(g, w);
    if (nbrs.size() >= 2) return {ReductionKind::ConnectedShortcut, {ShortcutTriple(nbrs[0], w, nbrs[1])}, w};
  }
  return double_edge_pair_step(g, heavy.front());
}

DecompositionCertificate decompose(const Multigraph& x) {
  if (const std::string why = eulerian_failure(x); !why.empty()) {
    throw NotEulerianError("input is not a connected Eulerian multigraph: " + why);
  }
  Multigraph g = x;
  std::vector<ShortcutTriple> steps;
  steps.reserve(static_cast<std::size_t>(x.edge_count() - x.n()));
  while (g.edge_count() > g.n()) {
    const ReductionStep step = choose_reduction(g);
    for (const ShortcutTriple& t : step.triples) {
      subtract_shortcut(g, t);
      steps.push_back(t);
    }
  }

  // Connected with all degrees 2: walk the cycle from vertex 1.
  std::vector<Vertex> order{1};
  Vertex prev = 0;
  Vertex cur = 1;
  while (static_cast<int>(order.size()) < g.n()) {
    Vertex next = 0;
    for (Vertex y = 1; y <= g.n(); ++y) {
      if (y != cur && y != prev && g.mult(cur, y) > 0) {
        next = y;
        break;
      }
    }
    if (next == 0) throw std::logic_error("decompose: residual graph is not a Hamiltonian cycle");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return {HamiltonianCycle(std::move(order)), std::move(steps)};
}

CertificateCheck verify_certificate(const Multigraph& x, const DecompositionCertificate& cert) {
  if (cert.base_cycle.n() != x.n()) {
    return {false, "base cycle has " + std::to_string(cert.base_cycle.n()) + " vertices, input has " +
                       std::to_string(x.n())};
  }
  const EdgeSpace& space = x.space();
  for (const ShortcutTriple& t : cert.steps) {
    if (t.v() > x.n()) return {false, "step " + triple_name(t) + " uses a vertex outside [n]"};
  }

  EdgeVector sum = cycle_vector(cert.base_cycle).to_edge_vector();
  for (const ShortcutTriple& t : cert.steps) sum += shortcut_vector(t, space);
  const EdgeVector target = x.to_edge_vector();
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (sum[i] != target[i]) {
      return {false, "reconstruction mismatch at edge " + edge_name(space.edge(i)) + ": certificate gives " +
                         sum[i].to_string() + ", input has " + target[i].to_string()};
    }
  }

  if (const std::string why = eulerian_failure(x); !why.empty()) {
    return {false, "input is not a connected Eulerian multigraph: " + why};
  }
  Multigraph g = x;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const int before = g.edge_count();
    const auto& t = cert.steps[i];
    if (g.mult(t.u(), t.w()) < 1 || g.mult(t.w(), t.v()) < 1) {
      return {false, "intermediate after step " + std::to_string(i + 1) + " " + triple_name(t) +
                         " has a negative multiplicity"};
    }
    subtract_shortcut(g, t);
    if (const std::string why = eulerian_failure(g); !why.empty()) {
      return {false, "intermediate after step " + std::to_string(i + 1) + " " + triple_name(t) + ": " + why};
    }
    if (g.edge_count() >= before) {
      return {false, "intermediate after step " + std::to_string(i + 1) + " did not lose an edge"};
    }
  }
  return {true, "ok"};
}

}  // namespace gtsp

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gtsp/edge_space.hpp"

namespace gtsp {

// An edge multiset on [n]: non-negative integer multiplicity per edge.
class Multigraph {
 public:
  explicit Multigraph(const EdgeSpace& space);
  // Throws std::invalid_argument on a negative multiplicity or wrong length.
  Multigraph(const EdgeSpace& space, std::vector<int> mult);

  static Multigraph from_edges(const EdgeSpace& space, std::span<const Edge> edges);
  // Requires every coordinate to be a non-negative integer.
  static Multigraph from_edge_vector(const EdgeVector& x);

  const EdgeSpace& space() const { return space_; }
  int n() const { return space_.n(); }
  int edge_count() const { return m_; }

  int mult(std::size_t index) const { return mult_[index]; }
  int mult(Vertex u, Vertex v) const { return mult_[space_.index(u, v)]; }
  const std::vector<int>& multiplicities() const { return mult_; }

  // Adds delta copies of {u,v}; throws std::invalid_argument if the
  // multiplicity would become negative.
  void add(Vertex u, Vertex v, int delta);

  EdgeVector to_edge_vector() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.space_ == b.space_ && a.mult_ == b.mult_;
  }

 private:
  EdgeSpace space_;
  std::vector<int> mult_;
  int m_ = 0;
};

// A Hamiltonian cycle on [n], stored normalized: starts at 1 and the second
// vertex is smaller than the last one.
class HamiltonianCycle {
 public:
  // Throws std::invalid_argument unless order is a permutation of [n], n >= 3.
  explicit HamiltonianCycle(std::vector<Vertex> order);

  int n() const { return static_cast<int>(order_.size()); }
  const std::vector<Vertex>& order() const { return order_; }
  std::vector<Edge> edges() const;

  friend bool operator==(const HamiltonianCycle&, const HamiltonianCycle&) = default;
  friend auto operator<=>(const HamiltonianCycle&, const HamiltonianCycle&) = default;

 private:
  std::vector<Vertex> order_;
};

// Names the shortcut vector chi^{uw} + chi^{wv} - chi^{uv}. The vector is
// symmetric in u and v, so the triple is stored with u < v.
class ShortcutTriple {
 public:
  // Throws std::invalid_argument unless u, w, v are pairwise distinct and positive.
  ShortcutTriple(Vertex u, Vertex w, Vertex v);

  Vertex u() const { return u_; }
  Vertex w() const { return w_; }
  Vertex v() const { return v_; }

  friend bool operator==(const ShortcutTriple&, const ShortcutTriple&) = default;
  friend auto operator<=>(const ShortcutTriple&, const ShortcutTriple&) = default;

 private:
  Vertex u_;
  Vertex w_;
  Vertex v_;
};

int degree(const Multigraph& g, Vertex v);

// Connectivity of the support graph on the full vertex set [n]; isolated
// vertices make the graph disconnected.
bool is_connected_spanning(const Multigraph& g);

bool is_eulerian_connected(const Multigraph& g);

// Components of G \ w on [n] \ {w}; each component sorted, components ordered
// by their smallest vertex.
std::vector<std::vector<Vertex>> remove_vertex_components(const Multigraph& g, Vertex w);

Multigraph cycle_vector(const HamiltonianCycle& cycle);

EdgeVector shortcut_vector(const ShortcutTriple& t, const EdgeSpace& space);

// All (n-1)!/2 cycles in lexicographic order of their normalized vertex
// sequence. Supported for 3 <= n <= 8.
std::vector<HamiltonianCycle> enumerate_hamiltonian_cycles(int n);

// One triple per unordered pair {u,v} and apex w, ordered by (u, v, w).
std::vector<ShortcutTriple> enumerate_shortcut_triples(int n);

// Visits every connected Eulerian multigraph on [n] with all multiplicities
// <= max_mult and at most max_edges edges, each exactly once, in increasing
// lexicographic order of the multiplicity vector. Supported for 3 <= n <= 6
// and 1 <= max_mult <= 3.
void for_each_eulerian_connected(int n, int max_mult, int max_edges,
                                 const std::function<void(const Multigraph&)>& visit);

std::vector<Multigraph> enumerate_eulerian_connected(int n, int max_mult, int max_edges);

// A random connected Eulerian multigraph with n <= m <= target_edges, grown
// from a random tour by inverse-shortcut and edge-doubling moves.
// Deterministic in seed.
Multigraph sample_eulerian_connected(int n, int target_edges, std::uint64_t seed);

}  // namespace gtsp

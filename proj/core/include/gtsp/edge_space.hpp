#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gtsp/rational.hpp"

namespace gtsp {

// Vertices are 1-based throughout: [n] = {1, ..., n}.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Lexicographic rank of {min(u,v), max(u,v)} among the 2-subsets of [n].
// Throws std::invalid_argument for loops and std::out_of_range for vertices
// outside [n].
std::size_t edge_index(Vertex u, Vertex v, int n);

// The coordinate space R^{E_n}.
class EdgeSpace {
 public:
  // Throws std::invalid_argument for n < 3.
  explicit EdgeSpace(int n);

  int n() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(n_) * (n_ - 1) / 2; }

  std::size_t index(Vertex u, Vertex v) const { return edge_index(u, v, n_); }
  // Inverse of index(); the returned edge has u < v.
  Edge edge(std::size_t index) const;
  // All edges in canonical order.
  std::vector<Edge> edges() const;

  friend bool operator==(const EdgeSpace& a, const EdgeSpace& b) { return a.n_ == b.n_; }

 private:
  int n_;
};

// A dense exact vector indexed by E_n in canonical edge order.
class EdgeVector {
 public:
  explicit EdgeVector(const EdgeSpace& space);
  EdgeVector(const EdgeSpace& space, std::vector<Rational> coords);

  const EdgeSpace& space() const { return space_; }
  std::size_t size() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }

  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& at(Vertex u, Vertex v) const { return coords_[space_.index(u, v)]; }
  Rational& at(Vertex u, Vertex v) { return coords_[space_.index(u, v)]; }

  bool is_zero() const;

  EdgeVector& operator+=(const EdgeVector& rhs);
  EdgeVector& operator-=(const EdgeVector& rhs);
  EdgeVector& operator*=(const Rational& scale);

  friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
  friend EdgeVector operator-(EdgeVector a, const EdgeVector& b) { return a -= b; }
  friend EdgeVector operator*(const Rational& s, EdgeVector a) { return a *= s; }

  friend bool operator==(const EdgeVector& a, const EdgeVector& b) {
    return a.space_ == b.space_ && a.coords_ == b.coords_;
  }

 private:
  EdgeSpace space_;
  std::vector<Rational> coords_;
};

// chi^F for an edge multiset F: coordinate e counts the occurrences of e in F.
EdgeVector char_vector(std::span<const Edge> edges, const EdgeSpace& space);

// Exact inner product; throws std::invalid_argument on mismatched spaces.
Rational dot(const EdgeVector& a, const EdgeVector& x);

}  // namespace gtsp

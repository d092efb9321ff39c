#include "gtsp/edge_space.hpp"

#include <stdexcept>
#include <string>

namespace gtsp {

std::size_t edge_index(Vertex u, Vertex v, int n) {
  if (u < 1 || u > n || v < 1 || v > n) {
    throw std::out_of_range("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} has a vertex outside [" + std::to_string(n) + "]");
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u) + " is not an edge");
  if (u > v) std::swap(u, v);
  // Pairs (i, *) for i < u come first: (n-1) + (n-2) + ... + (n-u+1) of them.
  const auto a = static_cast<std::size_t>(u - 1);
  const auto nn = static_cast<std::size_t>(n);
  return a * nn - a * (a + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

EdgeSpace::EdgeSpace(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("vertex count must be at least 3, got " + std::to_string(n));
}

Edge EdgeSpace::edge(std::size_t index) const {
  if (index >= dim()) throw std::out_of_range("edge index " + std::to_string(index) + " out of range");
  Vertex u = 1;
  auto row = static_cast<std::size_t>(n_ - 1);
  while (index >= row) {
    index -= row;
    --row;
    ++u;
  }
  return {u, u + 1 + static_cast<Vertex>(index)};
}

std::vector<Edge> EdgeSpace::edges() const {
  std::vector<Edge> out;
  out.reserve(dim());
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v = u + 1; v <= n_; ++v) out.push_back({u, v});
  }
  return out;
}

EdgeVector::EdgeVector(const EdgeSpace& space) : space_(space), coords_(space.dim()) {}

EdgeVector::EdgeVector(const EdgeSpace& space, std::vector<Rational> coords)
    : space_(space), coords_(std::move(coords)) {
  if (coords_.size() != space_.dim()) {
    throw std::invalid_argument("edge vector has " + std::to_string(coords_.size()) +
                                " coordinates, expected " + std::to_string(space_.dim()));
  }
}

bool EdgeVector::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

EdgeVector& EdgeVector::operator+=(const EdgeVector& rhs) {
  if (!(space_ == rhs.space_)) throw std::invalid_argument("edge vectors live in different spaces");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

EdgeVector& EdgeVector::operator-=(const EdgeVector& rhs) {
  if (!(space_ == rhs.space_)) throw std::invalid_argument("edge vectors live in different spaces");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

EdgeVector& EdgeVector::operator*=(const Rational& scale) {
  for (auto& c : coords_) c *= scale;
  return *this;
}

EdgeVector char_vector(std::span<const Edge> edges, const EdgeSpace& space) {
  EdgeVector x(space);
  for (const Edge& e : edges) x[space.index(e.u, e.v)] += Rational(1);
  return x;
}

Rational dot(const EdgeVector& a, const EdgeVector& x) {
  if (!(a.space() == x.space())) throw std::invalid_argument("dot of vectors in different spaces");
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum.add_product(a[i], x[i]);
  return sum;
}

}  // namespace gtsp

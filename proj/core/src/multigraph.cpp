#include "gtsp/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "gtsp/errors.hpp"

namespace gtsp {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void check_vertex(const Multigraph& g, Vertex v) {
  if (v < 1 || v > g.n()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [" + std::to_string(g.n()) + "]");
  }
}

}  // namespace

Multigraph::Multigraph(const EdgeSpace& space) : space_(space), mult_(space.dim(), 0) {}

Multigraph::Multigraph(const EdgeSpace& space, std::vector<int> mult) : space_(space), mult_(std::move(mult)) {
  if (mult_.size() != space_.dim()) {
    throw std::invalid_argument("multiplicity vector has " + std::to_string(mult_.size()) +
                                " entries, expected " + std::to_string(space_.dim()));
  }
  for (int c : mult_) {
    if (c < 0) throw std::invalid_argument("negative edge multiplicity");
    m_ += c;
  }
}

Multigraph Multigraph::from_edges(const EdgeSpace& space, std::span<const Edge> edges) {
  Multigraph g(space);
  for (const Edge& e : edges) g.add(e.u, e.v, 1);
  return g;
}

Multigraph Multigraph::from_edge_vector(const EdgeVector& x) {
  std::vector<int> mult(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_integer() || x[i].sign() < 0 || !x[i].numerator().fits_sint_p()) {
      throw std::invalid_argument("coordinate " + std::to_string(i) + " (" + x[i].to_string() +
                                  ") is not a non-negative integer multiplicity");
    }
    mult[i] = static_cast<int>(x[i].numerator().get_si());
  }
  return Multigraph(x.space(), std::move(mult));
}

void Multigraph::add(Vertex u, Vertex v, int delta) {
  int& c = mult_[space_.index(u, v)];
  if (c + delta < 0) {
    throw std::invalid_argument("multiplicity of {" + std::to_string(u) + "," + std::to_string(v) +
                                "} would become negative");
  }
  c += delta;
  m_ += delta;
}

EdgeVector Multigraph::to_edge_vector() const {
  std::vector<Rational> coords(mult_.begin(), mult_.end());
  return EdgeVector(space_, std::move(coords));
}

HamiltonianCycle::HamiltonianCycle(std::vector<Vertex> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n < 3) throw std::invalid_argument("a Hamiltonian cycle needs at least 3 vertices");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : order_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("cycle order is not a permutation of [n]");
    seen[v] = true;
  }
  std::rotate(order_.begin(), std::find(order_.begin(), order_.end(), 1), order_.end());
  if (order_[1] > order_.back()) std::reverse(order_.begin() + 1, order_.end());
}

std::vector<Edge> HamiltonianCycle::edges() const {
  std::vector<Edge> out;
  out.reserve(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    Vertex a = order_[i];
    Vertex b = order_[(i + 1) % order_.size()];
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  return out;
}

ShortcutTriple::ShortcutTriple(Vertex u, Vertex w, Vertex v) : u_(std::min(u, v)), w_(w), v_(std::max(u, v)) {
  if (u < 1 || v < 1 || w < 1 || u == v || u == w || v == w) {
    throw std::invalid_argument("shortcut triple (" + std::to_string(u) + "," + std::to_string(w) + "," +
                                std::to_string(v) + ") needs pairwise distinct vertices");
  }
}

int degree(const Multigraph& g, Vertex v) {
  check_vertex(g, v);
  int d = 0;
  for (Vertex u = 1; u <= g.n(); ++u) {
    if (u != v) d += g.mult(u, v);
  }
  return d;
}

bool is_connected_spanning(const Multigraph& g) {
  const EdgeSpace& space = g.space();
  UnionFind uf(g.n() + 1);
  int components = g.n();
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (g.mult(i) == 0) continue;
    const Edge e = space.edge(i);
    if (uf.unite(e.u, e.v)) --components;
  }
  return components == 1;
}

bool is_eulerian_connected(const Multigraph& g) {
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (degree(g, v) % 2 != 0) return false;
  }
  return is_connected_spanning(g);
}

std::vector<std::vector<Vertex>> remove_vertex_components(const Multigraph& g, Vertex w) {
  check_vertex(g, w);
  const int n = g.n();
  std::vector<int> label(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::vector<Vertex>> components;
  for (Vertex start = 1; start <= n; ++start) {
    if (start == w || label[start] >= 0) continue;
    const int id = static_cast<int>(components.size());
    components.emplace_back();
    std::vector<Vertex> stack{start};
    label[start] = id;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      components[id].push_back(x);
      for (Vertex y = 1; y <= n; ++y) {
        if (y == x || y == w || label[y] >= 0 || g.mult(x, y) == 0) continue;
        label[y] = id;
        stack.push_back(y);
      }
    }
    std::sort(components[id].begin(), components[id].end());
  }
  return components;
}

Multigraph cycle_vector(const HamiltonianCycle& cycle) {
  const auto edges = cycle.edges();
  return Multigraph::from_edges(EdgeSpace(cycle.n()), edges);
}

EdgeVector shortcut_vector(const ShortcutTriple& t, const EdgeSpace& space) {
  EdgeVector s(space);
  s.at(t.u(), t.w()) += Rational(1);
  s.at(t.w(), t.v()) += Rational(1);
  s.at(t.u(), t.v()) -= Rational(1);
  return s;
}

std::vector<HamiltonianCycle> enumerate_hamiltonian_cycles(int n) {
  if (n < 3 || n > 8) throw ScopeError("tour enumeration supports 3 <= n <= 8, got " + std::to_string(n));
  std::vector<Vertex> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<HamiltonianCycle> out;
  do {
    if (rest.front() < rest.back()) {
      std::vector<Vertex> order{1};
      order.insert(order.end(), rest.begin(), rest.end());
      out.emplace_back(std::move(order));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::vector<ShortcutTriple> enumerate_shortcut_triples(int n) {
  if (n < 3) throw ScopeError("shortcut triples need n >= 3, got " + std::to_string(n));
  std::vector<ShortcutTriple> out;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      for (Vertex w = 1; w <= n; ++w) {
        if (w != u && w != v) out.emplace_back(u, w, v);
      }
    }
  }
  return out;
}

void for_each_eulerian_connected(int n, int max_mult, int max_edges,
                                 const std::function<void(const Multigraph&)>& visit) {
  if (n < 3 || n > 6) throw ScopeError("Eulerian enumeration supports 3 <= n <= 6, got " + std::to_string(n));
  if (max_mult < 1 || max_mult > 3) throw ScopeError("Eulerian enumeration supports max_mult in [1,3]");
  if (max_edges < 0) throw ScopeError("max_edges must be non-negative");

  const EdgeSpace space(n);
  const std::vector<Edge> edges = space.edges();
  const std::size_t dim = space.dim();
  std::vector<int> mult(dim, 0);
  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);

  // Edge (u, n) is the last edge touching u when u < n, so u's degree is
  // final once that coordinate has been fixed.
  std::vector<Vertex> closes(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (edges[i].v == n) closes[i] = edges[i].u;
  }

  auto recurse = [&](auto&& self, std::size_t i, int used) -> void {
    if (i == dim) {
      if (deg[n] % 2 != 0 || deg[n] == 0) return;
      Multigraph g(space, mult);
      if (is_connected_spanning(g)) visit(g);
      return;
    }
    const Edge e = edges[i];
    for (int c = 0; c <= max_mult && used + c <= max_edges; ++c) {
      mult[i] = c;
      deg[e.u] += c;
      deg[e.v] += c;
      const Vertex done = closes[i];
      if (done == 0 || (deg[done] % 2 == 0 && deg[done] > 0)) self(self, i + 1, used + c);
      deg[e.u] -= c;
      deg[e.v] -= c;
    }
    mult[i] = 0;
  };
  recurse(recurse, 0, 0);
}

std::vector<Multigraph> enumerate_eulerian_connected(int n, int max_mult, int max_edges) {
  std::vector<Multigraph> out;
  for_each_eulerian_connected(n, max_mult, max_edges, [&](const Multigraph& g) { out.push_back(g); });
  return out;
}

Multigraph sample_eulerian_connected(int n, int target_edges, std::uint64_t seed) {
  if (n < 3) throw ScopeError("sampling needs n >= 3");
  if (target_edges < n) throw ScopeError("target_edges must be at least n");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  Multigraph g = cycle_vector(HamiltonianCycle(order));
  const EdgeSpace& space = g.space();

  const int target = uniform(n, target_edges);
  while (g.edge_count() < target) {
    if (target - g.edge_count() >= 2 && uniform(0, 1) == 0) {
      const Edge e = space.edge(static_cast<std::size_t>(uniform(0, static_cast<int>(space.dim()) - 1)));
      g.add(e.u, e.v, 2);
      continue;
    }
    // Replace an existing edge uv by the path u-w-v.
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < space.dim(); ++i) {
      if (g.mult(i) > 0) support.push_back(i);
    }
    const Edge e = space.edge(support[static_cast<std::size_t>(uniform(0, static_cast<int>(support.size()) - 1))]);
    Vertex w = uniform(1, n - 2);
    if (w >= std::min(e.u, e.v)) ++w;
    if (w >= std::max(e.u, e.v)) ++w;
    g.add(e.u, e.v, -1);
    g.add(e.u, w, 1);
    g.add(w, e.v, 1);
  }
  return g;
}

}  // namespace gtsp

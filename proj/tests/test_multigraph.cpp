#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gtsp/errors.hpp"
#include "gtsp/multigraph.hpp"
#include "support/test_support.hpp"

namespace gtsp {
namespace {

Multigraph graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Multigraph g{EdgeSpace(n)};
  for (const auto& [u, v] : edges) g.add(u, v, 1);
  return g;
}

Multigraph bowtie() { return graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}}); }

Multigraph triangle_plus_double_14() { return graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 4}}); }

TEST(Degree, Examples) {
  const Multigraph tri = graph(3, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(degree(tri, 1), 2);
  const Multigraph dbl = graph(3, {{1, 2}, {1, 2}});
  EXPECT_EQ(degree(dbl, 1), 2);
  EXPECT_EQ(degree(dbl, 3), 0);
  for (const auto& c : enumerate_hamiltonian_cycles(6)) {
    const Multigraph g = cycle_vector(c);
    for (Vertex v = 1; v <= 6; ++v) EXPECT_EQ(degree(g, v), 2);
  }
  EXPECT_THROW(degree(tri, 4), std::out_of_range);
  EXPECT_THROW(degree(tri, 0), std::out_of_range);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected_spanning(cycle_vector(HamiltonianCycle({1, 2, 3, 4, 5}))));
  EXPECT_FALSE(is_connected_spanning(graph(3, {{1, 2}, {1, 2}})));
  EXPECT_FALSE(is_connected_spanning(graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})));
}

TEST(Eulerian, Examples) {
  EXPECT_TRUE(is_eulerian_connected(cycle_vector(HamiltonianCycle({1, 2, 3, 4}))));
  EXPECT_FALSE(is_eulerian_connected(graph(3, {{1, 2}, {2, 3}})));
  const Multigraph g = triangle_plus_double_14();
  EXPECT_EQ(degree(g, 1), 4);
  EXPECT_TRUE(is_eulerian_connected(g));
}

TEST(Connectivity, AgreesWithBreadthFirstSearch) {
  testing::Rng rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = rng.uniform(3, 8);
    const Multigraph g = testing::random_multigraph(n, rng, trial % 3 == 0 ? 1 : 2);
    ASSERT_EQ(is_connected_spanning(g), testing::bfs_connected(g)) << "trial " << trial;
    ASSERT_EQ(is_eulerian_connected(g), testing::oracle_eulerian_connected(g)) << "trial " << trial;
    // Search-based view: G is connected iff every component of G \ 1
    // contains a neighbour of vertex 1.
    bool via_search = true;
    for (const auto& part : remove_vertex_components(g, 1)) {
      via_search = via_search && std::any_of(part.begin(), part.end(), [&](Vertex v) { return g.mult(1, v) > 0; });
    }
    ASSERT_EQ(is_connected_spanning(g), via_search) << "trial " << trial;
    int sum = 0;
    for (Vertex v = 1; v <= n; ++v) sum += degree(g, v);
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(RemoveVertex, Examples) {
  using Parts = std::vector<std::vector<Vertex>>;
  EXPECT_EQ(remove_vertex_components(bowtie(), 3), (Parts{{1, 2}, {4, 5}}));
  EXPECT_EQ(remove_vertex_components(cycle_vector(HamiltonianCycle({1, 2, 3, 4, 5})), 1), (Parts{{2, 3, 4, 5}}));
  EXPECT_EQ(remove_vertex_components(graph(4, {{1, 2}, {1, 2}}), 1), (Parts{{2}, {3}, {4}}));
  EXPECT_THROW(remove_vertex_components(bowtie(), 6), std::out_of_range);
}

TEST(HamiltonianCycle, Normalization) {
  EXPECT_EQ(HamiltonianCycle({3, 2, 1, 4}).order(), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(HamiltonianCycle({2, 1, 4, 3}).order(), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(HamiltonianCycle({1, 4, 3, 2}), HamiltonianCycle({1, 2, 3, 4}));
  EXPECT_THROW(HamiltonianCycle({1, 2, 2}), std::invalid_argument);
  EXPECT_THROW(HamiltonianCycle({1, 2}), std::invalid_argument);
  EXPECT_THROW(HamiltonianCycle({1, 2, 4}), std::invalid_argument);
}

TEST(CycleVector, Examples) {
  EXPECT_EQ(cycle_vector(HamiltonianCycle({1, 2, 3})).multiplicities(), (std::vector<int>{1, 1, 1}));
  // (12),(13),(14),(23),(24),(34)
  EXPECT_EQ(cycle_vector(HamiltonianCycle({1, 2, 3, 4})).multiplicities(), (std::vector<int>{1, 0, 1, 1, 0, 1}));
  EXPECT_EQ(cycle_vector(HamiltonianCycle({1, 3, 2, 4})).multiplicities(), (std::vector<int>{0, 1, 1, 1, 1, 0}));
}

TEST(CycleVector, EveryTourIsTwoRegularAndEulerian) {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& c : enumerate_hamiltonian_cycles(n)) {
      const Multigraph g = cycle_vector(c);
      EXPECT_EQ(g.edge_count(), n);
      EXPECT_TRUE(is_eulerian_connected(g));
      for (Vertex v = 1; v <= n; ++v) EXPECT_EQ(degree(g, v), 2);
    }
  }
}

TEST(ShortcutVector, Examples) {
  const EdgeSpace s3(3);
  EXPECT_EQ(shortcut_vector(ShortcutTriple(1, 2, 3), s3), EdgeVector(s3, {1, -1, 1}));
  EXPECT_EQ(shortcut_vector(ShortcutTriple(3, 2, 1), s3), shortcut_vector(ShortcutTriple(1, 2, 3), s3));
  const EdgeSpace s4(4);
  EdgeVector expected(s4);
  expected.at(1, 4) = 1;
  expected.at(2, 4) = 1;
  expected.at(1, 2) = -1;
  EXPECT_EQ(shortcut_vector(ShortcutTriple(1, 4, 2), s4), expected);
  EXPECT_THROW(ShortcutTriple(1, 1, 2), std::invalid_argument);
  EXPECT_THROW(ShortcutTriple(1, 2, 1), std::invalid_argument);
}

TEST(ShortcutVector, TwoPlusOnesAndOneMinusOne) {
  for (int n = 3; n <= 7; ++n) {
    const EdgeSpace s(n);
    for (const auto& t : enumerate_shortcut_triples(n)) {
      const EdgeVector v = shortcut_vector(t, s);
      int plus = 0;
      int minus = 0;
      Rational sum;
      for (const auto& c : v.coords()) {
        sum += c;
        plus += c == Rational(1) ? 1 : 0;
        minus += c == Rational(-1) ? 1 : 0;
      }
      EXPECT_EQ(sum, Rational(1));
      EXPECT_EQ(plus, 2);
      EXPECT_EQ(minus, 1);
    }
  }
}

TEST(Enumerate, HamiltonianCycleCounts) {
  const std::size_t expected[] = {0, 0, 0, 1, 3, 12, 60, 360, 2520};
  for (int n = 3; n <= 8; ++n) {
    const auto cycles = enumerate_hamiltonian_cycles(n);
    EXPECT_EQ(cycles.size(), expected[n]);
    const std::set<HamiltonianCycle> distinct(cycles.begin(), cycles.end());
    EXPECT_EQ(distinct.size(), cycles.size());
    for (const auto& c : cycles) EXPECT_EQ(HamiltonianCycle(c.order()), c);
  }
  EXPECT_THROW(enumerate_hamiltonian_cycles(9), ScopeError);
  EXPECT_THROW(enumerate_hamiltonian_cycles(2), ScopeError);
}

TEST(Enumerate, ShortcutTripleCounts) {
  for (int n = 3; n <= 9; ++n) {
    const auto triples = enumerate_shortcut_triples(n);
    EXPECT_EQ(triples.size(), static_cast<std::size_t>(n * (n - 1) * (n - 2) / 2));
    std::set<std::vector<int>> vectors;
    for (const auto& t : triples) {
      EXPECT_LT(t.u(), t.v());
      const EdgeVector v = shortcut_vector(t, EdgeSpace(n));
      std::vector<int> key;
      for (const auto& c : v.coords()) key.push_back(static_cast<int>(c.numerator().get_si()));
      vectors.insert(key);
    }
    EXPECT_EQ(vectors.size(), triples.size());
  }
}

// Every multiplicity vector in [0, max_mult]^6 with at most max_edges edges,
// filtered by the oracle predicate.
std::set<std::vector<int>> brute_force_n4(int max_mult, int max_edges) {
  std::set<std::vector<int>> out;
  std::vector<int> mult(6, 0);
  for (;;) {
    int m = 0;
    for (int x : mult) m += x;
    if (m <= max_edges && testing::oracle_eulerian_connected(Multigraph(EdgeSpace(4), mult))) out.insert(mult);
    std::size_t i = 0;
    while (i < 6 && mult[i] == max_mult) mult[i++] = 0;
    if (i == 6) break;
    ++mult[i];
  }
  return out;
}

std::set<std::vector<int>> library_set(int n, int max_mult, int max_edges) {
  std::set<std::vector<int>> out;
  std::size_t count = 0;
  for (const auto& g : enumerate_eulerian_connected(n, max_mult, max_edges)) {
    ++count;
    out.insert(g.multiplicities());
  }
  EXPECT_EQ(out.size(), count) << "duplicates in the enumeration";
  return out;
}

TEST(Enumerate, EulerianTriangleOnly) {
  const auto all = enumerate_eulerian_connected(3, 1, 3);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].multiplicities(), (std::vector<int>{1, 1, 1}));
}

TEST(Enumerate, EulerianSimpleGraphsOnFourVertices) {
  const auto expected = brute_force_n4(1, 6);
  EXPECT_EQ(library_set(4, 1, 6), expected);
  for (const auto& c : enumerate_hamiltonian_cycles(4)) EXPECT_TRUE(expected.count(cycle_vector(c).multiplicities()));
  EXPECT_FALSE(expected.count({1, 1, 1, 1, 1, 1}));
}

TEST(Enumerate, EulerianMultigraphsOnFourVertices) {
  const auto expected = brute_force_n4(2, 8);
  EXPECT_EQ(library_set(4, 2, 8), expected);
  EXPECT_TRUE(expected.count(triangle_plus_double_14().multiplicities()));
  EXPECT_EQ(library_set(4, 3, 18), brute_force_n4(3, 18));
}

TEST(Enumerate, DegreeSumsAreEven) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : enumerate_eulerian_connected(n, 2, 10)) {
      int sum = 0;
      for (Vertex v = 1; v <= n; ++v) {
        EXPECT_EQ(degree(g, v) % 2, 0);
        sum += degree(g, v);
      }
      EXPECT_EQ(sum, 2 * g.edge_count());
    }
  }
  EXPECT_THROW(enumerate_eulerian_connected(7, 1, 7), ScopeError);
  EXPECT_THROW(enumerate_eulerian_connected(4, 4, 8), ScopeError);
}

TEST(Sample, Examples) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Multigraph g = sample_eulerian_connected(5, 5, seed);
    EXPECT_EQ(g.edge_count(), 5);
    for (Vertex v = 1; v <= 5; ++v) EXPECT_EQ(degree(g, v), 2);
  }
  const Multigraph g = sample_eulerian_connected(4, 10, 7);
  EXPECT_TRUE(is_eulerian_connected(g));
  EXPECT_EQ(sample_eulerian_connected(4, 10, 7), g);
}

TEST(Sample, AlwaysEulerianWithinBounds) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const int target = n + static_cast<int>(seed % 13);
    const Multigraph g = sample_eulerian_connected(n, target, seed);
    ASSERT_TRUE(testing::oracle_eulerian_connected(g)) << "seed " << seed;
    ASSERT_GE(g.edge_count(), n);
    ASSERT_LE(g.edge_count(), target);
  }
}

}  // namespace
}  // namespace gtsp

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gtsp/edge_space.hpp"
#include "gtsp/lp.hpp"
#include "gtsp/multigraph.hpp"

// Seeded generators and brute-force oracles shared by the unit tests. The
// oracles deliberately avoid the library's own algorithms.
namespace gtsp::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  // p/q with p in [lo, hi] and q in [1, max_den].
  Rational rational(int lo, int hi, int max_den) {
    return Rational(mpz_class(uniform(lo, hi)), mpz_class(uniform(1, max_den)));
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

EdgeVector random_edge_vector(int n, Rng& rng, int lo = -5, int hi = 5, int max_den = 4);

// Multiplicities uniform in [0, max_mult].
Multigraph random_multigraph(int n, Rng& rng, int max_mult);

// Breadth-first search over an adjacency matrix; isolated vertices count as
// separate components.
bool bfs_connected(const Multigraph& g);
// Connected on [n] with every degree even, from the raw multiplicities.
bool oracle_eulerian_connected(const Multigraph& g);

using Matrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan on a square system; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(Matrix m, std::vector<Rational> rhs);

// All basic feasible solutions of { A x = b, x >= 0 }, by trying every
// nonsingular square submatrix. Only for tiny systems.
std::vector<std::vector<Rational>> basic_feasible_solutions(const Matrix& a, const std::vector<Rational>& b);

// Dense rows x cols data as an lp::LinearSystem with non-negative columns.
lp::LinearSystem to_system(const Matrix& a, const std::vector<Rational>& b,
                           const std::optional<std::vector<Rational>>& cost = std::nullopt);

}  // namespace gtsp::testing

#include <gtest/gtest.h>

#include "gtsp/lp.hpp"
#include "gtsp/membership.hpp"
#include "support/test_support.hpp"

namespace gtsp {
namespace {

using lp::ColumnSign;
using lp::LinearSystem;
using lp::Status;
using testing::Matrix;

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

LinearSystem one_variable(const Rational& coefficient, const Rational& rhs) {
  LinearSystem sys;
  sys.rows = 1;
  sys.rhs = {rhs};
  lp::SparseColumn col;
  if (!coefficient.is_zero()) col.push_back({0, coefficient});
  sys.add_column(col);
  return sys;
}

TEST(SolveFeasibility, SingleEquation) {
  const LinearSystem sys = one_variable(q(1), q(1));
  const auto out = lp::solve_feasibility(sys);
  ASSERT_EQ(out.status, Status::Feasible);
  EXPECT_EQ(out.primal, (std::vector<Rational>{q(1)}));
  EXPECT_TRUE(lp::verify_certificate_lp(sys, out));
}

TEST(SolveFeasibility, ZeroRowIsInfeasible) {
  const LinearSystem sys = one_variable(q(0), q(1));
  const auto out = lp::solve_feasibility(sys);
  ASSERT_EQ(out.status, Status::Infeasible);
  ASSERT_EQ(out.dual.size(), 1u);
  EXPECT_LT(out.dual[0] * q(1), q(0));
  EXPECT_TRUE(lp::verify_certificate_lp(sys, out));
  // The opposite sign is not a certificate under the y.b < 0 convention.
  auto flipped = out;
  flipped.dual[0] = -flipped.dual[0];
  EXPECT_FALSE(lp::verify_certificate_lp(sys, flipped));
}

TEST(SolveFeasibility, RejectsMalformedSystems) {
  LinearSystem sys = one_variable(q(1), q(1));
  sys.rhs.push_back(q(0));
  EXPECT_THROW(lp::solve_feasibility(sys), std::invalid_argument);
  LinearSystem bad_row = one_variable(q(1), q(1));
  bad_row.columns[0].push_back({3, q(1)});
  EXPECT_THROW(lp::solve_feasibility(bad_row), std::invalid_argument);
  EXPECT_THROW(lp::solve_min(one_variable(q(1), q(1))), std::invalid_argument);
}

TEST(SolveFeasibility, DoubleEdgeTwelvePlusEdgeTwentyThree) {
  // x = (2,0,1) on [3] as tour + sum mu_t s_t: fixing lambda = 1 leaves a
  // square system in the three shortcut weights, solved here by elimination.
  const EdgeSpace s(3);
  const EdgeVector x(s, {2, 0, 1});
  const auto triples = enumerate_shortcut_triples(3);
  Matrix m(3, std::vector<Rational>(3));
  std::vector<Rational> rhs(3);
  for (std::size_t j = 0; j < 3; ++j) {
    const EdgeVector sv = shortcut_vector(triples[j], s);
    for (std::size_t e = 0; e < 3; ++e) m[e][j] = sv[e];
  }
  for (std::size_t e = 0; e < 3; ++e) rhs[e] = x[e] - Rational(1);
  const auto mu = testing::solve_square(m, rhs);
  ASSERT_TRUE(mu.has_value());
  bool brute_inside = true;
  for (const auto& v : *mu) brute_inside = brute_inside && v.sign() >= 0;
  EXPECT_FALSE(brute_inside);

  const LinearSystem sys = membership_system(SetKind::Minkowski, x);
  const auto out = lp::solve_feasibility(sys);
  EXPECT_EQ(out.status == Status::Feasible, brute_inside);
  EXPECT_TRUE(lp::verify_certificate_lp(sys, out));
}

TEST(SolveMin, NonNegativeVariable) {
  LinearSystem sys;
  sys.rows = 0;
  sys.objective = std::vector<Rational>{};
  sys.add_column({}, ColumnSign::NonNegative, q(1));
  auto out = lp::solve_min(sys);
  ASSERT_EQ(out.status, Status::Optimal);
  EXPECT_EQ(out.primal, (std::vector<Rational>{q(0)}));
  EXPECT_TRUE(lp::verify_certificate_lp(sys, out));

  (*sys.objective)[0] = q(-1);
  out = lp::solve_min(sys);
  ASSERT_EQ(out.status, Status::Unbounded);
  EXPECT_EQ(out.ray, (std::vector<Rational>{q(1)}));
  EXPECT_TRUE(lp::verify_certificate_lp(sys, out));
}

TEST(SolveMin, FreeColumns) {
  // min x - 2y  s.t.  x - y = 1, x free, y >= 0, y <= 3 via slack.
  LinearSystem sys;
  sys.rows = 2;
  sys.rhs = {q(1), q(3)};
  sys.objective = std::vector<Rational>{};
  sys.add_column({{0, q(1)}}, ColumnSign::Free, q(1));
  sys.add_column({{0, q(-1)}, {1, q(1)}}, ColumnSign::NonNegative, q(-2));
  sys.add_column({{1, q(1)}}, ColumnSign::NonNegative, q(0));
  const auto out = lp::solve_min(sys);
  ASSERT_EQ(out.status, Status::Optimal);
  EXPECT_EQ(out.primal, (std::vector<Rational>{q(4), q(3), q(0)}));
  EXPECT_TRUE(lp::verify_certificate_lp(sys, out));

  // With a free column and no bound the problem is unbounded.
  LinearSystem open = sys;
  open.columns[1] = {{0, q(-1)}};
  open.rhs = {q(1), q(0)};
  open.columns[2] = {{1, q(1)}};
  const auto unb = lp::solve_min(open);
  ASSERT_EQ(unb.status, Status::Unbounded);
  EXPECT_TRUE(lp::verify_certificate_lp(open, unb));
}

TEST(SolveMin, InfeasibleIsAStatus) {
  LinearSystem sys = one_variable(q(1), q(-1));
  sys.objective = std::vector<Rational>{q(1)};
  const auto out = lp::solve_min(sys);
  EXPECT_EQ(out.status, Status::Infeasible);
  EXPECT_TRUE(lp::verify_certificate_lp(sys, out));
}

TEST(VerifyCertificateLp, DetectsTampering) {
  const LinearSystem sys = one_variable(q(2), q(3));
  auto out = lp::solve_feasibility(sys);
  ASSERT_EQ(out.status, Status::Feasible);
  EXPECT_TRUE(lp::verify_certificate_lp(sys, out));
  out.primal[0] = -out.primal[0];
  EXPECT_FALSE(lp::verify_certificate_lp(sys, out));
  out.primal[0] = q(3, 2) + q(1, 1000);
  EXPECT_FALSE(lp::verify_certificate_lp(sys, out));

  lp::LPOutcome claim;
  claim.status = Status::Infeasible;
  claim.dual = {q(0)};
  EXPECT_FALSE(lp::verify_certificate_lp(sys, claim));
}

// Compares solve_feasibility / solve_min with basic-solution enumeration on
// random systems with at most 3 rows and 3 columns.
TEST(SolveMin, AgreesWithVertexEnumeration) {
  testing::Rng rng(7);
  std::size_t feasible = 0;
  std::size_t infeasible = 0;
  std::size_t unbounded = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 3));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 3));
    Matrix a(rows, std::vector<Rational>(cols));
    std::vector<Rational> b(rows);
    std::vector<Rational> c(cols);
    for (auto& row : a) {
      for (auto& v : row) v = rng.uniform(0, 2) == 0 ? q(0) : rng.rational(-4, 4, 3);
    }
    for (auto& v : b) v = rng.rational(-4, 4, 2);
    for (auto& v : c) v = rng.rational(-3, 3, 2);

    const auto vertices = testing::basic_feasible_solutions(a, b);
    const LinearSystem feas = testing::to_system(a, b);
    const auto f = lp::solve_feasibility(feas);
    ASSERT_TRUE(lp::verify_certificate_lp(feas, f)) << "trial " << trial;
    ASSERT_EQ(f.status == Status::Feasible, !vertices.empty()) << "trial " << trial;

    const LinearSystem opt = testing::to_system(a, b, c);
    const auto o = lp::solve_min(opt);
    ASSERT_TRUE(lp::verify_certificate_lp(opt, o)) << "trial " << trial;
    if (vertices.empty()) {
      ASSERT_EQ(o.status, Status::Infeasible);
      ++infeasible;
      continue;
    }
    // Unbounded iff the normalized recession polytope {A r = 0, 1.r = 1, r >= 0}
    // has a vertex with c.r < 0.
    Matrix ar = a;
    std::vector<Rational> br(rows);
    ar.push_back(std::vector<Rational>(cols, q(1)));
    br.push_back(q(1));
    bool has_ray = false;
    for (const auto& r : testing::basic_feasible_solutions(ar, br)) {
      Rational cr;
      for (std::size_t j = 0; j < cols; ++j) cr += c[j] * r[j];
      has_ray = has_ray || cr.sign() < 0;
    }
    if (has_ray) {
      ASSERT_EQ(o.status, Status::Unbounded) << "trial " << trial;
      ++unbounded;
      continue;
    }
    ASSERT_EQ(o.status, Status::Optimal) << "trial " << trial;
    Rational best;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      Rational value;
      for (std::size_t j = 0; j < cols; ++j) value += c[j] * vertices[i][j];
      if (i == 0 || value < best) best = value;
    }
    Rational value;
    for (std::size_t j = 0; j < cols; ++j) value += c[j] * o.primal[j];
    ASSERT_EQ(value, best) << "trial " << trial;
    ++feasible;
  }
  EXPECT_GT(feasible, 100u);
  EXPECT_GT(infeasible, 100u);
  EXPECT_GT(unbounded, 100u);
}

TEST(SolveMin, DegenerateSystemsTerminate) {
  // Many identical and dependent rows with a zero right-hand side.
  testing::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 6;
    const std::size_t cols = 9;
    Matrix a(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < 3; ++r) {
      for (auto& v : a[r]) v = q(rng.uniform(-2, 2));
    }
    for (std::size_t r = 3; r < rows; ++r) {
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = a[r - 3][j] * q(r);
    }
    std::vector<Rational> b(rows);
    std::vector<Rational> c(cols);
    for (auto& v : c) v = q(rng.uniform(-3, 3));
    const LinearSystem sys = testing::to_system(a, b, c);
    const auto out = lp::solve_min(sys);
    ASSERT_NE(out.status, Status::Infeasible);
    ASSERT_TRUE(lp::verify_certificate_lp(sys, out)) << lp::check_outcome(sys, out).diagnostic;
  }
}

TEST(SolveMin, DecompositionProgramMatchesBruteForce) {
  // min a.x over x = sum lambda_i tour_i + sum mu_t s_t, sum lambda = 1, with
  // x free: for a metric a this is the tour minimum, and also the minimum
  // over every enumerated connected Eulerian multigraph.
  const int n = 4;
  const EdgeSpace s(n);
  const std::size_t dim = s.dim();
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const EdgeVector a = random_metric(n, seed);
    LinearSystem sys;
    sys.rows = dim + 1;
    sys.rhs.assign(dim + 1, q(0));
    sys.rhs[dim] = q(1);
    sys.objective = std::vector<Rational>{};
    for (std::size_t e = 0; e < dim; ++e) sys.add_column({{e, q(1)}}, ColumnSign::Free, a[e]);
    for (const auto& c : enumerate_hamiltonian_cycles(n)) {
      lp::SparseColumn col;
      const EdgeVector v = cycle_vector(c).to_edge_vector();
      for (std::size_t e = 0; e < dim; ++e) {
        if (!v[e].is_zero()) col.push_back({e, -v[e]});
      }
      col.push_back({dim, q(1)});
      sys.add_column(col);
    }
    for (const auto& t : enumerate_shortcut_triples(n)) {
      lp::SparseColumn col;
      const EdgeVector v = shortcut_vector(t, s);
      for (std::size_t e = 0; e < dim; ++e) {
        if (!v[e].is_zero()) col.push_back({e, -v[e]});
      }
      sys.add_column(col);
    }
    const auto out = lp::solve_min(sys);
    ASSERT_EQ(out.status, Status::Optimal);
    ASSERT_TRUE(lp::verify_certificate_lp(sys, out));
    Rational value;
    for (std::size_t e = 0; e < dim; ++e) value += a[e] * out.primal[e];

    Rational brute;
    bool first = true;
    for (const auto& g : enumerate_eulerian_connected(n, 2, 8)) {
      const Rational v = dot(a, g.to_edge_vector());
      if (first || v < brute) brute = v;
      first = false;
    }
    EXPECT_EQ(value, brute) << "seed " << seed;
  }
}

}  // namespace
}  // namespace gtsp

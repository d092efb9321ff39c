#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gtsp/check.hpp"
#include "gtsp/rational.hpp"

// Exact rational linear programming over { A x = b, x_j >= 0 or free }.
//
// Two-phase revised simplex with an explicit basis inverse. Pricing takes the
// most negative reduced cost and drops to Bland's smallest-index rule during
// long degenerate stretches, so every solve terminates. Every outcome carries a certificate that
// verify_certificate_lp re-checks from the system alone:
//   Feasible   - primal x with A x = b and sign constraints.
//   Optimal    - primal x plus duals y with c_j - y.A_j >= 0 (= 0 for free
//                columns) and c.x = y.b.
//   Infeasible - Farkas vector y with y.A_j >= 0 (= 0 for free columns) and
//                y.b < 0.
//   Unbounded  - feasible primal x plus ray r with A r = 0, sign-compatible,
//                and c.r < 0.
namespace gtsp::lp {

enum class ColumnSign { NonNegative, Free };

struct Entry {
  std::size_t row;
  Rational value;
};

using SparseColumn = std::vector<Entry>;

struct LinearSystem {
  std::size_t rows = 0;
  std::vector<SparseColumn> columns;
  std::vector<ColumnSign> col_bounds;
  std::vector<Rational> rhs;
  std::optional<std::vector<Rational>> objective;

  std::size_t cols() const { return columns.size(); }

  // Appends a column and returns its index. The cost is recorded only when
  // the system carries an objective.
  std::size_t add_column(SparseColumn column, ColumnSign sign = ColumnSign::NonNegative,
                         const Rational& cost = Rational(0));
};

enum class Status { Feasible, Optimal, Infeasible, Unbounded };

const char* to_string(Status status);

struct LPOutcome {
  Status status = Status::Infeasible;
  std::vector<Rational> primal;  // per column; Feasible, Optimal, Unbounded
  std::vector<Rational> dual;    // per row; Optimal duals or Farkas vector
  std::vector<Rational> ray;     // per column; Unbounded
};

// Throws std::invalid_argument on dimension mismatches.
void validate(const LinearSystem& sys);

// Phase 1 only; the objective, if any, is ignored.
LPOutcome solve_feasibility(const LinearSystem& sys);

// Requires an objective. Infeasibility is reported as a status.
LPOutcome solve_min(const LinearSystem& sys);

CertificateCheck check_outcome(const LinearSystem& sys, const LPOutcome& out);

inline bool verify_certificate_lp(const LinearSystem& sys, const LPOutcome& out) {
  return check_outcome(sys, out).ok;
}

}  // namespace gtsp::lp

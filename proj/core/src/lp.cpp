#include "gtsp/lp.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace gtsp::lp {

namespace {

// Revised simplex over the standard form  D A z + I a = D b,  z, a >= 0,
// where D flips rows so that D b >= 0, each free column is split into a
// positive and a negative part, and a are the artificial variables.
class Simplex {
 public:
  explicit Simplex(const LinearSystem& sys) : sys_(sys), rows_(sys.rows) {
    for (std::size_t j = 0; j < sys.cols(); ++j) {
      var_col_.push_back(j);
      var_sign_.push_back(1);
      if (sys.col_bounds[j] == ColumnSign::Free) {
        var_col_.push_back(j);
        var_sign_.push_back(-1);
      }
    }
    structural_ = var_col_.size();
    total_ = structural_ + rows_;

    flip_.assign(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sys.rhs[r].sign() < 0) flip_[r] = -1;
    }
    // Integer copies of the columns for the fast pricing path; columns with
    // fractional or large entries disable it.
    int_cols_.resize(structural_);
    for (std::size_t k = 0; k < structural_ && int_pricing_; ++k) {
      for (const Entry& e : sys.columns[var_col_[k]]) {
        const auto v = small_integer(e.value, kEntryBound);
        if (!v) {
          int_pricing_ = false;
          break;
        }
        const bool negate = (flip_[e.row] < 0) != (var_sign_[k] < 0);
        int_cols_[k].emplace_back(e.row, negate ? -*v : *v);
      }
    }
    xb_.resize(rows_);
    binv_.assign(rows_, std::vector<Rational>(rows_));
    basis_.resize(rows_);
    is_basic_.assign(total_, false);
    for (std::size_t r = 0; r < rows_; ++r) {
      xb_[r] = flip_[r] < 0 ? -sys.rhs[r] : sys.rhs[r];
      binv_[r][r] = Rational(1);
      basis_[r] = structural_ + r;
      is_basic_[structural_ + r] = true;
    }
  }

  // Returns false if phase 1 proves infeasibility.
  bool phase_one() {
    std::vector<Rational> cost(total_);
    for (std::size_t k = structural_; k < total_; ++k) cost[k] = Rational(1);
    run(cost, true);
    duals_ = compute_duals(cost);
    Rational infeasibility;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (is_artificial(basis_[r])) infeasibility += xb_[r];
    }
    if (infeasibility.sign() > 0) return false;
    drive_out_artificials();
    return true;
  }

  // Returns false if the objective is unbounded below.
  bool phase_two(const std::vector<Rational>& objective) {
    std::vector<Rational> cost(total_);
    for (std::size_t k = 0; k < structural_; ++k) {
      cost[k] = var_sign_[k] > 0 ? objective[var_col_[k]] : -objective[var_col_[k]];
    }
    const bool bounded = run(cost, false);
    duals_ = compute_duals(cost);
    return bounded;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(sys_.cols());
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::size_t k = basis_[r];
      if (is_artificial(k)) continue;
      if (var_sign_[k] > 0) {
        x[var_col_[k]] += xb_[r];
      } else {
        x[var_col_[k]] -= xb_[r];
      }
    }
    return x;
  }

  // Duals of the original rows (undoing the row flips).
  std::vector<Rational> original_duals() const {
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) y[r] = flip_[r] < 0 ? -duals_[r] : duals_[r];
    return y;
  }

  std::vector<Rational> ray() const {
    std::vector<Rational> out(sys_.cols());
    out[var_col_[ray_var_]] += var_sign_[ray_var_] > 0 ? Rational(1) : Rational(-1);
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::size_t k = basis_[r];
      if (is_artificial(k) || ray_dir_[r].is_zero()) continue;
      // Basic variables move by -d per unit step of the entering variable.
      if (var_sign_[k] > 0) {
        out[var_col_[k]] -= ray_dir_[r];
      } else {
        out[var_col_[k]] += ray_dir_[r];
      }
    }
    return out;
  }

 private:
  bool is_artificial(std::size_t k) const { return k >= structural_; }

  // y . (D a_k) for the internal column k.
  Rational row_times_column(const std::vector<Rational>& y, std::size_t k) const {
    Rational s;
    if (is_artificial(k)) return y[k - structural_];
    for (const Entry& e : sys_.columns[var_col_[k]]) {
      if (y[e.row].is_zero()) continue;
      const bool negate = (flip_[e.row] < 0) != (var_sign_[k] < 0);
      if (negate) {
        s -= y[e.row] * e.value;
      } else {
        s.add_product(y[e.row], e.value);
      }
    }
    return s;
  }

  // B^{-1} (D a_k).
  std::vector<Rational> solve_column(std::size_t k) const {
    std::vector<Rational> d(rows_);
    for (std::size_t i = 0; i < rows_; ++i) d[i] = row_times_column(binv_[i], k);
    return d;
  }

  std::vector<Rational> compute_duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) y[r].add_product(cb, binv_[i][r]);
    }
    return y;
  }

  void pivot(std::size_t p, std::size_t entering, const std::vector<Rational>& d) {
    const Rational theta = xb_[p] / d[p];
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != p && !d[i].is_zero()) xb_[i] -= theta * d[i];
    }
    xb_[p] = theta;

    const Rational inv = Rational(1) / d[p];
    for (auto& v : binv_[p]) {
      if (!v.is_zero()) v *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == p || d[i].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (!binv_[p][r].is_zero()) binv_[i][r] -= d[i] * binv_[p][r];
      }
    }
    is_basic_[basis_[p]] = false;
    is_basic_[entering] = true;
    basis_[p] = entering;
  }

  // Dantzig pricing (most negative reduced cost). After a run of degenerate
  // pivots switch to Bland's rule, which cannot cycle; a nondegenerate pivot
  // strictly lowers the objective, so switching back is safe.
  bool run(const std::vector<Rational>& cost, bool artificials_may_enter) {
    const std::size_t limit = artificials_may_enter ? total_ : structural_;
    std::size_t degenerate_run = 0;
    for (;;) {
      const bool bland = degenerate_run > rows_;
      const std::vector<Rational> y = compute_duals(cost);
      std::size_t entering = total_;
      if (const auto fast = integer_pricing(cost, y, limit, bland)) {
        entering = *fast;
      } else {
        entering = exact_pricing(cost, y, limit, bland);
      }
      if (entering == total_) return true;

      std::vector<Rational> d = solve_column(entering);
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (d[i].sign() <= 0) continue;
        const Rational ratio = xb_[i] / d[i];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) {
        ray_var_ = entering;
        ray_dir_ = std::move(d);
        return false;
      }
      degenerate_run = best.is_zero() ? degenerate_run + 1 : 0;
      pivot(leave, entering, d);
    }
  }

  static constexpr std::int64_t kEntryBound = std::int64_t{1} << 31;
  static constexpr std::int64_t kScaledBound = std::int64_t{1} << 62;

  static std::optional<std::int64_t> small_integer(const Rational& q, std::int64_t bound) {
    if (!q.is_integer()) return std::nullopt;
    const mpz_class& z = q.raw().get_num();
    if (!z.fits_slong_p()) return std::nullopt;
    const long v = z.get_si();
    if (v <= -bound || v >= bound) return std::nullopt;
    return static_cast<std::int64_t>(v);
  }

  // Exact pricing in machine integers: with D the common denominator of y
  // and the costs, D * reduced_k = D c_k - (D y) . a_k, and the columns are
  // integral, so every term is an integer. Sums stay far below 2^127 given
  // the bounds above. nullopt when the scaled values do not fit.
  std::optional<std::size_t> integer_pricing(const std::vector<Rational>& cost, const std::vector<Rational>& y,
                                             std::size_t limit, bool bland) const {
    if (!int_pricing_) return std::nullopt;
    mpz_class d = 1;
    for (const auto& v : y) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.raw().get_den_mpz_t());
    for (std::size_t k = 0; k < limit; ++k) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), cost[k].raw().get_den_mpz_t());
    auto scaled = [&d](const Rational& q) { return small_integer(q * Rational(d), kScaledBound); };

    std::vector<std::int64_t> yd(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto v = scaled(y[r]);
      if (!v) return std::nullopt;
      yd[r] = *v;
    }
    std::size_t entering = total_;
    __int128 most_negative = 0;
    for (std::size_t k = 0; k < limit; ++k) {
      if (is_basic_[k]) continue;
      const auto c = scaled(cost[k]);
      if (!c) return std::nullopt;
      __int128 reduced = *c;
      if (is_artificial(k)) {
        reduced -= yd[k - structural_];
      } else {
        for (const auto& [row, value] : int_cols_[k]) reduced -= static_cast<__int128>(yd[row]) * value;
      }
      if (reduced >= 0) continue;
      if (bland) return k;
      if (entering == total_ || reduced < most_negative) {
        entering = k;
        most_negative = reduced;
      }
    }
    return entering;
  }

  std::size_t exact_pricing(const std::vector<Rational>& cost, const std::vector<Rational>& y, std::size_t limit,
                            bool bland) const {
    std::size_t entering = total_;
    Rational most_negative;
    for (std::size_t k = 0; k < limit; ++k) {
      if (is_basic_[k]) continue;
      Rational reduced = cost[k] - row_times_column(y, k);
      if (reduced.sign() >= 0) continue;
      if (bland) return k;
      if (entering == total_ || reduced < most_negative) {
        entering = k;
        most_negative = std::move(reduced);
      }
    }
    return entering;
  }

  // After a successful phase 1 every basic artificial sits at zero; pivot
  // it out where some structural column has a nonzero in its row. Rows
  // where none does are redundant and their artificial never moves again.
  void drive_out_artificials() {
    for (std::size_t p = 0; p < rows_; ++p) {
      if (!is_artificial(basis_[p])) continue;
      for (std::size_t k = 0; k < structural_; ++k) {
        if (is_basic_[k]) continue;
        if (row_times_column(binv_[p], k).is_zero()) continue;
        pivot(p, k, solve_column(k));
        break;
      }
    }
  }

  const LinearSystem& sys_;
  std::size_t rows_;
  std::vector<std::size_t> var_col_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> int_cols_;
  bool int_pricing_ = true;
  std::vector<int> var_sign_;
  std::size_t structural_ = 0;
  std::size_t total_ = 0;
  std::vector<int> flip_;
  std::vector<Rational> xb_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<std::size_t> basis_;
  std::vector<bool> is_basic_;
  std::vector<Rational> duals_;
  std::size_t ray_var_ = 0;
  std::vector<Rational> ray_dir_;
};

Rational column_dot(const SparseColumn& col, const std::vector<Rational>& y) {
  Rational s;
  for (const Entry& e : col) s.add_product(y[e.row], e.value);
  return s;
}

// A x for a dense x.
std::vector<Rational> apply(const LinearSystem& sys, const std::vector<Rational>& x) {
  std::vector<Rational> ax(sys.rows);
  for (std::size_t j = 0; j < sys.cols(); ++j) {
    if (x[j].is_zero()) continue;
    for (const Entry& e : sys.columns[j]) ax[e.row].add_product(e.value, x[j]);
  }
  return ax;
}

CertificateCheck check_primal(const LinearSystem& sys, const std::vector<Rational>& x) {
  if (x.size() != sys.cols()) return {false, "primal has wrong length"};
  for (std::size_t j = 0; j < sys.cols(); ++j) {
    if (sys.col_bounds[j] == ColumnSign::NonNegative && x[j].sign() < 0) {
      return {false, "primal column " + std::to_string(j) + " is negative"};
    }
  }
  const auto ax = apply(sys, x);
  for (std::size_t r = 0; r < sys.rows; ++r) {
    if (ax[r] != sys.rhs[r]) {
      return {false, "row " + std::to_string(r) + ": A x = " + ax[r].to_string() + " but b = " +
                         sys.rhs[r].to_string()};
    }
  }
  return {true, "ok"};
}

}  // namespace

std::size_t LinearSystem::add_column(SparseColumn column, ColumnSign sign, const Rational& cost) {
  columns.push_back(std::move(column));
  col_bounds.push_back(sign);
  if (objective) objective->push_back(cost);
  return columns.size() - 1;
}

const char* to_string(Status status) {
  switch (status) {
    case Status::Feasible:
      return "feasible";
    case Status::Optimal:
      return "optimal";
    case Status::Infeasible:
      return "infeasible";
    case Status::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

void validate(const LinearSystem& sys) {
  if (sys.rhs.size() != sys.rows) {
    throw std::invalid_argument("rhs has " + std::to_string(sys.rhs.size()) + " entries for " +
                                std::to_string(sys.rows) + " rows");
  }
  if (sys.col_bounds.size() != sys.cols()) throw std::invalid_argument("col_bounds length differs from column count");
  if (sys.objective && sys.objective->size() != sys.cols()) {
    throw std::invalid_argument("objective length differs from column count");
  }
  for (std::size_t j = 0; j < sys.cols(); ++j) {
    for (const Entry& e : sys.columns[j]) {
      if (e.row >= sys.rows) {
        throw std::invalid_argument("column " + std::to_string(j) + " references row " + std::to_string(e.row));
      }
    }
  }
}

LPOutcome solve_feasibility(const LinearSystem& sys) {
  validate(sys);
  Simplex simplex(sys);
  LPOutcome out;
  if (!simplex.phase_one()) {
    out.status = Status::Infeasible;
    out.dual = simplex.original_duals();
    // Phase-1 duals y satisfy y.A_j <= 0 and y.b > 0; report -y.
    for (auto& v : out.dual) v = -v;
    return out;
  }
  out.status = Status::Feasible;
  out.primal = simplex.primal();
  return out;
}

LPOutcome solve_min(const LinearSystem& sys) {
  validate(sys);
  if (!sys.objective) throw std::invalid_argument("solve_min needs an objective");
  Simplex simplex(sys);
  LPOutcome out;
  if (!simplex.phase_one()) {
    out.status = Status::Infeasible;
    out.dual = simplex.original_duals();
    for (auto& v : out.dual) v = -v;
    return out;
  }
  if (!simplex.phase_two(*sys.objective)) {
    out.status = Status::Unbounded;
    out.primal = simplex.primal();
    out.ray = simplex.ray();
    return out;
  }
  out.status = Status::Optimal;
  out.primal = simplex.primal();
  out.dual = simplex.original_duals();
  return out;
}

CertificateCheck check_outcome(const LinearSystem& sys, const LPOutcome& out) {
  try {
    validate(sys);
  } catch (const std::invalid_argument& e) {
    return {false, e.what()};
  }
  switch (out.status) {
    case Status::Feasible:
      return check_primal(sys, out.primal);

    case Status::Optimal: {
      if (!sys.objective) return {false, "optimal status without an objective"};
      if (auto c = check_primal(sys, out.primal); !c) return c;
      if (out.dual.size() != sys.rows) return {false, "dual has wrong length"};
      const auto& cost = *sys.objective;
      for (std::size_t j = 0; j < sys.cols(); ++j) {
        const Rational reduced = cost[j] - column_dot(sys.columns[j], out.dual);
        const bool ok = sys.col_bounds[j] == ColumnSign::Free ? reduced.is_zero() : reduced.sign() >= 0;
        if (!ok) return {false, "dual infeasible at column " + std::to_string(j)};
      }
      Rational primal_value;
      for (std::size_t j = 0; j < sys.cols(); ++j) primal_value.add_product(cost[j], out.primal[j]);
      Rational dual_value;
      for (std::size_t r = 0; r < sys.rows; ++r) dual_value.add_product(out.dual[r], sys.rhs[r]);
      if (primal_value != dual_value) {
        return {false, "duality gap: c.x = " + primal_value.to_string() + ", y.b = " + dual_value.to_string()};
      }
      return {true, "ok"};
    }

    case Status::Infeasible: {
      if (out.dual.size() != sys.rows) return {false, "Farkas vector has wrong length"};
      for (std::size_t j = 0; j < sys.cols(); ++j) {
        const Rational v = column_dot(sys.columns[j], out.dual);
        const bool ok = sys.col_bounds[j] == ColumnSign::Free ? v.is_zero() : v.sign() >= 0;
        if (!ok) return {false, "Farkas vector violates column " + std::to_string(j)};
      }
      Rational yb;
      for (std::size_t r = 0; r < sys.rows; ++r) yb.add_product(out.dual[r], sys.rhs[r]);
      if (yb.sign() >= 0) return {false, "Farkas vector has y.b = " + yb.to_string() + " >= 0"};
      return {true, "ok"};
    }

    case Status::Unbounded: {
      if (!sys.objective) return {false, "unbounded status without an objective"};
      if (auto c = check_primal(sys, out.primal); !c) return c;
      if (out.ray.size() != sys.cols()) return {false, "ray has wrong length"};
      for (std::size_t j = 0; j < sys.cols(); ++j) {
        if (sys.col_bounds[j] == ColumnSign::NonNegative && out.ray[j].sign() < 0) {
          return {false, "ray column " + std::to_string(j) + " is negative"};
        }
      }
      for (const auto& v : apply(sys, out.ray)) {
        if (!v.is_zero()) return {false, "ray is not in the kernel of A"};
      }
      Rational cr;
      for (std::size_t j = 0; j < sys.cols(); ++j) cr.add_product((*sys.objective)[j], out.ray[j]);
      if (cr.sign() >= 0) return {false, "ray does not decrease the objective"};
      return {true, "ok"};
    }
  }
  return {false, "unknown status"};
}

}  // namespace gtsp::lp

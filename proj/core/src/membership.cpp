#include "gtsp/membership.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "gtsp/errors.hpp"

namespace gtsp {

namespace {

void require_tour_scope(const EdgeVector& x) {
  const int n = x.space().n();
  if (n > 8) throw ScopeError("tour-based membership supports 3 <= n <= 8, got " + std::to_string(n));
}

bool uses_tours(SetKind set) { return set != SetKind::Polar; }
bool uses_shortcuts(SetKind set) { return set != SetKind::Stsp; }

EdgeVector tour_vector(const GeneratorTable& table, std::size_t i, const EdgeSpace& space) {
  EdgeVector v(space);
  for (std::size_t e : table.tour_edges[i]) v[e] = Rational(1);
  return v;
}

MembershipAnswer decide_by_lp(SetKind set, const EdgeVector& x) {
  const GeneratorTable& table = generator_table(x.space().n());
  const lp::LinearSystem sys = membership_system(set, x);
  const lp::LPOutcome out = lp::solve_feasibility(sys);
  if (const auto check = lp::check_outcome(sys, out); !check) {
    throw std::logic_error("membership LP produced an invalid certificate: " + check.diagnostic);
  }

  MembershipAnswer answer{set, Verdict::Outside, {}, std::nullopt, true};
  const std::size_t tours = uses_tours(set) ? table.tours.size() : 0;
  const std::size_t dim = x.space().dim();
  if (out.status == lp::Status::Feasible) {
    answer.verdict = Verdict::Inside;
    for (std::size_t j = 0; j < out.primal.size(); ++j) {
      if (out.primal[j].is_zero()) continue;
      if (j < tours) {
        answer.inside.tours.push_back({table.tours[j], out.primal[j]});
      } else {
        answer.inside.shortcuts.push_back({table.triples[j - tours], out.primal[j]});
      }
    }
    return answer;
  }
  // Farkas y: y.column >= 0 for every generator column and y.rhs < 0. With
  // y = (a, -alpha) this reads a.tour >= alpha, a.s >= 0 and a.x < alpha.
  LinearInequality sep{EdgeVector(x.space()), Rational(0)};
  for (std::size_t e = 0; e < dim; ++e) sep.a[e] = out.dual[e];
  if (uses_tours(set)) sep.alpha = -out.dual[dim];
  answer.separator = normalize_integral(std::move(sep));
  return answer;
}

}  // namespace

LinearInequality normalize_integral(LinearInequality ineq) {
  mpz_class lcm = ineq.alpha.denominator();
  for (const auto& c : ineq.a.coords()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class g = 0;
  auto fold = [&](const Rational& c) {
    const mpz_class scaled = c.numerator() * (lcm / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  };
  fold(ineq.alpha);
  for (const auto& c : ineq.a.coords()) fold(c);
  if (g == 0) return ineq;
  const Rational scale(lcm, g);
  for (std::size_t i = 0; i < ineq.a.size(); ++i) ineq.a[i] *= scale;
  ineq.alpha *= scale;
  return ineq;
}

MetricViolationError::MetricViolationError(MetricViolation violation)
    : std::invalid_argument("triangle inequality violated: a_{" + std::to_string(violation.u) + "," +
                            std::to_string(violation.v) + "} = " + violation.lhs.to_string() + " > a_{" +
                            std::to_string(violation.u) + "," + std::to_string(violation.w) + "} + a_{" +
                            std::to_string(violation.w) + "," + std::to_string(violation.v) +
                            "} = " + violation.rhs.to_string()),
      violation_(std::move(violation)) {}

std::optional<MetricViolation> metric_cone_check(const EdgeVector& a) {
  const int n = a.space().n();
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (v == u) continue;
      for (Vertex w = 1; w <= n; ++w) {
        if (w == u || w == v) continue;
        Rational rhs = a.at(u, w) + a.at(w, v);
        if (a.at(u, v) > rhs) return MetricViolation{u, v, w, a.at(u, v), std::move(rhs)};
      }
    }
  }
  return std::nullopt;
}

const char* to_string(SetKind set) {
  switch (set) {
    case SetKind::Polar:
      return "polar";
    case SetKind::Stsp:
      return "stsp";
    case SetKind::Minkowski:
      return "minkowski";
    case SetKind::Gtsp:
      return "gtsp";
  }
  return "unknown";
}

std::optional<SetKind> parse_set_kind(const std::string& name) {
  if (name == "polar") return SetKind::Polar;
  if (name == "stsp") return SetKind::Stsp;
  if (name == "minkowski") return SetKind::Minkowski;
  if (name == "gtsp") return SetKind::Gtsp;
  return std::nullopt;
}

const GeneratorTable& generator_table(int n) {
  constexpr int kCached = 16;
  static std::array<std::once_flag, kCached + 1> flags;
  static std::array<std::unique_ptr<GeneratorTable>, kCached + 1> tables;
  if (n < 3 || n > kCached) throw ScopeError("generator tables support 3 <= n <= 16, got " + std::to_string(n));
  std::call_once(flags[n], [n] {
    auto table = std::make_unique<GeneratorTable>();
    table->n = n;
    const EdgeSpace space(n);
    if (n <= 8) {
      table->tours = enumerate_hamiltonian_cycles(n);
      for (const auto& c : table->tours) {
        std::vector<std::size_t> idx;
        for (const Edge& e : c.edges()) idx.push_back(space.index(e.u, e.v));
        table->tour_edges.push_back(std::move(idx));
      }
    }
    table->triples = enumerate_shortcut_triples(n);
    tables[n] = std::move(table);
  });
  return *tables[n];
}

lp::LinearSystem membership_system(SetKind set, const EdgeVector& x) {
  if (set == SetKind::Gtsp) throw std::invalid_argument("gtsp membership is not a single LP");
  const EdgeSpace& space = x.space();
  if (uses_tours(set)) require_tour_scope(x);
  const GeneratorTable& table = generator_table(space.n());
  const std::size_t dim = space.dim();

  lp::LinearSystem sys;
  sys.rows = dim + (uses_tours(set) ? 1 : 0);
  sys.rhs = x.coords();
  if (uses_tours(set)) {
    sys.rhs.emplace_back(1);
    for (const auto& edges : table.tour_edges) {
      lp::SparseColumn col;
      for (std::size_t e : edges) col.push_back({e, Rational(1)});
      std::sort(col.begin(), col.end(), [](const lp::Entry& a, const lp::Entry& b) { return a.row < b.row; });
      col.push_back({dim, Rational(1)});
      sys.add_column(std::move(col));
    }
  }
  if (uses_shortcuts(set)) {
    for (const ShortcutTriple& t : table.triples) {
      lp::SparseColumn col{{space.index(t.u(), t.w()), Rational(1)},
                           {space.index(t.w(), t.v()), Rational(1)},
                           {space.index(t.u(), t.v()), Rational(-1)}};
      sys.add_column(std::move(col));
    }
  }
  return sys;
}

MembershipAnswer polar_membership(const EdgeVector& y) { return decide_by_lp(SetKind::Polar, y); }

MembershipAnswer stsp_membership(const EdgeVector& x) {
  require_tour_scope(x);
  return decide_by_lp(SetKind::Stsp, x);
}

MembershipAnswer minkowski_membership(const EdgeVector& x) {
  require_tour_scope(x);
  return decide_by_lp(SetKind::Minkowski, x);
}

MembershipAnswer gtsp_membership(const EdgeVector& x) {
  require_tour_scope(x);
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e].sign() < 0) {
      LinearInequality sep{EdgeVector(x.space()), Rational(0)};
      sep.a[e] = Rational(1);
      return {SetKind::Gtsp, Verdict::Outside, {}, std::move(sep), false};
    }
  }
  MembershipAnswer answer = decide_by_lp(SetKind::Minkowski, x);
  answer.set = SetKind::Gtsp;
  return answer;
}

MembershipAnswer membership(SetKind set, const EdgeVector& x) {
  switch (set) {
    case SetKind::Polar:
      return polar_membership(x);
    case SetKind::Stsp:
      return stsp_membership(x);
    case SetKind::Minkowski:
      return minkowski_membership(x);
    case SetKind::Gtsp:
      return gtsp_membership(x);
  }
  throw std::invalid_argument("unknown set");
}

CertificateCheck verify_membership(SetKind set, const EdgeVector& x, const MembershipAnswer& answer) {
  const EdgeSpace& space = x.space();
  const int n = space.n();
  if (answer.set != set) return {false, "answer is for a different set"};

  if (answer.verdict == Verdict::Inside) {
    if (answer.separator) return {false, "inside answer carries a separator"};
    const auto& cert = answer.inside;
    if (!uses_tours(set) && !cert.tours.empty()) return {false, "polar certificate uses tours"};
    if (!uses_shortcuts(set) && !cert.shortcuts.empty()) return {false, "stsp certificate uses shortcuts"};
    if (set == SetKind::Gtsp) {
      for (std::size_t e = 0; e < x.size(); ++e) {
        if (x[e].sign() < 0) return {false, "gtsp inside answer for a point with a negative coordinate"};
      }
    }
    EdgeVector sum(space);
    Rational lambda_total;
    for (const auto& term : cert.tours) {
      if (term.cycle.n() != n) return {false, "tour on the wrong vertex count"};
      if (term.weight.sign() < 0) return {false, "negative tour weight"};
      lambda_total += term.weight;
      for (const Edge& e : term.cycle.edges()) sum.at(e.u, e.v) += term.weight;
    }
    for (const auto& term : cert.shortcuts) {
      if (term.triple.v() > n) return {false, "shortcut uses a vertex outside [n]"};
      if (term.weight.sign() < 0) return {false, "negative shortcut weight"};
      const ShortcutTriple& t = term.triple;
      sum.at(t.u(), t.w()) += term.weight;
      sum.at(t.w(), t.v()) += term.weight;
      sum.at(t.u(), t.v()) -= term.weight;
    }
    if (uses_tours(set) && lambda_total != Rational(1)) {
      return {false, "tour weights sum to " + lambda_total.to_string() + ", not 1"};
    }
    for (std::size_t e = 0; e < x.size(); ++e) {
      if (sum[e] != x[e]) {
        const Edge edge = space.edge(e);
        return {false, "combination differs from x at edge {" + std::to_string(edge.u) + "," +
                           std::to_string(edge.v) + "}"};
      }
    }
    return {true, "ok"};
  }

  if (!answer.separator) return {false, "outside answer without a separator"};
  const LinearInequality& sep = *answer.separator;
  if (!(sep.a.space() == space)) return {false, "separator lives in a different space"};
  if (!(dot(sep.a, x) < sep.alpha)) return {false, "separator does not cut off x"};

  if (set == SetKind::Gtsp && sep.alpha.is_zero()) {
    std::size_t nonzero = 0;
    bool positive = true;
    for (const auto& c : sep.a.coords()) {
      if (!c.is_zero()) {
        ++nonzero;
        positive = positive && c.sign() > 0;
      }
    }
    if (nonzero == 1 && positive) return {true, "ok"};
  }

  const GeneratorTable& table = generator_table(n);
  if (uses_tours(set)) {
    for (std::size_t i = 0; i < table.tours.size(); ++i) {
      if (dot(sep.a, tour_vector(table, i, space)) < sep.alpha) return {false, "separator cuts off a tour"};
    }
  } else if (!sep.alpha.is_zero()) {
    return {false, "polar separator must have alpha = 0"};
  }
  if (uses_shortcuts(set)) {
    for (const ShortcutTriple& t : table.triples) {
      if (dot(sep.a, shortcut_vector(t, space)).sign() < 0) return {false, "separator is negative on a shortcut"};
    }
  }
  return {true, "ok"};
}

InsideCertificate inside_certificate_from(const DecompositionCertificate& cert) {
  std::map<ShortcutTriple, int> counts;
  for (const auto& t : cert.steps) ++counts[t];
  InsideCertificate out;
  out.tours.push_back({cert.base_cycle, Rational(1)});
  for (const auto& [t, k] : counts) out.shortcuts.push_back({t, Rational(k)});
  return out;
}

bool face_degree_two_check(const EdgeVector& x) {
  const int n = x.space().n();
  for (Vertex u = 1; u <= n; ++u) {
    Rational d;
    for (Vertex v = 1; v <= n; ++v) {
      if (v != u) d += x.at(u, v);
    }
    if (d != Rational(2)) return false;
  }
  return true;
}

TourOptimum optimize_metric(const EdgeVector& a, int n) {
  if (a.space().n() != n) throw std::invalid_argument("metric lives on a different vertex count");
  if (n < 3 || n > 8) throw ScopeError("optimize_metric supports 3 <= n <= 8, got " + std::to_string(n));
  if (auto violation = metric_cone_check(a)) throw MetricViolationError(std::move(*violation));
  const GeneratorTable& table = generator_table(n);
  std::size_t best = 0;
  Rational best_value;
  for (std::size_t i = 0; i < table.tours.size(); ++i) {
    Rational value;
    for (std::size_t e : table.tour_edges[i]) value += a[e];
    if (i == 0 || value < best_value) {
      best = i;
      best_value = std::move(value);
    }
  }
  return {best_value, table.tours[best]};
}

EdgeVector shortest_path_closure(const EdgeVector& weights) {
  const int n = weights.space().n();
  for (const auto& c : weights.coords()) {
    if (c.sign() < 0) throw std::invalid_argument("shortest-path closure needs non-negative weights");
  }
  EdgeVector d = weights;
  for (Vertex k = 1; k <= n; ++k) {
    for (Vertex i = 1; i <= n; ++i) {
      if (i == k) continue;
      for (Vertex j = i + 1; j <= n; ++j) {
        if (j == k) continue;
        Rational via = d.at(i, k) + d.at(k, j);
        if (via < d.at(i, j)) d.at(i, j) = std::move(via);
      }
    }
  }
  return d;
}

EdgeVector random_metric(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 20);
  std::uniform_int_distribution<int> den(1, 6);
  const EdgeSpace space(n);
  EdgeVector w(space);
  for (std::size_t e = 0; e < space.dim(); ++e) {
    const int p = num(rng);
    const int q = den(rng);
    w[e] = Rational(mpz_class(p), mpz_class(q));
  }
  return shortest_path_closure(w);
}

}  // namespace gtsp

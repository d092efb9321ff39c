#include "gtsp/ddfacets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "gtsp/errors.hpp"

namespace gtsp {

namespace dd {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits out = a;
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] &= b.words_[i];
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector v;
  Bits tight;
};

mpz_class dot(const IntVector& a, const IntVector& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

void make_primitive(IntVector& v) {
  mpz_class g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Incremental echelon basis over the integers.
class Echelon {
 public:
  // Returns true if row was independent of the basis (and adds it).
  bool insert(IntVector row) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const std::size_t c = pivots_[b];
      if (row[c] == 0) continue;
      const mpz_class f = row[c];
      const mpz_class p = basis_[b][c];
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = p * row[i] - f * basis_[b][i];
      make_primitive(row);
    }
    const auto it = std::find_if(row.begin(), row.end(), [](const mpz_class& x) { return x != 0; });
    if (it == row.end()) return false;
    pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
    basis_.push_back(std::move(row));
    return true;
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

// Columns of the inverse of a square nonsingular integer matrix, each scaled
// to coprime integers.
std::vector<IntVector> inverse_columns(const std::vector<IntVector>& square) {
  const std::size_t d = square.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = Rational(square[i][j]);
    m[i][d + i] = Rational(1);
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col].is_zero()) ++piv;
    if (piv == d) throw std::logic_error("inverse_columns: singular matrix");
    std::swap(m[piv], m[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < 2 * d; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<IntVector> cols(d, IntVector(d));
  for (std::size_t k = 0; k < d; ++k) {
    mpz_class lcm = 1;
    for (std::size_t i = 0; i < d; ++i) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][d + k].denominator().get_mpz_t());
    }
    for (std::size_t i = 0; i < d; ++i) {
      cols[k][i] = m[i][d + k].numerator() * (lcm / m[i][d + k].denominator());
    }
    make_primitive(cols[k]);
  }
  return cols;
}

}  // namespace

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cap) {
  Echelon e;
  for (const auto& r : rows) {
    e.insert(r);
    if (e.rank() >= cap) break;
  }
  return e.rank();
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows) {
  if (rows.empty()) throw std::invalid_argument("extreme_rays: no rows");
  const std::size_t d = rows.front().size();
  const std::size_t m = rows.size();
  for (const auto& r : rows) {
    if (r.size() != d) throw std::invalid_argument("extreme_rays: rows of different lengths");
  }

  // Initial simplicial cone from the first d independent rows.
  std::vector<std::size_t> initial;
  {
    Echelon e;
    for (std::size_t i = 0; i < m && initial.size() < d; ++i) {
      if (e.insert(rows[i])) initial.push_back(i);
    }
  }
  if (initial.size() < d) throw std::invalid_argument("extreme_rays: cone is not pointed (rank deficient rows)");

  std::vector<IntVector> square;
  for (std::size_t i : initial) square.push_back(rows[i]);
  std::vector<Ray> rays;
  for (auto& v : inverse_columns(square)) {
    Ray r{std::move(v), Bits(m)};
    for (std::size_t i : initial) {
      if (dot(rows[i], r.v) == 0) r.tight.set(i);
    }
    rays.push_back(std::move(r));
  }

  std::vector<bool> is_initial(m, false);
  for (std::size_t i : initial) is_initial[i] = true;

  for (std::size_t row = 0; row < m; ++row) {
    if (is_initial[row]) continue;
    const IntVector& a = rows[row];
    std::vector<mpz_class> value(rays.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      value[k] = dot(a, rays[k].v);
      const int s = sgn(value[k]);
      if (s > 0) pos.push_back(k);
      if (s < 0) neg.push_back(k);
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].tight & rays[q].tight;
        if (common.count() + 2 < d) continue;
        std::vector<IntVector> tight_rows;
        for (std::size_t i = 0; i < m; ++i) {
          if (common.test(i)) tight_rows.push_back(rows[i]);
        }
        if (dd::rank(tight_rows, d - 2) < d - 2) continue;
        IntVector v(d);
        const mpz_class wp = value[p];
        const mpz_class wq = -value[q];
        for (std::size_t i = 0; i < d; ++i) v[i] = wp * rays[q].v[i] + wq * rays[p].v[i];
        make_primitive(v);
        common.set(row);
        next.push_back({std::move(v), std::move(common)});
      }
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const int s = sgn(value[k]);
      if (s < 0) continue;
      if (s == 0) rays[k].tight.set(row);
      next.push_back(std::move(rays[k]));
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dd

namespace {

using dd::IntVector;

IntVector to_int_row(const EdgeVector& x, const mpz_class& last) {
  IntVector row;
  row.reserve(x.size() + 1);
  for (const auto& c : x.coords()) {
    if (!c.is_integer()) throw std::logic_error("to_int_row: non-integral coordinate");
    row.push_back(c.numerator());
  }
  row.push_back(last);
  return row;
}

template <class T>
void seeded_shuffle(std::vector<T>& v, std::uint64_t seed) {
  if (seed == 0) return;
  std::mt19937_64 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
}

bool lex_less(const EdgeVector& a, const EdgeVector& b) { return a.coords() < b.coords(); }

}  // namespace

const char* to_string(FacetClass c) {
  switch (c) {
    case FacetClass::NonNegativity:
      return "non-negativity";
    case FacetClass::TriangleMetric:
      return "triangle-metric";
    case FacetClass::DichotomyViolation:
      return "dichotomy-violation";
  }
  return "unknown";
}

FacetClass classify_facet(const LinearInequality& ineq) {
  std::size_t nonzero = 0;
  bool positive = true;
  for (const auto& c : ineq.a.coords()) {
    if (c.is_zero()) continue;
    ++nonzero;
    positive = positive && c.sign() > 0;
  }
  if (nonzero == 1 && positive && ineq.alpha.is_zero()) return FacetClass::NonNegativity;
  if (!metric_cone_check(ineq.a)) return FacetClass::TriangleMetric;
  return FacetClass::DichotomyViolation;
}

std::size_t tight_rank(const VRepresentation& extreme, const LinearInequality& ineq) {
  std::vector<IntVector> tight;
  for (const auto& v : extreme.vertices) {
    if (dot(ineq.a, v) == ineq.alpha) {
      // Vertices may be rational in principle; scale to integers.
      mpz_class lcm = 1;
      for (const auto& c : v.coords()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
      IntVector row;
      for (const auto& c : v.coords()) row.push_back(c.numerator() * (lcm / c.denominator()));
      row.push_back(lcm);
      tight.push_back(std::move(row));
    }
  }
  for (const auto& r : extreme.rays) {
    if (dot(ineq.a, r).is_zero()) tight.push_back(to_int_row(r, 0));
  }
  return dd::rank(tight);
}

QDescription describe_Q(int n, std::uint64_t insertion_seed) {
  if (n != 4 && n != 5) throw ScopeError("facet enumeration supports n in {4, 5}, got " + std::to_string(n));
  const EdgeSpace space(n);
  const std::size_t dim = space.dim();
  const std::size_t d = dim + 1;
  const GeneratorTable& table = generator_table(n);

  // Cone over the generators: tours at height 1, shortcut rays at height 0.
  std::vector<IntVector> generators;
  for (const auto& edges : table.tour_edges) {
    IntVector row(d, 0);
    for (std::size_t e : edges) row[e] = 1;
    row[dim] = 1;
    generators.push_back(std::move(row));
  }
  for (const auto& t : table.triples) generators.push_back(to_int_row(shortcut_vector(t, space), 0));
  seeded_shuffle(generators, insertion_seed);

  // Facets (a, beta) of that cone: a.x + beta t >= 0.
  std::vector<IntVector> halfspaces = dd::extreme_rays(generators);
  for (std::size_t e = 0; e < dim; ++e) {
    IntVector row(d, 0);
    row[e] = 1;
    if (std::find(halfspaces.begin(), halfspaces.end(), row) == halfspaces.end()) halfspaces.push_back(row);
  }
  seeded_shuffle(halfspaces, insertion_seed + 1);

  QDescription out{n, {}, {}};
  for (const auto& ray : dd::extreme_rays(halfspaces)) {
    EdgeVector x(space);
    const mpz_class& t = ray[dim];
    if (t < 0) throw std::logic_error("describe_Q: extreme ray below the homogenizing hyperplane");
    for (std::size_t e = 0; e < dim; ++e) {
      x[e] = t == 0 ? Rational(ray[e]) : Rational(ray[e], t);
    }
    (t == 0 ? out.extreme.rays : out.extreme.vertices).push_back(std::move(x));
  }
  std::sort(out.extreme.vertices.begin(), out.extreme.vertices.end(), lex_less);
  std::sort(out.extreme.rays.begin(), out.extreme.rays.end(), lex_less);

  for (const auto& h : halfspaces) {
    bool trivial = true;
    for (std::size_t e = 0; e < dim; ++e) trivial = trivial && h[e] == 0;
    if (trivial) continue;  // t >= 0, the face at infinity
    LinearInequality ineq{EdgeVector(space), Rational(-h[dim])};
    for (std::size_t e = 0; e < dim; ++e) ineq.a[e] = Rational(h[e]);
    if (tight_rank(out.extreme, ineq) != dim) continue;
    const FacetClass c = classify_facet(ineq);
    if (c == FacetClass::DichotomyViolation) {
      throw std::logic_error("describe_Q: facet is neither a non-negativity nor a metric inequality");
    }
    out.facets.push_back({std::move(ineq), c});
  }
  std::sort(out.facets.begin(), out.facets.end(), [](const ClassifiedFacet& a, const ClassifiedFacet& b) {
    if (a.inequality.a.coords() != b.inequality.a.coords()) return a.inequality.a.coords() < b.inequality.a.coords();
    return a.inequality.alpha < b.inequality.alpha;
  });
  return out;
}

std::vector<ClassifiedFacet> facets_of_Q(int n) { return describe_Q(n).facets; }

VRepresentation extreme_elements_of_Q(int n) { return describe_Q(n).extreme; }

}  // namespace gtsp

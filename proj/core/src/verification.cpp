#include "gtsp/verification.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "gtsp/decompose.hpp"
#include "gtsp/formats.hpp"
#include "gtsp/lp.hpp"
#include "gtsp/membership.hpp"

namespace gtsp::verification {

namespace {

std::string count_text(std::size_t ok, std::size_t total, const char* what) {
  std::ostringstream os;
  os << ok << "/" << total << " " << what;
  return os.str();
}

Rational random_weight(std::mt19937_64& rng) {
  return Rational(static_cast<long>(std::uniform_int_distribution<int>(1, 5)(rng)));
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a simple combination.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (a + 1) + 0xBF58476D1CE4E5B9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<Multigraph> build_instances(const InstanceOptions& opts) {
  std::vector<Multigraph> out;
  for (int n : opts.exhaustive_ns) {
    for_each_eulerian_connected(n, opts.max_mult, opts.max_edges, [&](const Multigraph& g) { out.push_back(g); });
  }
  if (!opts.sampled_ns.empty()) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const int n = opts.sampled_ns[i % opts.sampled_ns.size()];
      out.push_back(sample_eulerian_connected(n, opts.sample_max_edges, mix_seed(opts.seed, static_cast<std::uint64_t>(n), i)));
    }
  }
  return out;
}

CheckResult check_decomposition(const std::vector<Multigraph>& instances, CertificateTally& tally) {
  CheckResult r{"decomposition round-trip", true, {}};
  std::size_t ok = 0;
  for (const auto& x : instances) {
    try {
      const auto cert = decompose(x);
      const auto check = verify_certificate(x, cert);
      tally.record(check.ok);
      const bool steps_ok = static_cast<int>(cert.steps.size()) == x.edge_count() - x.n();
      if (check.ok && steps_ok) {
        ++ok;
      } else if (r.passed) {
        r.passed = false;
        r.detail = "first failure: " + (check.ok ? std::string("step count differs from m - n") : check.diagnostic) + "; ";
      }
    } catch (const std::exception& e) {
      if (r.passed) r.detail = std::string("first failure: ") + e.what() + "; ";
      r.passed = false;
    }
  }
  r.detail += count_text(ok, instances.size(), "instances decomposed with |steps| = m - n");
  return r;
}

CheckResult check_inclusion(const std::vector<Multigraph>& instances, CertificateTally& tally) {
  CheckResult r{"inclusion P_n in S_n + polar cone", true, {}};
  std::size_t ok = 0;
  for (const auto& g : instances) {
    const EdgeVector x = g.to_edge_vector();
    const MembershipAnswer lp_answer = minkowski_membership(x);
    const bool lp_ok = lp_answer.lp_certified && verify_membership(SetKind::Minkowski, x, lp_answer).ok;
    tally.record(lp_ok);

    MembershipAnswer derived{SetKind::Minkowski, Verdict::Inside, inside_certificate_from(decompose(g)), std::nullopt, false};
    const bool derived_ok = verify_membership(SetKind::Minkowski, x, derived).ok;
    tally.record(derived_ok);

    if (lp_answer.inside_set() && lp_ok && derived_ok) {
      ++ok;
    } else if (r.passed) {
      r.passed = false;
      r.detail = "first failure at an instance with m = " + std::to_string(g.edge_count()) + "; ";
    }
  }
  r.detail += count_text(ok, instances.size(), "instances inside with agreeing certificates");
  return r;
}

CheckResult check_facet_level(const QDescription& q, CertificateTally& tally) {
  const int n = q.n;
  const EdgeSpace space(n);
  const std::size_t dim = space.dim();
  CheckResult r{"facet-level identity at n = " + std::to_string(n), true, {}};
  auto fail = [&r](const std::string& why) {
    if (r.passed) r.detail = "first failure: " + why + "; ";
    r.passed = false;
  };

  for (const auto& v : q.extreme.vertices) {
    bool integral = true;
    for (const auto& c : v.coords()) integral = integral && c.is_integer();
    if (!integral) {
      fail("non-integral vertex");
      continue;
    }
    if (!is_eulerian_connected(Multigraph::from_edge_vector(v))) fail("vertex is not a connected Eulerian multigraph");
  }
  for (const auto& ray : q.extreme.rays) {
    for (const auto& c : ray.coords()) {
      if (c.sign() < 0) fail("ray with a negative coordinate");
    }
    const auto answer = polar_membership(ray);
    const bool ok = answer.lp_certified && verify_membership(SetKind::Polar, ray, answer).ok;
    tally.record(ok);
    if (!answer.inside_set() || !ok) fail("ray outside the polar cone");
  }

  // Validity for the generators of the right-hand side and irredundancy.
  const GeneratorTable& table = generator_table(n);
  for (const auto& f : q.facets) {
    for (const auto& edges : table.tour_edges) {
      Rational value;
      for (std::size_t e : edges) value += f.inequality.a[e];
      if (value < f.inequality.alpha) fail("facet cuts off a tour");
    }
    // x_e >= 0 comes from the orthant; everything else must hold on S_n + polar cone.
    if (f.facet_class != FacetClass::NonNegativity) {
      for (const auto& t : table.triples) {
        if (dot(f.inequality.a, shortcut_vector(t, space)).sign() < 0) fail("facet is negative on a shortcut ray");
      }
    }
    if (tight_rank(q.extreme, f.inequality) != dim) fail("redundant inequality in the facet list");
  }

  std::size_t generators = 0;
  for_each_eulerian_connected(n, 2, 12, [&](const Multigraph& g) {
    ++generators;
    const EdgeVector x = g.to_edge_vector();
    for (const auto& f : q.facets) {
      if (dot(f.inequality.a, x) < f.inequality.alpha) {
        fail("a connected Eulerian multigraph violates a facet");
        return;
      }
    }
  });

  for (std::size_t e = 0; e < dim; ++e) {
    const bool present = std::any_of(q.facets.begin(), q.facets.end(), [e](const ClassifiedFacet& f) {
      return f.facet_class == FacetClass::NonNegativity && !f.inequality.a[e].is_zero();
    });
    if (!present) fail("x_e >= 0 missing from the facets");
  }
  for (const auto& c : table.tours) {
    const EdgeVector t = cycle_vector(c).to_edge_vector();
    if (std::find(q.extreme.vertices.begin(), q.extreme.vertices.end(), t) == q.extreme.vertices.end()) {
      fail("a tour is not a vertex");
    }
  }

  const QDescription permuted = describe_Q(n, mix_seed(0x5eed, static_cast<std::uint64_t>(n)));
  bool same = permuted.facets.size() == q.facets.size();
  for (std::size_t i = 0; same && i < q.facets.size(); ++i) same = permuted.facets[i].inequality == q.facets[i].inequality;
  if (!same) fail("permuted insertion order changed the facet set");

  std::ostringstream os;
  os << q.facets.size() << " facets, " << q.extreme.vertices.size() << " vertices, " << q.extreme.rays.size()
     << " rays; " << generators << " P_n generators checked";
  r.detail += os.str();
  return r;
}

CheckResult check_dichotomy(const QDescription& q) {
  CheckResult r{"facet dichotomy at n = " + std::to_string(q.n), true, {}};
  std::size_t nonneg = 0;
  std::size_t metric = 0;
  std::size_t violations = 0;
  for (const auto& f : q.facets) {
    switch (classify_facet(f.inequality)) {
      case FacetClass::NonNegativity:
        ++nonneg;
        break;
      case FacetClass::TriangleMetric:
        ++metric;
        break;
      case FacetClass::DichotomyViolation:
        ++violations;
        break;
    }
  }
  r.passed = violations == 0 && !q.facets.empty();
  std::ostringstream os;
  os << nonneg << " non-negativity, " << metric << " triangle-metric, " << violations << " violations";
  r.detail = os.str();
  return r;
}

CheckResult check_optimization(int n, std::size_t metrics, std::uint64_t seed) {
  CheckResult r{"tour attains the metric minimum at n = " + std::to_string(n), true, {}};
  const EdgeSpace space(n);
  const std::size_t dim = space.dim();

  // Metrics scaled to integers so the sweep runs in machine arithmetic.
  std::vector<std::vector<std::int64_t>> scaled(metrics, std::vector<std::int64_t>(dim));
  std::vector<mpz_class> scale(metrics);
  std::vector<TourOptimum> tour_best;
  for (std::size_t k = 0; k < metrics; ++k) {
    const EdgeVector a = random_metric(n, mix_seed(seed, static_cast<std::uint64_t>(n), k));
    tour_best.push_back(optimize_metric(a, n));
    mpz_class lcm = 1;
    for (const auto& c : a.coords()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    scale[k] = lcm;
    for (std::size_t e = 0; e < dim; ++e) {
      const mpz_class v = a[e].numerator() * (lcm / a[e].denominator());
      if (!v.fits_slong_p()) throw std::overflow_error("scaled metric does not fit in 64 bits");
      scaled[k][e] = v.get_si();
    }
  }

  std::vector<std::int64_t> graph_best(metrics, std::numeric_limits<std::int64_t>::max());
  std::size_t graphs = 0;
  for_each_eulerian_connected(n, 2, 2 * n, [&](const Multigraph& g) {
    ++graphs;
    const auto& mult = g.multiplicities();
    for (std::size_t k = 0; k < metrics; ++k) {
      std::int64_t value = 0;
      for (std::size_t e = 0; e < dim; ++e) value += mult[e] * scaled[k][e];
      graph_best[k] = std::min(graph_best[k], value);
    }
  });

  std::size_t agree = 0;
  for (std::size_t k = 0; k < metrics; ++k) {
    const Rational graph_min(mpz_class(static_cast<long>(graph_best[k])), scale[k]);
    if (graph_min == tour_best[k].value) {
      ++agree;
    } else if (r.passed) {
      r.passed = false;
      r.detail = "metric " + std::to_string(k) + ": graph minimum " + graph_min.to_string() + " vs tour minimum " +
                 tour_best[k].value.to_string() + "; ";
    }
  }
  r.detail += count_text(agree, metrics, "metrics agree") + " over " + std::to_string(graphs) + " multigraphs";
  return r;
}

CheckResult check_polarity(const std::vector<int>& ns, std::size_t metrics, int identity_max_n, std::uint64_t seed) {
  CheckResult r{"polarity of the metric cone and the shortcut cone", true, {}};
  std::size_t pairs = 0;
  for (std::size_t k = 0; k < metrics; ++k) {
    const int n = ns[k % ns.size()];
    const EdgeVector a = random_metric(n, mix_seed(seed, 100 + static_cast<std::uint64_t>(n), k));
    if (metric_cone_check(a)) {
      r.passed = false;
      r.detail = "random metric outside the metric cone; ";
    }
    for (const auto& t : generator_table(n).triples) {
      ++pairs;
      if (dot(a, shortcut_vector(t, a.space())).sign() < 0) {
        if (r.passed) r.detail = "negative pairing found; ";
        r.passed = false;
      }
    }
  }

  std::size_t identities = 0;
  for (int n = 3; n <= identity_max_n; ++n) {
    const EdgeSpace space(n);
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex w = 1; w <= n; ++w) {
        for (Vertex v = 1; v <= n; ++v) {
          if (u == w || u == v || v == w) continue;
          ++identities;
          const EdgeVector lhs = shortcut_vector(ShortcutTriple(v, u, w), space) + shortcut_vector(ShortcutTriple(v, w, u), space);
          EdgeVector rhs(space);
          rhs.at(u, w) = Rational(2);
          if (!(lhs == rhs)) {
            if (r.passed) r.detail = "double-edge identity fails; ";
            r.passed = false;
          }
        }
      }
    }
  }
  r.detail += std::to_string(metrics) + " metrics, " + std::to_string(pairs) + " metric/shortcut pairs, " +
              std::to_string(identities) + " double-edge identities";
  return r;
}

CheckResult check_face_property(const std::vector<Multigraph>& instances, const std::vector<const QDescription*>& qs,
                                std::size_t points_per_q, std::uint64_t seed, CertificateTally& tally) {
  CheckResult r{"degree-two face of P_n is S_n", true, {}};
  std::size_t checked = 0;
  std::size_t on_face = 0;

  auto examine = [&](const EdgeVector& x, bool must_be_in_gtsp) {
    const MembershipAnswer g = gtsp_membership(x);
    const MembershipAnswer s = stsp_membership(x);
    const bool g_ok = verify_membership(SetKind::Gtsp, x, g).ok;
    const bool s_ok = verify_membership(SetKind::Stsp, x, s).ok;
    tally.record(g_ok);
    tally.record(s_ok);
    const bool face = face_degree_two_check(x);
    ++checked;
    if (face) ++on_face;
    const bool consistent = ((face && g.inside_set()) == s.inside_set()) && g_ok && s_ok &&
                            (!must_be_in_gtsp || g.inside_set());
    if (!consistent && r.passed) {
      r.passed = false;
      r.detail = "first failure:\n" + print_instance(x) + "; ";
    }
  };
  for (const auto& gph : instances) examine(gph.to_edge_vector(), true);

  for (const QDescription* q : qs) {
    const int n = q->n;
    const EdgeSpace space(n);
    const GeneratorTable& table = generator_table(n);
    std::mt19937_64 rng(mix_seed(seed, 200 + static_cast<std::uint64_t>(n)));
    for (std::size_t i = 0; i < points_per_q; ++i) {
      EdgeVector x(space);
      Rational total;
      const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<std::pair<Rational, EdgeVector>> parts;
      for (int k = 0; k < terms; ++k) {
        EdgeVector p(space);
        if (i % 2 == 0) {
          const auto idx = std::uniform_int_distribution<std::size_t>(0, table.tours.size() - 1)(rng);
          p = cycle_vector(table.tours[idx]).to_edge_vector();
        } else {
          const auto idx = std::uniform_int_distribution<std::size_t>(0, q->extreme.vertices.size() - 1)(rng);
          p = q->extreme.vertices[idx];
        }
        Rational w = random_weight(rng);
        total += w;
        parts.emplace_back(std::move(w), std::move(p));
      }
      for (auto& [w, p] : parts) x += (w / total) * p;
      if (i % 4 == 3) {
        const auto idx = std::uniform_int_distribution<std::size_t>(0, q->extreme.rays.size() - 1)(rng);
        x += (random_weight(rng) / Rational(7)) * q->extreme.rays[idx];
      }
      examine(x, true);
    }
  }
  r.detail += std::to_string(checked) + " points checked, " + std::to_string(on_face) + " on the degree-two face";
  return r;
}

CheckResult check_certificate_soundness(const CertificateTally& tally, std::uint64_t seed) {
  CheckResult r{"certificate soundness and tamper detection", true, {}};
  std::size_t tampered = 0;
  std::size_t detected = 0;
  auto expect_rejected = [&](bool accepted) {
    ++tampered;
    if (!accepted) ++detected;
  };

  for (int n = 4; n <= 6; ++n) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Multigraph x = sample_eulerian_connected(n, 2 * n + 2, mix_seed(seed, 300 + static_cast<std::uint64_t>(n), s));
      const DecompositionCertificate cert = decompose(x);

      // Swap the base cycle for a different tour.
      const auto& tours = generator_table(n).tours;
      for (const auto& c : tours) {
        if (c != cert.base_cycle) {
          DecompositionCertificate bad = cert;
          bad.base_cycle = c;
          expect_rejected(verify_certificate(x, bad).ok);
          break;
        }
      }
      // Append one more step.
      DecompositionCertificate extra = cert;
      extra.steps.emplace_back(1, 2, 3);
      expect_rejected(verify_certificate(x, extra).ok);

      const EdgeVector xv = x.to_edge_vector();
      const lp::LinearSystem sys = membership_system(SetKind::Minkowski, xv);
      lp::LPOutcome out = lp::solve_feasibility(sys);
      if (out.status == lp::Status::Feasible) {
        out.primal[static_cast<std::size_t>(s) % out.primal.size()] += Rational(1);
        expect_rejected(lp::verify_certificate_lp(sys, out));
      }

      MembershipAnswer inside = minkowski_membership(xv);
      if (!inside.inside.tours.empty()) {
        inside.inside.tours.front().weight += Rational(1);
        expect_rejected(verify_membership(SetKind::Minkowski, xv, inside).ok);
      }

      // An outside point: the zero vector has coordinate sum 0 < n.
      const EdgeVector zero(x.space());
      MembershipAnswer outside = minkowski_membership(zero);
      if (outside.separator) {
        outside.separator->alpha = dot(outside.separator->a, zero);
        expect_rejected(verify_membership(SetKind::Minkowski, zero, outside).ok);
      }
      const lp::LinearSystem zsys = membership_system(SetKind::Minkowski, zero);
      lp::LPOutcome farkas = lp::solve_feasibility(zsys);
      if (farkas.status == lp::Status::Infeasible) {
        // Move y.b to zero through the convexity row (b = 1 there).
        Rational yb;
        for (std::size_t i = 0; i < zsys.rows; ++i) yb.add_product(farkas.dual[i], zsys.rhs[i]);
        farkas.dual.back() -= yb;
        expect_rejected(lp::verify_certificate_lp(zsys, farkas));
      }
    }
  }

  r.passed = tally.emitted == tally.verified && tampered == detected && tally.emitted > 0;
  r.detail = count_text(tally.verified, tally.emitted, "emitted certificates re-verified") + ", " +
             count_text(detected, tampered, "tampered certificates rejected");
  return r;
}

}  // namespace gtsp::verification

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gtsp/ddfacets.hpp"
#include "gtsp/decompose.hpp"
#include "gtsp/errors.hpp"
#include "gtsp/formats.hpp"
#include "gtsp/membership.hpp"
#include "gtsp/verification.hpp"

namespace gtsp::cli {

namespace {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EdgeVector load_vector(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw FileError(path + ": " + e.what());
  }
}

Multigraph load_multigraph(const std::string& path) {
  try {
    return parse_multigraph(read_file(path));
  } catch (const ParseError& e) {
    throw FileError(path + ": " + e.what());
  }
}

struct Options {
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string file;
  std::string set;
  int n = 0;
  std::size_t samples = 200;

  bool machine() const { return format == "machine"; }
};

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const Multigraph x = load_multigraph(o.file);
  const DecompositionCertificate cert = decompose(x);
  if (const auto check = verify_certificate(x, cert); !check) {
    err << "internal error: certificate failed verification: " << check.diagnostic << "\n";
    return kOutside;
  }
  if (!o.machine()) {
    out << "# n = " << x.n() << ", m = " << x.edge_count() << ": one tour plus " << cert.steps.size()
        << " shortcut vectors\n";
  }
  out << print_certificate(cert);
  return kOk;
}

int cmd_member(const Options& o, std::ostream& out, std::ostream& err) {
  const auto set = parse_set_kind(o.set);
  if (!set) throw UsageError("unknown set '" + o.set + "' (expected stsp, polar, minkowski or gtsp)");
  const EdgeVector x = load_vector(o.file);
  const MembershipAnswer answer = membership(*set, x);
  if (const auto check = verify_membership(*set, x, answer); !check) {
    err << "internal error: membership certificate failed verification: " << check.diagnostic << "\n";
    return kOutside;
  }
  if (!o.machine()) out << "# " << (answer.inside_set() ? "inside " : "outside ") << to_string(*set) << "\n";
  out << print_certificate(certificate_of(answer, x.space().n()));
  return answer.inside_set() ? kOk : kOutside;
}

int cmd_metric_check(const Options& o, std::ostream& out, std::ostream&) {
  const EdgeVector a = load_vector(o.file);
  const auto violation = metric_cone_check(a);
  if (!violation) {
    out << (o.machine() ? "metric ok\n" : "ok: every triangle inequality holds\n");
    return kOk;
  }
  const auto& v = *violation;
  if (o.machine()) {
    out << "violation " << v.u << " " << v.v << " " << v.w << " " << v.lhs << " " << v.rhs << "\n";
  } else {
    out << "violation (" << v.u << "," << v.v << "," << v.w << "): a_{" << v.u << "," << v.v << "} = " << v.lhs
        << " > a_{" << v.u << "," << v.w << "} + a_{" << v.w << "," << v.v << "} = " << v.rhs << "\n";
  }
  return kOutside;
}

int cmd_facets(const Options& o, std::ostream& out, std::ostream&) {
  if (o.n != 4 && o.n != 5) throw UsageError("facets supports --n 4 or --n 5");
  const auto facets = facets_of_Q(o.n);
  if (!o.machine()) {
    std::size_t nonneg = 0;
    for (const auto& f : facets) nonneg += f.facet_class == FacetClass::NonNegativity ? 1 : 0;
    out << "# Q_" << o.n << ": " << facets.size() << " facets (" << nonneg << " non-negativity, "
        << facets.size() - nonneg << " triangle-metric); each line reads normal . x >= alpha\n";
  }
  out << "n " << o.n << "\nfacets " << facets.size() << "\n";
  for (const auto& f : facets) {
    out << "facet " << to_string(f.facet_class) << " alpha " << f.inequality.alpha << " normal";
    for (const auto& c : f.inequality.a.coords()) out << " " << c;
    out << "\n";
  }
  return kOk;
}

int cmd_optimize(const Options& o, std::ostream& out, std::ostream& err) {
  const EdgeVector a = load_vector(o.file);
  if (a.space().n() != o.n) {
    throw UsageError("--n " + std::to_string(o.n) + " does not match the file header n " + std::to_string(a.space().n()));
  }
  try {
    const TourOptimum best = optimize_metric(a, o.n);
    if (!o.machine()) out << "# minimum of a.x over tours, equal to the minimum over P_" << o.n << "\n";
    out << "optimum " << best.value << "\ntour";
    for (Vertex v : best.argmin.order()) out << " " << v;
    out << "\n";
    return kOk;
  } catch (const MetricViolationError& e) {
    err << e.what() << "\n";
    const auto& v = e.violation();
    out << "violation " << v.u << " " << v.v << " " << v.w << " " << v.lhs << " " << v.rhs << "\n";
    return kOutside;
  }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  using namespace verification;
  if (o.n < 3 || o.n > 8) throw UsageError("verify supports 3 <= --n <= 8");
  const int n = o.n;
  CertificateTally tally;
  std::vector<std::pair<std::string, CheckResult>> results;

  InstanceOptions inst;
  inst.seed = o.seed;
  if (n <= 5) {
    inst.exhaustive_ns = {n};
  } else {
    inst.sampled_ns = {n};
    inst.samples = o.samples;
  }
  const auto instances = build_instances(inst);
  results.emplace_back("decomposition", check_decomposition(instances, tally));
  results.emplace_back("inclusion", check_inclusion(instances, tally));

  std::optional<QDescription> q;
  if (n == 4 || n == 5) {
    q = describe_Q(n);
    results.emplace_back("facet-level", check_facet_level(*q, tally));
    results.emplace_back("dichotomy", check_dichotomy(*q));
  }
  if (n >= 4 && n <= 6) results.emplace_back("optimization", check_optimization(n, o.samples, o.seed));
  results.emplace_back("polarity", check_polarity({n}, o.samples, std::min(n, 6), o.seed));
  std::vector<const QDescription*> qs;
  if (q) qs.push_back(&*q);
  results.emplace_back("face-property", check_face_property(instances, qs, o.samples, o.seed, tally));
  results.emplace_back("certificate-soundness", check_certificate_soundness(tally, o.seed));

  std::size_t passed = 0;
  for (const auto& [id, r] : results) {
    passed += r.passed ? 1 : 0;
    if (o.machine()) {
      out << "check " << id << " " << (r.passed ? "pass" : "fail") << " " << r.detail << "\n";
    } else {
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
    }
  }
  const bool all = passed == results.size();
  out << "summary " << (all ? "pass " : "fail ") << passed << "/" << results.size() << "\n";
  return all ? kOk : kOutside;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polyhedral toolkit for the graphical and symmetric TSP polyhedra", "gtsp"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for sampled inputs")->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  auto* decompose_cmd = app.add_subcommand("decompose", "Write a connected Eulerian multigraph as tour + shortcuts");
  decompose_cmd->add_option("FILE", o.file, "Instance file")->required();

  auto* member_cmd = app.add_subcommand("member", "Decide membership with a certificate");
  member_cmd->add_option("--set", o.set, "stsp | polar | minkowski | gtsp")->required();
  member_cmd->add_option("FILE", o.file, "Instance file")->required();

  auto* metric_cmd = app.add_subcommand("metric-check", "Check the triangle inequalities");
  metric_cmd->add_option("FILE", o.file, "Instance file")->required();

  auto* facets_cmd = app.add_subcommand("facets", "Facets of Q_n with their classes");
  facets_cmd->add_option("--n", o.n, "Vertex count (4 or 5)")->required();

  auto* optimize_cmd = app.add_subcommand("optimize", "Minimize a metric over tours");
  optimize_cmd->add_option("--n", o.n, "Vertex count")->required();
  optimize_cmd->add_option("FILE", o.file, "Metric file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification pipeline");
  verify_cmd->add_option("--n", o.n, "Vertex count")->required();
  verify_cmd->add_option("--samples", o.samples, "Samples per sampled check")->capture_default_str();

  std::vector<std::string> argv_storage{"gtsp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*decompose_cmd) return cmd_decompose(o, out, err);
    if (*member_cmd) return cmd_member(o, out, err);
    if (*metric_cmd) return cmd_metric_check(o, out, err);
    if (*facets_cmd) return cmd_facets(o, out, err);
    if (*optimize_cmd) return cmd_optimize(o, out, err);
    if (*verify_cmd) return cmd_verify(o, out, err);
  } catch (const NotEulerianError& e) {
    err << "error: " << e.what() << "\n";
    return kNotEulerian;
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kFileError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ScopeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kFileError;
  }
  err << app.help();
  return kUsage;
}

}  // namespace gtsp::cli

// Runs the eight acceptance criteria at full size and prints one line each.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gtsp/ddfacets.hpp"
#include "gtsp/verification.hpp"

namespace {

using gtsp::verification::CheckResult;

CheckResult merge(std::string name, const std::vector<CheckResult>& parts) {
  CheckResult out{std::move(name), true, {}};
  for (const auto& p : parts) {
    out.passed = out.passed && p.passed;
    if (!out.detail.empty()) out.detail += " | ";
    out.detail += p.name + ": " + p.detail;
  }
  return out;
}

}  // namespace

int main() {
  using namespace gtsp;
  using namespace gtsp::verification;
  constexpr std::uint64_t kSeed = 20240601;

  int failures = 0;
  auto run = [&failures](int id, const std::function<CheckResult()>& body) {
    const auto start = std::chrono::steady_clock::now();
    const CheckResult r = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s) [%.1fs]: %s\n", r.passed ? "PASS" : "FAIL", id, r.name.c_str(), secs,
                r.detail.c_str());
    std::fflush(stdout);
    failures += r.passed ? 0 : 1;
  };

  InstanceOptions opts;
  opts.exhaustive_ns = {3, 4, 5};
  opts.max_mult = 2;
  opts.max_edges = 12;
  opts.sampled_ns = {6, 7, 8};
  opts.samples = 1000;
  opts.sample_max_edges = 20;
  opts.seed = kSeed;
  const std::vector<Multigraph> instances = build_instances(opts);

  CertificateTally tally;
  run(1, [&] { return check_decomposition(instances, tally); });
  run(2, [&] { return check_inclusion(instances, tally); });

  std::vector<QDescription> qs;
  run(3, [&] {
    std::vector<CheckResult> parts;
    for (int n : {4, 5}) {
      qs.push_back(describe_Q(n));
      parts.push_back(check_facet_level(qs.back(), tally));
    }
    return merge("facet-level identity", parts);
  });
  run(4, [&] {
    std::vector<CheckResult> parts;
    for (const auto& q : qs) parts.push_back(check_dichotomy(q));
    return merge("facet dichotomy", parts);
  });
  run(5, [&] {
    std::vector<CheckResult> parts;
    for (int n : {4, 5, 6}) parts.push_back(check_optimization(n, 100, kSeed));
    return merge("optimization attained at a tour", parts);
  });
  run(6, [&] { return check_polarity({4, 5, 6, 7, 8}, 1000, 6, kSeed); });
  run(7, [&] {
    std::vector<const QDescription*> ptrs;
    for (const auto& q : qs) ptrs.push_back(&q);
    return check_face_property(instances, ptrs, 250, kSeed, tally);
  });
  run(8, [&] { return check_certificate_soundness(tally, kSeed); });

  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}

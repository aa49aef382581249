#include "linkparity/linking.hpp"

#include <algorithm>
#include <chrono>

#include "linkparity/combinatorics.hpp"
#include "linkparity/errors.hpp"
#include "linkparity/parallel.hpp"

namespace linkparity {

namespace {

// k for n = 2k + 3 points in R^{2k}.
int linking_k(const Configuration& c) {
  const auto d = c.dimension();
  const auto n = c.size();
  if (d < 2 || d % 2 != 0 || n != d + 3) {
    throw ContractError("linking counts need 2k + 3 points in R^{2k}, got " + std::to_string(n) +
                        " points in R^" + std::to_string(d));
  }
  return static_cast<int>(d / 2);
}

void require_general_position(const Configuration& c) {
  const GeneralPositionReport gp = certify_general_position(c);
  if (!gp.general) {
    throw DegeneracyError("configuration is not in general position: " + gp.witness->str() +
                              " is affinely dependent",
                          gp.witness->str());
  }
}

}  // namespace

SubsetLinkage boundary_linkage(const Configuration& c, const IndexSubset& subject) {
  const int k = linking_k(c);
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(subject.size()) != k + 1 || !subject.within(n)) {
    throw ContractError("subject must be a (k+1)-subset of [n]");
  }
  SubsetLinkage linkage;
  linkage.subject = subject;
  linkage.complement = subject.complement(n);
  for (const IndexSubset& face : subsets_colex(linkage.complement.labels(), k + 1)) {
    IntersectionResult r = intersect_complementary(c, subject, face);
    if (r.intersects) linkage.hits.push_back({face, std::move(r)});
  }
  std::vector<const Point*> distinct;
  for (const FaceHit& hit : linkage.hits) {
    const Point& p = *hit.result.point;
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const Point* q) { return *q == p; });
    if (!seen) distinct.push_back(&p);
  }
  linkage.boundary_points = distinct.size();
  return linkage;
}

std::uint64_t boundary_intersection_count(const Configuration& c, const IndexSubset& subject) {
  return boundary_linkage(c, subject).faces_hit();
}

bool is_linked(const Configuration& c, const IndexSubset& subject) {
  return boundary_linkage(c, subject).linked();
}

LinkReport total_linked_parity(const Configuration& c, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  const int k = linking_k(c);
  require_general_position(c);

  const std::vector<IndexSubset> subjects = subsets_colex(static_cast<int>(c.size()), k + 1);
  LinkReport report{.config = c, .k = k};
  report.per_subset = parallel_map<SubsetLinkage>(
      subjects.size(), workers, [&](std::size_t i) { return boundary_linkage(c, subjects[i]); });
  for (const SubsetLinkage& s : report.per_subset) {
    if (s.linked()) report.linked.push_back(s.subject);
    if (s.boundary_points == 1) report.single_point.push_back(s.subject);
  }
  report.total_linked = report.linked.size();
  report.parity_ok = report.total_linked % 2 == 0;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CrossCheckReport> cross_checks(const LinkReport& report) {
  const bool on_curve = report.config.moment_parameters() != nullptr;
  const int n = static_cast<int>(report.config.size());
  std::vector<CrossCheckReport> checks;
  checks.reserve(report.per_subset.size());
  for (const SubsetLinkage& s : report.per_subset) {
    CrossCheckReport r;
    r.subject = s.subject;
    r.n1 = s.boundary_points;
    r.n3 = s.faces_hit();
    r.n2 = r.n3;
    if (on_curve) r.n4 = alternating_count_bruteforce(s.subject, n);
    checks.push_back(r);
  }
  return checks;
}

CounterexampleVerification verify_counterexample(int k, unsigned workers) {
  if (k < 1) throw ContractError("k must be at least 1");
  const Configuration c = moment_curve(2 * k + 3, 2 * k);
  CounterexampleVerification v{total_linked_parity(c, workers), {}};
  v.checks = cross_checks(v.link);

  std::vector<std::string> problems;
  for (const CrossCheckReport& r : v.checks) {
    if (!r.n4) problems.push_back("missing alternation count for " + r.subject.str());
    if (!r.consistent()) problems.push_back("counts disagree for " + r.subject.str());
    if (!r.even()) problems.push_back("odd count for " + r.subject.str());
  }
  if (v.link.total_linked != 0) problems.push_back("linked pairs present");
  if (!problems.empty()) {
    throw VerificationFailure("counterexample check failed for k=" + std::to_string(k) + ": " +
                                  problems.front(),
                              report_json(v.link, v.checks));
  }
  return v;
}

namespace {

void require_theorem_regime(const Configuration& c) {
  const auto d = c.dimension();
  if (d < 2 || d % 2 != 0 || c.size() != d + 3) {
    throw ContractError("intersecting-pair search needs d + 3 points in even dimension d");
  }
  require_general_position(c);
}

}  // namespace

std::optional<IntersectingPair> find_intersecting_pair(const Configuration& c, unsigned workers) {
  require_theorem_regime(c);
  const int s = static_cast<int>(c.dimension() / 2 + 1);
  const auto pairs = enumerate_disjoint_pairs(static_cast<int>(c.size()), s);
  // Chunks are scanned in order; inside a chunk the smallest hit wins.
  const std::size_t chunk = 16 * std::max(1u, workers);
  for (std::size_t begin = 0; begin < pairs.size(); begin += chunk) {
    const std::size_t len = std::min(chunk, pairs.size() - begin);
    auto results = parallel_map<IntersectionResult>(len, workers, [&](std::size_t i) {
      const auto& [first, second] = pairs[begin + i];
      return intersect_complementary(c, first, second);
    });
    for (std::size_t i = 0; i < len; ++i) {
      if (results[i].intersects) {
        return IntersectingPair{pairs[begin + i].first, pairs[begin + i].second,
                                std::move(results[i])};
      }
    }
  }
  return std::nullopt;
}

std::vector<IntersectingPair> find_all_intersecting_pairs(const Configuration& c, unsigned workers) {
  require_theorem_regime(c);
  const int s = static_cast<int>(c.dimension() / 2 + 1);
  const auto pairs = enumerate_disjoint_pairs(static_cast<int>(c.size()), s);
  auto results = parallel_map<IntersectionResult>(pairs.size(), workers, [&](std::size_t i) {
    return intersect_complementary(c, pairs[i].first, pairs[i].second);
  });
  std::vector<IntersectingPair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (results[i].intersects) out.push_back({pairs[i].first, pairs[i].second, std::move(results[i])});
  }
  return out;
}

PairSums pair_sums(const Configuration& c, unsigned workers) {
  const int k = linking_k(c);
  require_general_position(c);
  const int n = static_cast<int>(c.size());
  PairSums sums;

  const std::vector<IndexSubset> subjects = subsets_colex(n, k + 1);
  const auto per_subject = parallel_map<std::uint64_t>(subjects.size(), workers, [&](std::size_t i) {
    std::uint64_t hits = 0;
    for (const IndexSubset& j : subsets_colex(subjects[i].complement(n).labels(), k + 1)) {
      if (intersect_complementary(c, subjects[i], j).intersects) ++hits;
    }
    return hits;
  });
  for (std::uint64_t h : per_subject) sums.ordered += h;

  const auto pairs = enumerate_disjoint_pairs(n, k + 1);
  const auto hits = parallel_map<char>(pairs.size(), workers, [&](std::size_t i) {
    return static_cast<char>(intersect_complementary(c, pairs[i].first, pairs[i].second).intersects);
  });
  for (char h : hits) sums.unordered += static_cast<std::uint64_t>(h);
  return sums;
}

}  // namespace linkparity

#ifndef LINKPARITY_LINKING_HPP
#define LINKPARITY_LINKING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkparity/configuration.hpp"
#include "linkparity/index_subset.hpp"
#include "linkparity/intersection.hpp"

namespace linkparity {

struct FaceHit {
  IndexSubset face;
  IntersectionResult result;
};

/// How conv(I) meets the boundary of the complementary simplex
/// conv([n] \ I). Each k-face of that simplex is conv(J) for a (k+1)-subset
/// J of the complement, and meets conv(I) in at most one point.
struct SubsetLinkage {
  IndexSubset subject;
  IndexSubset complement;
  std::vector<FaceHit> hits;
  /// Number of distinct intersection points on the boundary.
  std::uint64_t boundary_points = 0;

  std::uint64_t faces_hit() const { return hits.size(); }
  bool linked() const { return boundary_points % 2 == 1; }
};

/// Pre: n = 2k + 3 points in R^{2k}, |I| = k + 1. Throws DegeneracyError
/// if a face solve is singular or touches a lower-dimensional face.
SubsetLinkage boundary_linkage(const Configuration& c, const IndexSubset& subject);

/// Number of k-faces of conv([n] \ I) that meet conv(I).
std::uint64_t boundary_intersection_count(const Configuration& c, const IndexSubset& subject);

/// conv(I) meets the boundary of the complementary simplex an odd number of
/// times.
bool is_linked(const Configuration& c, const IndexSubset& subject);

/// The four counts from the counterexample argument for one subset I.
struct CrossCheckReport {
  IndexSubset subject;
  std::uint64_t n1 = 0;  // distinct points of conv(I) on the complementary boundary
  std::uint64_t n2 = 0;  // complementary k-faces meeting conv(I); equals n3 by construction
  std::uint64_t n3 = 0;  // J in ([n] \ I choose k+1) with conv(I) ∩ conv(J) nonempty
  std::optional<std::uint64_t> n4;  // J alternating with I (moment-curve configurations)

  bool consistent() const { return n1 == n2 && n2 == n3 && (!n4 || *n4 == n3); }
  bool even() const { return n1 % 2 == 0 && n3 % 2 == 0 && (!n4 || *n4 % 2 == 0); }
};

struct LinkReport {
  Configuration config;
  int k = 0;
  std::vector<SubsetLinkage> per_subset{};  // colex order of I
  std::vector<IndexSubset> linked{};      // odd number of boundary points
  std::vector<IndexSubset> single_point{};  // exactly one boundary point
  std::uint64_t total_linked = 0;
  bool parity_ok = true;
  double elapsed_ms = 0;  // not serialized
};

/// Enumerates every I in ([n] choose k+1) for n = 2k + 3 points in general
/// position in R^{2k} and collects the linked ones. Throws DegeneracyError
/// (with the offending subset) when the configuration is degenerate.
LinkReport total_linked_parity(const Configuration& c, unsigned workers = 1);

std::vector<CrossCheckReport> cross_checks(const LinkReport& report);

struct CounterexampleVerification {
  LinkReport link;
  std::vector<CrossCheckReport> checks;
};

/// Builds m([2k+3]) in R^{2k} and checks general position, n1 = n2 = n3 = n4
/// and evenness for every I, and zero linked pairs. Throws
/// VerificationFailure with a JSON dump otherwise.
CounterexampleVerification verify_counterexample(int k, unsigned workers = 1);

struct IntersectingPair {
  IndexSubset first;
  IndexSubset second;
  IntersectionResult result;
};

/// First pair (in enumerate_disjoint_pairs order) of disjoint (k+1)-subsets
/// whose hulls meet, for n = d + 3 points in general position in R^d,
/// d = 2k. The answer is independent of `workers`.
std::optional<IntersectingPair> find_intersecting_pair(const Configuration& c, unsigned workers = 1);
std::vector<IntersectingPair> find_all_intersecting_pairs(const Configuration& c,
                                                          unsigned workers = 1);

/// Sum of [conv I ∩ conv J ≠ ∅] over ordered and over unordered pairs of
/// disjoint (k+1)-subsets. The ordered sum equals the sum of per-I boundary
/// counts and must be twice the unordered one.
struct PairSums {
  std::uint64_t ordered = 0;
  std::uint64_t unordered = 0;
};
PairSums pair_sums(const Configuration& c, unsigned workers = 1);

/// JSON report with stable key order:
/// {config, k, per_subset, linked_pairs, single_point_pairs, total,
///  parity_ok, witnesses}.
std::string report_json(const LinkReport& report, const std::vector<CrossCheckReport>& checks);

}  // namespace linkparity

#endif  // LINKPARITY_LINKING_HPP

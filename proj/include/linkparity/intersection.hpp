#ifndef LINKPARITY_INTERSECTION_HPP
#define LINKPARITY_INTERSECTION_HPP

#include <optional>
#include <vector>

#include "linkparity/configuration.hpp"
#include "linkparity/index_subset.hpp"
#include "linkparity/linalg.hpp"

namespace linkparity {

/// Outcome of conv(M) ∩ conv(N) for complementary vertex sets
/// (|M| + |N| = d + 2).
///
/// `dependence` is the unique affine dependence of the d + 2 vertices (M's
/// first, then N's), scaled so its first entry is 1. The hulls meet iff it
/// is positive on M and negative on N; then `point` is the common point and
/// the barycentric coefficients are filled in, all strictly positive.
/// Otherwise `blocking` is the first entry with the wrong sign.
struct IntersectionResult {
  bool intersects = false;
  std::optional<Point> point;
  VectorQ coeffs_first;
  VectorQ coeffs_second;
  VectorQ dependence;
  std::optional<Eigen::Index> blocking;
};

/// Decides conv(M) ∩ conv(N) exactly by solving for the affine dependence
/// of M ∪ N, a square (d+1) x (d+1) system.
///
/// Throws ContractError on overlapping subsets or |M| + |N| != d + 2, and
/// DegeneracyError when the system is singular or a dependence coefficient
/// vanishes; both happen exactly when M ∪ N is not in general position.
IntersectionResult intersect_complementary(const Configuration& c, const IndexSubset& first,
                                           const IndexSubset& second);

/// Hyperplane n_1 x_1 + ... + n_d x_d = offset separating m(P) from m(Q),
/// written as the polynomial p(x) = n_1 x + ... + n_d x^d - offset, whose
/// roots are the midpoints of the bicolored gaps plus filler roots at
/// x_1 - 2, x_1 - 3, ... below the smallest parameter x_1.
struct HyperplaneWitness {
  VectorQ coefficients;  // n_1..n_d
  Rational offset;
  std::vector<Rational> midpoint_roots;
  std::vector<Rational> filler_roots;
  int bicolored_count = 0;
  /// Sign of p on the parameters of P; Q gets the opposite sign.
  int first_side_sign = 0;

  /// p(x).
  Rational evaluate(const Rational& x) const;
  /// n . point - offset.
  Rational evaluate(const Point& point) const;
  int degree() const;
};

/// Builds the separating hyperplane for non-alternating P, Q with
/// |P| = |Q| = d/2 + 1 and d even, for points m(t_label) with
/// t_label = parameters[label - 1]. The monic product of the roots is kept
/// as is; `first_side_sign` records which side P ends up on.
///
/// Throws ContractError when P and Q alternate (their hulls meet, so no
/// separator exists), overlap, or have the wrong size.
HyperplaneWitness separating_hyperplane_moment(const IndexSubset& first, const IndexSubset& second,
                                               const std::vector<Rational>& parameters, int d);

/// Rechecks every invariant of `w`: d roots in total, all simple and actual
/// zeros of p, degree <= d, and strict opposite signs of n . m(t) - offset on
/// the two point sets. Returns false instead of throwing.
bool check_witness(const HyperplaneWitness& w, const IndexSubset& first,
                   const IndexSubset& second, const std::vector<Rational>& parameters, int d);

}  // namespace linkparity

#endif  // LINKPARITY_INTERSECTION_HPP

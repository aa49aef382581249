#include "linkparity/intersection.hpp"

#include <algorithm>
#include <utility>

#include "linkparity/errors.hpp"

namespace linkparity {

IntersectionResult intersect_complementary(const Configuration& c, const IndexSubset& first,
                                           const IndexSubset& second) {
  const Eigen::Index d = c.dimension();
  const auto m = static_cast<Eigen::Index>(first.size());
  const auto k = static_cast<Eigen::Index>(second.size());
  const int n = static_cast<int>(c.size());
  if (m + k != d + 2) {
    throw ContractError("complementary simplices need |M| + |N| = d + 2, got " +
                        std::to_string(m) + " + " + std::to_string(k) + " in R^" +
                        std::to_string(d));
  }
  if (m == 0 || k == 0) throw ContractError("complementary simplices must be nonempty");
  if (!first.disjoint(second)) {
    throw ContractError("subsets " + first.str() + " and " + second.str() + " overlap");
  }
  if (!first.within(n) || !second.within(n)) throw ContractError("subset label out of range");

  std::vector<int> labels(first.begin(), first.end());
  labels.insert(labels.end(), second.begin(), second.end());

  // Affine dependence sum_i a_i [v_i; 1] = 0 over the d + 2 vertices, with
  // a_0 = 1. The remaining d + 1 columns are independent exactly when those
  // points are affinely independent, so the solve is unique under general
  // position even when the two affine spans are parallel.
  MatrixQ system(d + 1, d + 1);
  VectorQ rhs(d + 1);
  for (Eigen::Index j = 0; j < d + 2; ++j) {
    VectorQ column(d + 1);
    column.head(d) = c.point(labels[static_cast<std::size_t>(j)]);
    column(d) = Rational(1);
    if (j == 0) {
      rhs = -column;
    } else {
      system.col(j - 1) = column;
    }
  }
  const auto solution = solve(system, rhs);
  if (!solution) {
    throw DegeneracyError("points of " + first.united(second).str() + " are affinely dependent",
                          first.united(second).str());
  }

  IntersectionResult result;
  result.dependence = VectorQ(d + 2);
  result.dependence(0) = Rational(1);
  result.dependence.tail(d + 1) = *solution;
  for (Eigen::Index i = 0; i < d + 2; ++i) {
    const int s = result.dependence(i).sign();
    if (s == 0) {
      throw DegeneracyError("vanishing dependence coefficient for " + first.str() + " and " +
                                second.str(),
                            first.united(second).str());
    }
    const int expected = i < m ? 1 : -1;
    if (s != expected && !result.blocking) result.blocking = i;
  }
  result.intersects = !result.blocking;
  if (result.intersects) {
    const Rational mass = result.dependence.head(m).sum();
    result.coeffs_first = result.dependence.head(m) / mass;
    result.coeffs_second = -result.dependence.tail(k) / mass;
    Point p = Point::Zero(d);
    for (Eigen::Index i = 0; i < m; ++i) {
      p += result.coeffs_first(i) * c.point(first[static_cast<std::size_t>(i)]);
    }
    result.point = std::move(p);
  }
  return result;
}

Rational HyperplaneWitness::evaluate(const Rational& x) const {
  // Horner on n_d x^d + ... + n_1 x, then subtract the offset.
  Rational acc = 0;
  for (Eigen::Index i = coefficients.size() - 1; i >= 0; --i) acc = (acc + coefficients(i)) * x;
  return acc - offset;
}

Rational HyperplaneWitness::evaluate(const Point& point) const {
  return coefficients.dot(point) - offset;
}

int HyperplaneWitness::degree() const {
  for (Eigen::Index i = coefficients.size() - 1; i >= 0; --i) {
    if (coefficients(i) != Rational(0)) return static_cast<int>(i + 1);
  }
  return offset == Rational(0) ? -1 : 0;
}

namespace {

struct Colored {
  Rational t;
  bool first;
};

std::vector<Colored> merge_colored(const IndexSubset& first, const IndexSubset& second,
                                   const std::vector<Rational>& parameters) {
  std::vector<Colored> merged;
  for (int label : first) merged.push_back({parameters[static_cast<std::size_t>(label - 1)], true});
  for (int label : second) merged.push_back({parameters[static_cast<std::size_t>(label - 1)], false});
  std::sort(merged.begin(), merged.end(), [](const Colored& a, const Colored& b) { return a.t < b.t; });
  return merged;
}

// Coefficients c_0..c_r of prod (x - root), lowest degree first.
std::vector<Rational> expand_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (const Rational& r : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

void check_moment_pair(const IndexSubset& first, const IndexSubset& second,
                       const std::vector<Rational>& parameters, int d) {
  if (d < 2 || d % 2 != 0) throw ContractError("separating witness needs an even dimension d >= 2");
  const auto expected = static_cast<std::size_t>(d / 2 + 1);
  if (first.size() != expected || second.size() != expected) {
    throw ContractError("separating witness needs |P| = |Q| = d/2 + 1 = " + std::to_string(expected));
  }
  if (!first.disjoint(second)) {
    throw ContractError("subsets " + first.str() + " and " + second.str() + " overlap");
  }
  const int n = static_cast<int>(parameters.size());
  if (!first.within(n) || !second.within(n)) {
    throw ContractError("subset label exceeds the number of parameters");
  }
}

}  // namespace

HyperplaneWitness separating_hyperplane_moment(const IndexSubset& first, const IndexSubset& second,
                                               const std::vector<Rational>& parameters, int d) {
  check_moment_pair(first, second, parameters, d);
  const std::vector<Colored> merged = merge_colored(first, second, parameters);
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i - 1].t == merged[i].t) throw ContractError("repeated moment-curve parameter");
  }

  HyperplaneWitness w;
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i - 1].first != merged[i].first) {
      w.midpoint_roots.push_back((merged[i - 1].t + merged[i].t) / Rational(2));
    }
  }
  w.bicolored_count = static_cast<int>(w.midpoint_roots.size());
  if (w.bicolored_count == static_cast<int>(merged.size()) - 1) {
    throw ContractError(first.str() + " and " + second.str() +
                        " alternate; their hulls intersect and admit no separator");
  }
  if (w.bicolored_count > d) throw std::logic_error("more than d bicolored gaps without alternation");

  const Rational lowest = merged.front().t;
  for (int j = 1; j <= d - w.bicolored_count; ++j) w.filler_roots.push_back(lowest - Rational(j + 1));

  std::vector<Rational> roots = w.midpoint_roots;
  roots.insert(roots.end(), w.filler_roots.begin(), w.filler_roots.end());
  const std::vector<Rational> c = expand_roots(roots);
  w.coefficients = VectorQ(d);
  for (int i = 1; i <= d; ++i) w.coefficients(i - 1) = c[static_cast<std::size_t>(i)];
  w.offset = -c[0];

  w.first_side_sign = w.evaluate(parameters[static_cast<std::size_t>(first.front() - 1)]).sign();
  for (const Colored& x : merged) {
    const int s = w.evaluate(x.t).sign();
    const int expected = x.first ? w.first_side_sign : -w.first_side_sign;
    if (s == 0 || s != expected) throw std::logic_error("constructed hyperplane does not separate");
  }
  return w;
}

bool check_witness(const HyperplaneWitness& w, const IndexSubset& first, const IndexSubset& second,
                   const std::vector<Rational>& parameters, int d) {
  if (w.coefficients.size() != d) return false;
  if (w.degree() > d || w.degree() < 1) return false;
  if (static_cast<int>(w.midpoint_roots.size() + w.filler_roots.size()) != d) return false;
  if (w.bicolored_count != static_cast<int>(w.midpoint_roots.size())) return false;

  std::vector<Rational> roots = w.midpoint_roots;
  roots.insert(roots.end(), w.filler_roots.begin(), w.filler_roots.end());
  std::sort(roots.begin(), roots.end());
  if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) return false;
  for (const Rational& r : roots) {
    if (w.evaluate(r) != Rational(0)) return false;
  }

  if (w.first_side_sign != 1 && w.first_side_sign != -1) return false;
  for (int label : first) {
    const Point p = moment_point(parameters[static_cast<std::size_t>(label - 1)], d);
    if (w.evaluate(p).sign() != w.first_side_sign) return false;
  }
  for (int label : second) {
    const Point p = moment_point(parameters[static_cast<std::size_t>(label - 1)], d);
    if (w.evaluate(p).sign() != -w.first_side_sign) return false;
  }
  return true;
}

}  // namespace linkparity

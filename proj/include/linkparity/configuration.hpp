#ifndef LINKPARITY_CONFIGURATION_HPP
#define LINKPARITY_CONFIGURATION_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linkparity/index_subset.hpp"
#include "linkparity/linalg.hpp"
#include "linkparity/rational.hpp"

namespace linkparity {

using Point = VectorQ;

struct MomentCurveProvenance {
  std::vector<Rational> parameters;
  friend bool operator==(const MomentCurveProvenance&, const MomentCurveProvenance&) = default;
};

struct ExplicitProvenance {
  friend bool operator==(const ExplicitProvenance&, const ExplicitProvenance&) = default;
};

struct RandomSampleProvenance {
  std::uint64_t seed = 0;
  std::int64_t bound = 0;
  std::uint64_t attempts = 0;
  friend bool operator==(const RandomSampleProvenance&, const RandomSampleProvenance&) = default;
};

using Provenance = std::variant<ExplicitProvenance, MomentCurveProvenance, RandomSampleProvenance>;

/// Labeled points 1..n in R^d, stored as the columns of a d x n matrix.
class Configuration {
 public:
  Configuration(MatrixQ points, Provenance provenance = ExplicitProvenance{});

  Eigen::Index dimension() const { return points_.rows(); }
  Eigen::Index size() const { return points_.cols(); }

  /// Point with label `label` (1-based).
  auto point(int label) const { return points_.col(label - 1); }
  const MatrixQ& points() const { return points_; }
  const Provenance& provenance() const { return provenance_; }

  /// Parameters t_1 < ... < t_n when the points lie on the moment curve.
  const std::vector<Rational>* moment_parameters() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.points_ == b.points_ && a.provenance_ == b.provenance_;
  }

 private:
  MatrixQ points_;
  Provenance provenance_;
};

/// m(t) = (t, t^2, ..., t^d).
Point moment_point(const Rational& t, int d);

/// Points m(t_1), ..., m(t_n). Parameters default to 1, 2, ..., n and must be
/// strictly increasing when given.
Configuration moment_curve(int n, int d, std::optional<std::vector<Rational>> parameters = {});

struct GeneralPositionReport {
  bool general = true;
  /// Fewer than d + 1 points: nothing to check.
  bool vacuous = false;
  /// First (colex) (d+1)-subset whose points are affinely dependent.
  std::optional<IndexSubset> witness;
};

/// Checks every (d+1)-subset: the determinant of the homogenized
/// coordinates [p | 1] must be nonzero.
GeneralPositionReport certify_general_position(const Configuration& c);
bool is_general_position(const Configuration& c);

/// Whether the points of `labels` are affinely independent.
bool affinely_independent(const Configuration& c, const IndexSubset& labels);

struct SamplingOptions {
  std::uint64_t max_attempts = 1000;
};

/// Integer points uniform in [-bound, bound]^d, resampled as a whole until in
/// general position. Coordinate j of point i on attempt a is drawn from the
/// SplitMix64 stream keyed by (seed, (a * n + i) * d + j); see random.hpp.
Configuration sample_random_configuration(int n, int d, std::uint64_t seed, std::int64_t bound,
                                          SamplingOptions options = {});

// Point-set text format:
//   d n
//   x_1 ... x_d        (n lines, rationals as "p/q" or "p")
//   # provenance: ...  (optional)
void write_point_set(std::ostream& os, const Configuration& c);
std::string format_point_set(const Configuration& c);
Configuration read_point_set(std::istream& is);
Configuration parse_point_set(const std::string& text);
Configuration load_point_set(const std::string& path);

std::string describe(const Provenance& provenance);

}  // namespace linkparity

#endif  // LINKPARITY_CONFIGURATION_HPP

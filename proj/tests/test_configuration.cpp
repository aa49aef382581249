#include <random>
#include <sstream>

#include <doctest.h>

#include "linkparity/configuration.hpp"
#include "linkparity/errors.hpp"
#include "linkparity/random.hpp"

using namespace linkparity;

namespace {

Configuration from_rows(const std::vector<std::vector<long>>& rows) {
  const auto d = static_cast<Eigen::Index>(rows.front().size());
  MatrixQ m(d, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(j, static_cast<Eigen::Index>(i)) = Rational(rows[i][j]);
  }
  return Configuration(m);
}

}  // namespace

TEST_CASE("moment curve points") {
  const Configuration c = moment_curve(5, 2);
  CHECK(c.dimension() == 2);
  CHECK(c.size() == 5);
  for (int i = 1; i <= 5; ++i) {
    CHECK(c.point(i)(0) == Rational(i));
    CHECK(c.point(i)(1) == Rational(i * i));
  }
  REQUIRE(c.moment_parameters());
  CHECK(c.moment_parameters()->size() == 5);

  const Configuration one = moment_curve(1, 3, std::vector<Rational>{Rational(2)});
  CHECK(one.point(1) == moment_point(Rational(2), 3));
  CHECK(one.point(1)(2) == Rational(8));

  const Configuration halves =
      moment_curve(2, 2, std::vector<Rational>{Rational::parse("-1/2"), Rational::parse("1/3")});
  CHECK(halves.point(1)(1) == Rational::parse("1/4"));

  CHECK_THROWS_AS(moment_curve(2, 2, std::vector<Rational>{Rational(3), Rational(3)}), ContractError);
  CHECK_THROWS_AS(moment_curve(2, 2, std::vector<Rational>{Rational(3), Rational(1)}), ContractError);
  CHECK_THROWS_AS(moment_curve(3, 2, std::vector<Rational>{Rational(1)}), ContractError);
  CHECK_THROWS_AS(moment_curve(0, 2), ContractError);
}

TEST_CASE("moment curve provenance must match points") {
  MatrixQ m(2, 1);
  m << Rational(2), Rational(5);
  CHECK_THROWS_AS(Configuration(m, MomentCurveProvenance{{Rational(2)}}), ContractError);
}

TEST_CASE("general position examples") {
  CHECK(is_general_position(moment_curve(5, 2)));
  CHECK(is_general_position(moment_curve(7, 4)));
  for (int k = 1; k <= 4; ++k) CHECK(is_general_position(moment_curve(2 * k + 3, 2 * k)));

  const Configuration collinear = from_rows({{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}});
  const GeneralPositionReport report = certify_general_position(collinear);
  CHECK_FALSE(report.general);
  REQUIRE(report.witness);
  CHECK(*report.witness == IndexSubset{1, 2, 3});

  const GeneralPositionReport vacuous = certify_general_position(from_rows({{0, 0}, {0, 0}}));
  CHECK(vacuous.general);
  CHECK(vacuous.vacuous);
}

TEST_CASE("moment curve is in general position for n <= 15, d <= 10") {
  for (int d = 1; d <= 10; ++d) {
    for (int n = d + 1; n <= 15; n += (d > 6 ? 7 : 2)) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(is_general_position(moment_curve(n, d)));
    }
  }
}

TEST_CASE("affine independence of small subsets") {
  const Configuration c = from_rows({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}});
  CHECK(affinely_independent(c, {1, 2}));
  CHECK(affinely_independent(c, {1, 2, 4}));
  CHECK_FALSE(affinely_independent(c, {1, 2, 3}));
}

TEST_CASE("general position is invariant under relabeling and affine maps") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    const int n = d + 3;
    MatrixQ m(d, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < d; ++j) m(j, i) = Rational(static_cast<long>(rng() % 7) - 3);
    }
    const bool gp = is_general_position(Configuration(m));

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    MatrixQ permuted(d, n);
    for (int i = 0; i < n; ++i) permuted.col(i) = m.col(perm[static_cast<std::size_t>(i)]);
    CHECK(is_general_position(Configuration(permuted)) == gp);

    VectorQ shift(d);
    for (int j = 0; j < d; ++j) shift(j) = Rational(static_cast<long>(rng() % 11) - 5);
    MatrixQ moved = m.colwise() + shift;
    CHECK(is_general_position(Configuration(moved)) == gp);

    const Rational scale(Integer(static_cast<long>(rng() % 9) + 1), Integer(7));
    MatrixQ scaled = m * scale;
    CHECK(is_general_position(Configuration(scaled)) == gp);
  }
}

TEST_CASE("splitmix64 reference values") {
  // First outputs for seed 0 from the reference implementation.
  SplitMix64 g(0);
  CHECK(g.next() == 0xE220A8397B1DCDAFULL);
  CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(g.next() == 0x06C45D188009454FULL);

  SplitMix64 u(123);
  for (int i = 0; i < 1000; ++i) {
    const auto v = u.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("random sampling is deterministic and in general position") {
  const Configuration a = sample_random_configuration(5, 2, 0, 100);
  const Configuration b = sample_random_configuration(5, 2, 0, 100);
  CHECK(a == b);
  CHECK(format_point_set(a) == format_point_set(b));
  CHECK(is_general_position(a));
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < a.dimension(); ++j) {
      CHECK(a.points()(j, i).is_integer());
      CHECK(abs(a.points()(j, i)) <= Rational(100));
    }
  }
  CHECK_FALSE(a == sample_random_configuration(5, 2, 1, 100));

  const Configuration c = sample_random_configuration(7, 4, 1, 1000);
  CHECK(is_general_position(c));
  const auto& prov = std::get<RandomSampleProvenance>(c.provenance());
  CHECK(prov.seed == 1);
  CHECK(prov.attempts >= 1);
}

TEST_CASE("sampling reports an exhausted budget") {
  // At most 6 points of {-1,0,1}^2 avoid three in a line.
  CHECK_THROWS_AS(sample_random_configuration(7, 2, 3, 1), SamplingError);
  // Four distinct integers do not fit in [-1, 1].
  CHECK_THROWS_AS(sample_random_configuration(4, 1, 0, 1), SamplingError);
  CHECK_THROWS_AS(sample_random_configuration(5, 2, 0, 100, SamplingOptions{0}), SamplingError);
  CHECK_THROWS_AS(sample_random_configuration(2, 2, 0, 100), ContractError);
}

TEST_CASE("point-set file round trip is bit exact") {
  const std::vector<Configuration> configs = {
      moment_curve(5, 2),
      moment_curve(3, 3, std::vector<Rational>{Rational::parse("-3/2"), Rational(0),
                                               Rational::parse("7/5")}),
      sample_random_configuration(7, 4, 9, 1000),
      from_rows({{0, 0}, {2, 0}, {3, 2}, {1, 3}, {-1, 2}}),
  };
  for (const Configuration& c : configs) {
    const std::string text = format_point_set(c);
    const Configuration back = parse_point_set(text);
    CHECK(back == c);
    CHECK(format_point_set(back) == text);
  }
  CHECK(format_point_set(moment_curve(2, 2)) == "2 2\n1 1\n2 4\n# provenance: moment-curve 1 2\n");
}

TEST_CASE("point-set parse errors") {
  CHECK_THROWS_AS(parse_point_set(""), ParseError);
  CHECK_THROWS_AS(parse_point_set("2 2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("2 1\n1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("2 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("2 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("2 1 5\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("2 1\n1 2\n# provenance: moment-curve 1\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("2 1\n1 2\n# provenance: sorcery\n"), ParseError);
  CHECK_THROWS_AS(load_point_set("/nonexistent/file.pts"), ParseError);

  const Configuration c = parse_point_set("# comment\n2 2\r\n1/2 -3\n\n4 5/6\n");
  CHECK(c.point(1)(0) == Rational::parse("1/2"));
  CHECK(c.point(2)(1) == Rational::parse("5/6"));
}

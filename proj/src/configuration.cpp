#include "linkparity/configuration.hpp"

#include <fstream>
#include <sstream>

#include "linkparity/errors.hpp"
#include "linkparity/random.hpp"

namespace linkparity {

Configuration::Configuration(MatrixQ points, Provenance provenance)
    : points_(std::move(points)), provenance_(std::move(provenance)) {
  if (const auto* mc = std::get_if<MomentCurveProvenance>(&provenance_)) {
    if (static_cast<Eigen::Index>(mc->parameters.size()) != points_.cols()) {
      throw ContractError("moment-curve parameter count does not match point count");
    }
    for (Eigen::Index i = 0; i < points_.cols(); ++i) {
      if (points_.col(i) != moment_point(mc->parameters[i], static_cast<int>(points_.rows()))) {
        throw ContractError("point " + std::to_string(i + 1) + " is not m(t_" +
                            std::to_string(i + 1) + ")");
      }
    }
  }
}

const std::vector<Rational>* Configuration::moment_parameters() const {
  if (const auto* mc = std::get_if<MomentCurveProvenance>(&provenance_)) return &mc->parameters;
  return nullptr;
}

Point moment_point(const Rational& t, int d) {
  Point p(d);
  Rational power = 1;
  for (int i = 0; i < d; ++i) {
    power *= t;
    p(i) = power;
  }
  return p;
}

Configuration moment_curve(int n, int d, std::optional<std::vector<Rational>> parameters) {
  if (n < 1 || d < 1) throw ContractError("moment_curve needs n >= 1 and d >= 1");
  std::vector<Rational> t;
  if (parameters) {
    t = std::move(*parameters);
    if (static_cast<int>(t.size()) != n) {
      throw ContractError("expected " + std::to_string(n) + " moment-curve parameters");
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!(t[i - 1] < t[i])) throw ContractError("moment-curve parameters must be strictly increasing");
    }
  } else {
    for (int i = 1; i <= n; ++i) t.emplace_back(i);
  }
  MatrixQ points(d, n);
  for (int i = 0; i < n; ++i) points.col(i) = moment_point(t[i], d);
  return Configuration(std::move(points), MomentCurveProvenance{std::move(t)});
}

bool affinely_independent(const Configuration& c, const IndexSubset& labels) {
  const Eigen::Index d = c.dimension();
  const auto m = static_cast<Eigen::Index>(labels.size());
  if (m > d + 1) return false;
  MatrixQ h(d + 1, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    h.col(j).head(d) = c.point(labels[j]);
    h(d, j) = Rational(1);
  }
  if (m == d + 1) return determinant(h) != Rational(0);
  // Rank test on a smaller set: the Gram matrix H^T H is nonsingular iff H
  // has full column rank.
  const MatrixQ gram = h.transpose() * h;
  return determinant(gram) != Rational(0);
}

GeneralPositionReport certify_general_position(const Configuration& c) {
  GeneralPositionReport report;
  const int d = static_cast<int>(c.dimension());
  const int n = static_cast<int>(c.size());
  if (n < d + 1) {
    report.vacuous = true;
    return report;
  }
  for_each_subset_colex(n, d + 1, [&](const IndexSubset& s) {
    if (!affinely_independent(c, s)) {
      report.general = false;
      report.witness = s;
      return false;
    }
    return true;
  });
  return report;
}

bool is_general_position(const Configuration& c) { return certify_general_position(c).general; }

Configuration sample_random_configuration(int n, int d, std::uint64_t seed, std::int64_t bound,
                                          SamplingOptions options) {
  if (d < 1 || n < d + 1) throw ContractError("sampling needs d >= 1 and n >= d + 1");
  if (bound < 1) throw ContractError("sampling bound must be positive");
  const auto un = static_cast<std::uint64_t>(n);
  const auto ud = static_cast<std::uint64_t>(d);
  for (std::uint64_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    MatrixQ points(d, n);
    for (std::uint64_t i = 0; i < un; ++i) {
      for (std::uint64_t j = 0; j < ud; ++j) {
        SplitMix64 rng = SplitMix64::stream(seed, (attempt * un + i) * ud + j);
        points(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
            Rational(rng.uniform(-bound, bound));
      }
    }
    Configuration c(std::move(points), RandomSampleProvenance{seed, bound, attempt + 1});
    if (is_general_position(c)) return c;
  }
  throw SamplingError("no general-position sample within " + std::to_string(options.max_attempts) +
                      " attempts (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                      ", bound=" + std::to_string(bound) + ")");
}

std::string describe(const Provenance& provenance) {
  struct Visitor {
    std::string operator()(const ExplicitProvenance&) const { return "explicit"; }
    std::string operator()(const MomentCurveProvenance& mc) const {
      std::string out = "moment-curve";
      for (const Rational& t : mc.parameters) out += " " + t.str();
      return out;
    }
    std::string operator()(const RandomSampleProvenance& r) const {
      return "random seed=" + std::to_string(r.seed) + " bound=" + std::to_string(r.bound) +
             " attempts=" + std::to_string(r.attempts);
    }
  };
  return std::visit(Visitor{}, provenance);
}

void write_point_set(std::ostream& os, const Configuration& c) {
  os << c.dimension() << ' ' << c.size() << '\n';
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    for (Eigen::Index j = 0; j < c.dimension(); ++j) {
      if (j) os << ' ';
      os << c.points()(j, i);
    }
    os << '\n';
  }
  if (!std::holds_alternative<ExplicitProvenance>(c.provenance())) {
    os << "# provenance: " << describe(c.provenance()) << '\n';
  }
}

std::string format_point_set(const Configuration& c) {
  std::ostringstream os;
  write_point_set(os, c);
  return os.str();
}

namespace {

std::uint64_t parse_unsigned_field(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) throw ParseError("expected '" + prefix + "' in provenance");
  try {
    std::size_t used = 0;
    const auto v = std::stoull(token.substr(prefix.size()), &used);
    if (used != token.size() - prefix.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("malformed provenance field '" + token + "'");
  }
}

Provenance parse_provenance(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  if (kind == "explicit") return ExplicitProvenance{};
  if (kind == "moment-curve") {
    MomentCurveProvenance mc;
    std::string token;
    while (in >> token) mc.parameters.push_back(Rational::parse(token));
    return mc;
  }
  if (kind == "random") {
    std::string seed, bound, attempts;
    if (!(in >> seed >> bound >> attempts)) throw ParseError("incomplete random provenance");
    RandomSampleProvenance r;
    r.seed = parse_unsigned_field(seed, "seed");
    r.bound = static_cast<std::int64_t>(parse_unsigned_field(bound, "bound"));
    r.attempts = parse_unsigned_field(attempts, "attempts");
    return r;
  }
  throw ParseError("unknown provenance '" + kind + "'");
}

}  // namespace

Configuration read_point_set(std::istream& is) {
  static const std::string kProvenanceTag = "# provenance:";
  std::string line;
  std::vector<std::string> rows;
  Provenance provenance = ExplicitProvenance{};
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(kProvenanceTag, 0) == 0) {
      provenance = parse_provenance(line.substr(kProvenanceTag.size()));
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw ParseError("empty point-set file");

  std::istringstream header(rows.front());
  long long d = 0;
  long long n = 0;
  std::string extra;
  if (!(header >> d >> n) || (header >> extra)) throw ParseError("header must be 'd n'");
  if (d < 1 || n < 0) throw ParseError("header needs d >= 1 and n >= 0");
  if (static_cast<long long>(rows.size()) - 1 != n) {
    throw ParseError("expected " + std::to_string(n) + " point lines, found " +
                     std::to_string(rows.size() - 1));
  }
  MatrixQ points(d, n);
  for (long long i = 0; i < n; ++i) {
    std::istringstream row(rows[static_cast<std::size_t>(i + 1)]);
    std::string token;
    long long j = 0;
    while (row >> token) {
      if (j >= d) throw ParseError("point " + std::to_string(i + 1) + " has too many coordinates");
      points(j++, i) = Rational::parse(token);
    }
    if (j != d) throw ParseError("point " + std::to_string(i + 1) + " has too few coordinates");
  }
  try {
    return Configuration(std::move(points), std::move(provenance));
  } catch (const ContractError& e) {
    throw ParseError(std::string("inconsistent provenance: ") + e.what());
  }
}

Configuration parse_point_set(const std::string& text) {
  std::istringstream in(text);
  return read_point_set(in);
}

Configuration load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point-set file '" + path + "'");
  return read_point_set(in);
}

}  // namespace linkparity

// linkparity command-line front end.
//
// Exit codes: 0 success, 1 runtime failure (sampling budget, write errors),
// 2 verification failure, 3 degenerate input, 64 usage or unreadable input.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "linkparity/combinatorics.hpp"
#include "linkparity/configuration.hpp"
#include "linkparity/errors.hpp"
#include "linkparity/intersection.hpp"
#include "linkparity/linking.hpp"
#include "linkparity/parallel.hpp"
#include "svg_plot.hpp"

namespace {

using namespace linkparity;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kRuntime = 1;
constexpr int kVerification = 2;
constexpr int kDegenerate = 3;
constexpr int kUsage = 64;

constexpr const char* kVersion = "0.1.0";

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string data = buffer.str();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Everything needed to rerun a command bit for bit.
struct RunManifest {
  std::string command;
  Json parameters = Json::object();
  std::vector<std::uint64_t> seeds{};
  std::vector<std::string> input_files{};
  unsigned workers = 1;
  double elapsed_ms = 0;

  void write(const std::string& report_path) const {
    Json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["seeds"] = seeds;
    j["tool_version"] = kVersion;
    Json hashes = Json::object();
    for (const std::string& f : input_files) hashes[f] = sha256_file(f);
    j["input_hashes"] = std::move(hashes);
    j["report_sha256"] = sha256_file(report_path);
    j["workers"] = workers;
    j["elapsed_ms"] = elapsed_ms;
    j["timestamp"] = utc_timestamp();
    std::ofstream out(report_path + ".manifest.json");
    out << j.dump(2) << '\n';
  }
};

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  int k = 0;
  std::string json;
  unsigned workers = 1;
};

int run_verify(const VerifyOptions& o) {
  if (o.k < 1) {
    std::cerr << "verify: k must be at least 1\n";
    return kUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    const CounterexampleVerification v = verify_counterexample(o.k, o.workers);
    std::cout << "m([" << 2 * o.k + 3 << "]) in R^" << 2 * o.k << ": general position certified\n";
    std::cout << "I\tn1\tn2\tn3\tn4\n";
    for (const CrossCheckReport& r : v.checks) {
      std::cout << r.subject.str() << '\t' << r.n1 << '\t' << r.n2 << '\t' << r.n3 << '\t'
                << *r.n4 << '\n';
    }
    std::cout << v.checks.size() << " subsets, all counts even, n1 = n2 = n3 = n4, linked pairs: "
              << v.link.total_linked << '\n';
    if (!o.json.empty()) {
      write_text_file(o.json, report_json(v.link, v.checks));
      RunManifest m{"verify", Json{{"k", o.k}}, {}, {}, o.workers, elapsed_since(start)};
      m.write(o.json);
    }
    return kOk;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    if (!o.json.empty()) write_text_file(o.json, e.dump());
    std::cerr << e.dump();
    return kVerification;
  }
}

// ---------------------------------------------------------------- parity

struct ParityOptions {
  std::string input;
  std::vector<int> random;  // n d
  std::uint64_t seed = 0;
  int trials = 1;
  std::int64_t bound = 1000;
  std::string json;
  unsigned workers = 1;
};

int run_parity(const ParityOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Configuration> configs;
  RunManifest manifest{"parity"};
  manifest.workers = o.workers;
  if (!o.input.empty()) {
    configs.push_back(load_point_set(o.input));
    manifest.input_files.push_back(o.input);
    manifest.parameters["input"] = o.input;
  } else {
    if (o.random.size() != 2 || o.trials < 1) {
      std::cerr << "parity: give --input FILE or --random N D with --trials >= 1\n";
      return kUsage;
    }
    manifest.parameters = Json{{"n", o.random[0]}, {"d", o.random[1]}, {"trials", o.trials},
                               {"seed", o.seed}, {"bound", o.bound}};
    for (int t = 0; t < o.trials; ++t) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(t);
      manifest.seeds.push_back(seed);
      configs.push_back(sample_random_configuration(o.random[0], o.random[1], seed, o.bound));
    }
  }

  bool all_even = true;
  Json reports = Json::array();
  for (const Configuration& c : configs) {
    try {
      const LinkReport r = total_linked_parity(c, o.workers);
      const PairSums sums = pair_sums(c, o.workers);
      const bool sums_ok = sums.ordered == 2 * sums.unordered;
      all_even = all_even && r.parity_ok && sums_ok;
      std::cout << describe(c.provenance()) << ": linked " << r.total_linked << " ("
                << (r.parity_ok ? "even" : "ODD") << "), exactly-one-point "
                << r.single_point.size() << ", ordered pair sum " << sums.ordered
                << " = 2 x " << sums.unordered << (sums_ok ? "" : " MISMATCH") << '\n';
      for (const IndexSubset& s : r.linked) {
        std::cout << "  linked: " << s.str() << " with " << s.complement(static_cast<int>(c.size())).str()
                  << '\n';
      }
      if (!o.json.empty()) reports.push_back(Json::parse(report_json(r, cross_checks(r))));
    } catch (const DegeneracyError& e) {
      std::cerr << "degenerate configuration: " << e.what() << '\n';
      if (!e.detail().empty()) std::cerr << "offending subset: " << e.detail() << '\n';
      return kDegenerate;
    }
  }
  if (!o.json.empty()) {
    write_text_file(o.json, reports.dump(2) + "\n");
    manifest.elapsed_ms = elapsed_since(start);
    manifest.write(o.json);
  }
  std::cout << configs.size() << " configuration(s): " << (all_even ? "all parities even" : "PARITY VIOLATION")
            << '\n';
  return all_even ? kOk : kVerification;
}

// ---------------------------------------------------------------- pair

struct PairOptions {
  std::string input;
  std::vector<int> random;
  std::uint64_t seed = 0;
  std::int64_t bound = 1000;
  bool all = false;
  unsigned workers = 1;
};

void print_intersecting_pair(const IntersectingPair& p) {
  std::cout << p.first.str() << " x " << p.second.str() << " meet at (";
  for (Eigen::Index i = 0; i < p.result.point->size(); ++i) {
    std::cout << (i ? ", " : "") << (*p.result.point)(i);
  }
  std::cout << "), lambda = [";
  for (Eigen::Index i = 0; i < p.result.coeffs_first.size(); ++i) {
    std::cout << (i ? ", " : "") << p.result.coeffs_first(i);
  }
  std::cout << "], mu = [";
  for (Eigen::Index i = 0; i < p.result.coeffs_second.size(); ++i) {
    std::cout << (i ? ", " : "") << p.result.coeffs_second(i);
  }
  std::cout << "]\n";
}

int run_pair(const PairOptions& o) {
  Configuration c = [&] {
    if (!o.input.empty()) return load_point_set(o.input);
    if (o.random.size() != 2) throw ContractError("give --input FILE or --random N D");
    return sample_random_configuration(o.random[0], o.random[1], o.seed, o.bound);
  }();
  try {
    if (o.all) {
      const auto pairs = find_all_intersecting_pairs(c, o.workers);
      for (const auto& p : pairs) print_intersecting_pair(p);
      std::cout << pairs.size() << " intersecting pair(s)\n";
      return pairs.empty() ? kVerification : kOk;
    }
    const auto p = find_intersecting_pair(c, o.workers);
    if (!p) {
      std::cout << "no intersecting pair found\n";
      return kVerification;
    }
    print_intersecting_pair(*p);
    return kOk;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate configuration: " << e.what() << '\n';
    return kDegenerate;
  }
}

// ---------------------------------------------------------------- alternation

struct AlternationOptions {
  int k = 0;
  std::string subset;
  int n = 0;
  std::string csv;
};

int run_alternation(const AlternationOptions& o) {
  std::vector<IndexSubset> subjects;
  int n = 0;
  if (o.k > 0) {
    n = 2 * o.k + 3;
    subjects = subsets_colex(n, o.k + 1);
  } else if (!o.subset.empty() && o.n > 0) {
    n = o.n;
    subjects.push_back(IndexSubset::parse(o.subset));
  } else {
    std::cerr << "alternation: give --k K or --subset I --n N\n";
    return kUsage;
  }

  std::ostringstream table;
  write_breakdown_csv_header(table);
  bool ok = true;
  for (const IndexSubset& s : subjects) {
    const AlternatingCountBreakdown b = alternating_count_closed_form(s, n);
    const std::uint64_t brute = alternating_count_bruteforce(s, n);
    write_breakdown_csv_row(table, b);
    if (b.count != brute || brute % 2 != 0) {
      ok = false;
      std::cerr << "mismatch for " << s.str() << ": closed form " << b.count << ", brute force "
                << brute << '\n';
    }
  }
  if (o.csv.empty()) {
    std::cout << table.str();
  } else {
    write_text_file(o.csv, table.str());
    std::cout << subjects.size() << " row(s) written to " << o.csv << '\n';
  }
  return ok ? kOk : kVerification;
}

// ---------------------------------------------------------------- witness

struct WitnessOptions {
  std::string p;
  std::string q;
  int d = 0;
  std::string params;
};

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].str();
  return out.empty() ? "-" : out;
}

int run_witness(const WitnessOptions& o) {
  const IndexSubset p = IndexSubset::parse(o.p);
  const IndexSubset q = IndexSubset::parse(o.q);
  if (p.empty() || q.empty()) throw ContractError("P and Q must be nonempty");
  if (!p.disjoint(q)) throw ContractError("P and Q overlap");
  if (p.size() != q.size()) throw ContractError("P and Q must have equal size");
  if (o.d != 2 * static_cast<int>(p.size()) - 2) {
    throw ContractError("need d = 2|P| - 2 = " + std::to_string(2 * p.size() - 2));
  }
  const int n = std::max(p.back(), q.back());
  std::vector<Rational> t;
  if (o.params.empty()) {
    for (int i = 1; i <= n; ++i) t.emplace_back(i);
  } else {
    std::stringstream ss(o.params);
    std::string tok;
    while (std::getline(ss, tok, ',')) t.push_back(Rational::parse(tok));
  }
  const Configuration c = moment_curve(static_cast<int>(t.size()), o.d, t);

  std::cout << "P = " << p.str() << ", Q = " << q.str() << ", d = " << o.d << '\n';
  if (alternates(p, q)) {
    const IntersectionResult r = intersect_complementary(c, p, q);
    std::cout << "P and Q alternate: conv m(P) and conv m(Q) intersect\n";
    std::cout << "point:";
    for (Eigen::Index i = 0; i < r.point->size(); ++i) std::cout << ' ' << (*r.point)(i);
    std::cout << "\nlambda:";
    for (Eigen::Index i = 0; i < r.coeffs_first.size(); ++i) std::cout << ' ' << r.coeffs_first(i);
    std::cout << "\nmu:";
    for (Eigen::Index i = 0; i < r.coeffs_second.size(); ++i) std::cout << ' ' << r.coeffs_second(i);
    std::cout << '\n';
    return r.intersects ? kOk : kVerification;
  }

  const HyperplaneWitness w = separating_hyperplane_moment(p, q, t, o.d);
  const bool verified = check_witness(w, p, q, t, o.d);
  const bool disjoint = !intersect_complementary(c, p, q).intersects;
  std::cout << "P and Q do not alternate: separating hyperplane\n";
  std::cout << "bicolored gaps t = " << w.bicolored_count << '\n';
  std::cout << "midpoint roots: " << join(w.midpoint_roots) << '\n';
  std::cout << "filler roots: " << join(w.filler_roots) << '\n';
  std::cout << "coefficients n_1..n_d:";
  for (Eigen::Index i = 0; i < w.coefficients.size(); ++i) std::cout << ' ' << w.coefficients(i);
  std::cout << "\noffset: " << w.offset << '\n';
  for (const auto* side : {&p, &q}) {
    for (int label : *side) {
      const Rational value = w.evaluate(t[static_cast<std::size_t>(label - 1)]);
      std::cout << "  p(t_" << label << ") = " << value << (side == &p ? "  [P]" : "  [Q]") << '\n';
    }
  }
  std::cout << "signs " << (verified ? "verified" : "NOT verified") << ", hull solve reports "
            << (disjoint ? "disjoint" : "INTERSECTING") << '\n';
  return verified && disjoint ? kOk : kVerification;
}

// ---------------------------------------------------------------- points

int run_sample(int n, int d, std::uint64_t seed, std::int64_t bound, const std::string& out) {
  const Configuration c = sample_random_configuration(n, d, seed, bound);
  if (out.empty()) {
    write_point_set(std::cout, c);
  } else {
    write_text_file(out, format_point_set(c));
  }
  return kOk;
}

int run_moment(int n, int d, const std::string& out) {
  const Configuration c = moment_curve(n, d);
  if (out.empty()) {
    write_point_set(std::cout, c);
  } else {
    write_text_file(out, format_point_set(c));
  }
  return kOk;
}

int run_plot(const std::string& input, const std::string& out) {
  const Configuration c = input.empty() ? moment_curve(5, 2) : load_point_set(input);
  try {
    const LinkReport r = total_linked_parity(c);
    write_text_file(out, render_planar_svg(r));
    std::cout << "wrote " << out << " (" << r.total_linked << " linked pair(s))\n";
    return kOk;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate configuration: " << e.what() << '\n';
    return kDegenerate;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact linking-parity checks for point configurations in R^2k"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  const unsigned env_workers = default_workers();

  VerifyOptions verify;
  verify.workers = env_workers;
  auto* verify_cmd = app.add_subcommand("verify", "Check that m([2k+3]) in R^2k has no linked pair");
  verify_cmd->add_option("-k", verify.k, "k >= 1")->required();
  verify_cmd->add_option("--json", verify.json, "Write the JSON report here");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads (default $LINKPARITY_WORKERS or 1)")
      ->check(CLI::PositiveNumber);

  ParityOptions parity;
  parity.workers = env_workers;
  auto* parity_cmd = app.add_subcommand("parity", "Count linked pairs and check the total is even");
  auto* parity_input = parity_cmd->add_option("--input", parity.input, "Point-set file");
  auto* parity_random =
      parity_cmd->add_option("--random", parity.random, "Sample N points in R^D")->expected(2);
  parity_input->excludes(parity_random);
  parity_cmd->add_option("--trials", parity.trials, "Number of random configurations");
  parity_cmd->add_option("--seed", parity.seed, "First seed; trial i uses seed + i");
  parity_cmd->add_option("--bound", parity.bound, "Coordinate bound for sampling")->check(CLI::PositiveNumber);
  parity_cmd->add_option("--json", parity.json, "Write JSON reports here");
  parity_cmd->add_option("--workers", parity.workers, "Worker threads")->check(CLI::PositiveNumber);

  PairOptions pair;
  pair.workers = env_workers;
  auto* pair_cmd = app.add_subcommand("pair", "Find disjoint (k+1)-tuples with intersecting hulls");
  auto* pair_input = pair_cmd->add_option("--input", pair.input, "Point-set file");
  auto* pair_random = pair_cmd->add_option("--random", pair.random, "Sample N points in R^D")->expected(2);
  pair_input->excludes(pair_random);
  pair_cmd->add_option("--seed", pair.seed, "Sampling seed");
  pair_cmd->add_option("--bound", pair.bound, "Coordinate bound")->check(CLI::PositiveNumber);
  pair_cmd->add_flag("--all", pair.all, "List every intersecting pair");
  pair_cmd->add_option("--workers", pair.workers, "Worker threads")->check(CLI::PositiveNumber);

  AlternationOptions alternation;
  auto* alternation_cmd =
      app.add_subcommand("alternation", "Tabulate alternating counts, closed form vs brute force");
  alternation_cmd->add_option("--k", alternation.k, "All I in ([2k+3] choose k+1)");
  alternation_cmd->add_option("--subset", alternation.subset, "Single subset, e.g. 1,3");
  alternation_cmd->add_option("--n", alternation.n, "Universe size for --subset");
  alternation_cmd->add_option("--csv", alternation.csv, "Write the table here instead of stdout");

  WitnessOptions witness;
  auto* witness_cmd =
      app.add_subcommand("witness", "Separating hyperplane or intersection point for m(P), m(Q)");
  witness_cmd->add_option("--P", witness.p, "First subset, e.g. 1,2")->required();
  witness_cmd->add_option("--Q", witness.q, "Second subset, e.g. 3,4")->required();
  witness_cmd->add_option("--d", witness.d, "Ambient dimension")->required();
  witness_cmd->add_option("--params", witness.params, "Moment-curve parameters t_1,...,t_n");

  int sample_n = 0, sample_d = 0;
  std::uint64_t sample_seed = 0;
  std::int64_t sample_bound = 1000;
  std::string sample_out;
  auto* sample_cmd = app.add_subcommand("sample", "Write a random general-position point set");
  sample_cmd->add_option("n", sample_n, "Number of points")->required();
  sample_cmd->add_option("d", sample_d, "Dimension")->required();
  sample_cmd->add_option("--seed", sample_seed, "Seed");
  sample_cmd->add_option("--bound", sample_bound, "Coordinate bound")->check(CLI::PositiveNumber);
  sample_cmd->add_option("-o,--output", sample_out, "Output file (default stdout)");

  int moment_n = 0, moment_d = 0;
  std::string moment_out;
  auto* moment_cmd = app.add_subcommand("moment", "Write m([n]) in R^d as a point set");
  moment_cmd->add_option("n", moment_n, "Number of points")->required();
  moment_cmd->add_option("d", moment_d, "Dimension")->required();
  moment_cmd->add_option("-o,--output", moment_out, "Output file (default stdout)");

  std::string plot_input, plot_out = "linking.svg";
  auto* plot_cmd = app.add_subcommand("plot", "SVG of a planar 5-point configuration");
  plot_cmd->add_option("--input", plot_input, "Point-set file (default m([5]) in R^2)");
  plot_cmd->add_option("-o,--output", plot_out, "SVG file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify_cmd) return run_verify(verify);
    if (*parity_cmd) return run_parity(parity);
    if (*pair_cmd) return run_pair(pair);
    if (*alternation_cmd) return run_alternation(alternation);
    if (*witness_cmd) return run_witness(witness);
    if (*sample_cmd) return run_sample(sample_n, sample_d, sample_seed, sample_bound, sample_out);
    if (*moment_cmd) return run_moment(moment_n, moment_d, moment_out);
    if (*plot_cmd) return run_plot(plot_input, plot_out);
  } catch (const ContractError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const linkparity::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate input: " << e.what() << '\n';
    return kDegenerate;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n' << e.dump();
    return kVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}

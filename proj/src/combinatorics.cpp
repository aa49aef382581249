#include "linkparity/combinatorics.hpp"

#include <ostream>
#include <stdexcept>

#include "linkparity/errors.hpp"

namespace linkparity {

bool alternates(const IndexSubset& p, const IndexSubset& q) {
  if (p.size() != q.size() || p.empty()) {
    throw ContractError("alternation needs nonempty subsets of equal size");
  }
  if (!p.disjoint(q)) throw ContractError("subsets " + p.str() + " and " + q.str() + " overlap");
  // Either p_1 < q_1 < p_2 < q_2 < ... or q_1 < p_1 < q_2 < p_2 < ...
  const IndexSubset& lo = p.front() < q.front() ? p : q;
  const IndexSubset& hi = p.front() < q.front() ? q : p;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] < hi[i])) return false;
    if (i + 1 < lo.size() && !(hi[i] < lo[i + 1])) return false;
  }
  return true;
}

std::uint64_t alternating_count_bruteforce(const IndexSubset& subject, int n) {
  const int s = static_cast<int>(subject.size());
  if (s == 0 || !subject.within(n)) throw ContractError("subject must be a nonempty subset of [n]");
  if (s > n - s) throw ContractError("|I| exceeds |[n] \\ I|");
  std::uint64_t count = 0;
  for (const IndexSubset& j : subsets_colex(subject.complement(n).labels(), s)) {
    if (alternates(subject, j)) ++count;
  }
  return count;
}

std::string case_label(AlternationCase c) {
  switch (c) {
    case AlternationCase::HasAdjacent: return "adjacent";
    case AlternationCase::BothEnds: return "i";
    case AlternationCase::LeftEndOnly: return "ii";
    case AlternationCase::RightEndOnly: return "iii";
    case AlternationCase::NeitherEnd: return "iv";
  }
  return "?";
}

namespace {

std::vector<int> complement_runs(const IndexSubset& subject, int n) {
  std::vector<int> runs;
  int current = 0;
  for (int label = 1; label <= n; ++label) {
    if (subject.contains(label)) {
      if (current) runs.push_back(current);
      current = 0;
    } else {
      ++current;
    }
  }
  if (current) runs.push_back(current);
  return runs;
}

}  // namespace

AlternatingCountBreakdown alternating_count_closed_form(const IndexSubset& subject, int n) {
  if (n < 5 || n % 2 == 0) throw ContractError("closed form needs n = 2k + 3 with k >= 1");
  const int k = (n - 3) / 2;
  if (static_cast<int>(subject.size()) != k + 1 || !subject.within(n)) {
    throw ContractError("closed form needs I in ([n] choose " + std::to_string(k + 1) + ")");
  }

  AlternatingCountBreakdown b;
  b.subject = subject;
  b.universe_size = n;
  for (std::size_t i = 1; i < subject.size(); ++i) {
    if (subject[i] == subject[i - 1] + 1) {
      b.case_tag = AlternationCase::HasAdjacent;
      b.count = 0;
      return b;
    }
  }

  const bool left = subject.contains(1);
  const bool right = subject.contains(n);
  if (left && right) {
    b.case_tag = AlternationCase::BothEnds;
    b.count = 0;
  } else if (left || right) {
    b.case_tag = left ? AlternationCase::LeftEndOnly : AlternationCase::RightEndOnly;
    b.block_sizes = complement_runs(subject, n);
    std::uint64_t product = 1;
    int twos = 0;
    for (int size : b.block_sizes) {
      product *= static_cast<std::uint64_t>(size);
      if (size == 2) ++twos;
    }
    if (static_cast<int>(b.block_sizes.size()) != k + 1 || twos != 1 || product != 2) {
      throw std::logic_error("block decomposition of " + subject.str() + " is not 1...2...1");
    }
    b.count = product;
  } else {
    b.case_tag = AlternationCase::NeitherEnd;
    for (int i = 0; i <= k; ++i) {
      if (subject[static_cast<std::size_t>(i)] != 2 * i + 2) {
        throw std::logic_error(subject.str() + " avoids both ends but is not {2,4,...}");
      }
    }
    b.count = 2;
  }
  return b;
}

std::vector<std::pair<IndexSubset, IndexSubset>> enumerate_disjoint_pairs(int n, int s) {
  if (s < 1 || 2 * s > n) throw ContractError("disjoint pairs need 1 <= s and 2s <= n");
  const std::vector<IndexSubset> all = subsets_colex(n, s);
  std::vector<std::pair<IndexSubset, IndexSubset>> pairs;
  pairs.reserve(binomial(n, s) * binomial(n - s, s) / 2);
  for (const IndexSubset& i : all) {
    for (const IndexSubset& j : all) {
      if (j.front() > i.front() && i.disjoint(j)) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

void write_breakdown_csv_header(std::ostream& os) { os << "I,case,block_sizes,count\n"; }

void write_breakdown_csv_row(std::ostream& os, const AlternatingCountBreakdown& b) {
  for (std::size_t i = 0; i < b.subject.size(); ++i) os << (i ? " " : "") << b.subject[i];
  os << ',' << case_label(b.case_tag) << ',';
  for (std::size_t i = 0; i < b.block_sizes.size(); ++i) os << (i ? " " : "") << b.block_sizes[i];
  os << ',' << b.count << '\n';
}

}  // namespace linkparity

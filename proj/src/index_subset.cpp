#include "linkparity/index_subset.hpp"

#include <algorithm>
#include <cctype>

#include "linkparity/errors.hpp"

namespace linkparity {

IndexSubset::IndexSubset(std::vector<int> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 1) throw ContractError("subset labels start at 1");
    if (i > 0 && labels_[i - 1] >= labels_[i]) {
      throw ContractError("subset labels must be strictly increasing");
    }
  }
}

IndexSubset IndexSubset::parse(std::string_view text) {
  std::vector<int> labels;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw ParseError("");
      labels.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("malformed subset label '" + token + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError("duplicate label in subset '" + std::string(text) + "'");
  }
  try {
    return IndexSubset(std::move(sorted));
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
}

bool IndexSubset::contains(int label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool IndexSubset::disjoint(const IndexSubset& other) const {
  auto a = labels_.begin();
  auto b = other.labels_.begin();
  while (a != labels_.end() && b != other.labels_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

IndexSubset IndexSubset::complement(int n) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::max(0, n)));
  for (int label = 1; label <= n; ++label) {
    if (!contains(label)) out.push_back(label);
  }
  return IndexSubset(std::move(out));
}

IndexSubset IndexSubset::united(const IndexSubset& other) const {
  std::vector<int> out;
  std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                 std::back_inserter(out));
  return IndexSubset(std::move(out));
}

std::string IndexSubset::csv() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels_[i]);
  }
  return out;
}

std::string IndexSubset::str() const { return "{" + csv() + "}"; }

bool colex_less(const IndexSubset& a, const IndexSubset& b) {
  return std::lexicographical_compare(a.labels().rbegin(), a.labels().rend(), b.labels().rbegin(),
                                      b.labels().rend());
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace {

// Colex successor of a k-combination of {0..m-1}. Returns false after the
// last combination.
bool next_colex(std::vector<int>& c, int m) {
  const int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i) {
    const int limit = (i + 1 < k) ? c[i + 1] : m;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (int j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<IndexSubset> subsets_colex(const std::vector<int>& universe, int k) {
  std::vector<IndexSubset> out;
  const int m = static_cast<int>(universe.size());
  if (k < 0 || k > m) return out;
  out.reserve(binomial(m, k));
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = i;
  do {
    std::vector<int> labels(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) labels[i] = universe[c[i]];
    out.emplace_back(std::move(labels));
  } while (next_colex(c, m));
  return out;
}

std::vector<IndexSubset> subsets_colex(int n, int k) {
  std::vector<int> universe(static_cast<std::size_t>(std::max(0, n)));
  for (int i = 0; i < n; ++i) universe[i] = i + 1;
  return subsets_colex(universe, k);
}

void for_each_subset_colex(int n, int k, const std::function<bool(const IndexSubset&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = i;
  do {
    std::vector<int> labels(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) labels[i] = c[i] + 1;
    if (!visit(IndexSubset(std::move(labels)))) return;
  } while (next_colex(c, n));
}

}  // namespace linkparity

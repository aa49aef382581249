#ifndef LINKPARITY_INDEX_SUBSET_HPP
#define LINKPARITY_INDEX_SUBSET_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace linkparity {

/// Strictly increasing set of 1-based labels.
class IndexSubset {
 public:
  IndexSubset() = default;
  IndexSubset(std::initializer_list<int> labels) : IndexSubset(std::vector<int>(labels)) {}
  explicit IndexSubset(std::vector<int> labels);

  /// Accepts "1,3,5" (spaces and surrounding braces are ignored).
  static IndexSubset parse(std::string_view text);

  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  int front() const { return labels_.front(); }
  int back() const { return labels_.back(); }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }
  int operator[](std::size_t i) const { return labels_[i]; }

  bool contains(int label) const;
  bool disjoint(const IndexSubset& other) const;
  bool within(int n) const { return labels_.empty() || (labels_.front() >= 1 && labels_.back() <= n); }

  /// Labels of [n] not in this subset.
  IndexSubset complement(int n) const;
  IndexSubset united(const IndexSubset& other) const;

  /// "{1,3,5}"
  std::string str() const;
  /// "1,3,5"
  std::string csv() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

 private:
  std::vector<int> labels_;
};

/// Colexicographic comparison: subsets compared by their largest differing
/// element.
bool colex_less(const IndexSubset& a, const IndexSubset& b);

std::uint64_t binomial(int n, int k);

/// All k-subsets of `universe` (given as a sorted label list) in colex order.
std::vector<IndexSubset> subsets_colex(const std::vector<int>& universe, int k);
std::vector<IndexSubset> subsets_colex(int n, int k);

/// Visits the k-subsets of [n] in colex order without materializing them.
/// The visitor returns false to stop early.
void for_each_subset_colex(int n, int k, const std::function<bool(const IndexSubset&)>& visit);

}  // namespace linkparity

#endif  // LINKPARITY_INDEX_SUBSET_HPP

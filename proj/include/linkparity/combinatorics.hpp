#ifndef LINKPARITY_COMBINATORICS_HPP
#define LINKPARITY_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "linkparity/index_subset.hpp"

namespace linkparity {

/// Whether the merged order of P ∪ Q strictly alternates between the two.
/// Requires disjoint subsets of equal nonzero size.
bool alternates(const IndexSubset& p, const IndexSubset& q);

/// Number of J ⊆ [n] \ I with |J| = |I| alternating with I, by enumeration.
/// Accepts any |I| <= n - |I|.
std::uint64_t alternating_count_bruteforce(const IndexSubset& subject, int n);

enum class AlternationCase {
  HasAdjacent,   // I contains t and t + 1
  BothEnds,      // (i)   1, n in I
  LeftEndOnly,   // (ii)  1 in I, n not in I
  RightEndOnly,  // (iii) 1 not in I, n in I
  NeitherEnd     // (iv)  I = {2, 4, ..., n - 1}
};

std::string case_label(AlternationCase c);

struct AlternatingCountBreakdown {
  IndexSubset subject;
  int universe_size = 0;
  std::uint64_t count = 0;
  AlternationCase case_tag = AlternationCase::HasAdjacent;
  /// Sizes of the maximal runs of consecutive labels in [n] \ I, in
  /// increasing order. Filled for LeftEndOnly and RightEndOnly.
  std::vector<int> block_sizes;
};

/// Count for n = 2k + 3, |I| = k + 1 without enumeration. Cases without
/// an alternator give 0, the rest give 2; for the one-end cases the block
/// product is recomputed and must equal 2.
AlternatingCountBreakdown alternating_count_closed_form(const IndexSubset& subject, int n);

/// Unordered pairs {I, J} of disjoint s-subsets of [n], each exactly once.
///
/// Order: each pair is written with min(I ∪ J) in I; pairs are listed by the
/// colex rank of I, then of J.
std::vector<std::pair<IndexSubset, IndexSubset>> enumerate_disjoint_pairs(int n, int s);

/// CSV table "I,case,block_sizes,count" with space-separated lists.
void write_breakdown_csv_header(std::ostream& os);
void write_breakdown_csv_row(std::ostream& os, const AlternatingCountBreakdown& b);

}  // namespace linkparity

#endif  // LINKPARITY_COMBINATORICS_HPP

#include <set>
#include <sstream>

#include <doctest.h>

#include "linkparity/combinatorics.hpp"
#include "linkparity/errors.hpp"
#include "oracles.hpp"

using namespace linkparity;

TEST_CASE("index subsets") {
  const IndexSubset s = IndexSubset::parse("{3, 1,5}");
  CHECK(s == IndexSubset{1, 3, 5});
  CHECK(s.str() == "{1,3,5}");
  CHECK(s.csv() == "1,3,5");
  CHECK(s.complement(6) == IndexSubset{2, 4, 6});
  CHECK(s.disjoint(IndexSubset{2, 4}));
  CHECK_FALSE(s.disjoint(IndexSubset{2, 5}));
  CHECK(s.united(IndexSubset{2}) == IndexSubset{1, 2, 3, 5});
  CHECK_THROWS_AS(IndexSubset({2, 1}), ContractError);
  CHECK_THROWS_AS(IndexSubset({0, 1}), ContractError);
  CHECK_THROWS_AS(IndexSubset::parse("1,1"), ParseError);
  CHECK_THROWS_AS(IndexSubset::parse("1,x"), ParseError);
  CHECK_THROWS_AS(IndexSubset::parse("0,2"), ParseError);
}

TEST_CASE("colex enumeration") {
  const auto subsets = subsets_colex(4, 2);
  const std::vector<IndexSubset> expected = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(subsets == expected);
  for (std::size_t i = 1; i < subsets.size(); ++i) CHECK(colex_less(subsets[i - 1], subsets[i]));

  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto all = subsets_colex(n, k);
      CHECK(all.size() == binomial(n, k));
      std::set<std::vector<int>> distinct;
      for (const auto& sub : all) distinct.insert(sub.labels());
      CHECK(distinct.size() == all.size());
    }
  }
  int visited = 0;
  for_each_subset_colex(6, 3, [&](const IndexSubset&) { return ++visited < 5; });
  CHECK(visited == 5);
}

TEST_CASE("alternation examples") {
  CHECK(alternates({1, 3}, {2, 4}));
  CHECK(alternates({2, 4}, {1, 3}));
  CHECK_FALSE(alternates({1, 2}, {3, 4}));
  CHECK(alternates({2, 4, 6}, {3, 5, 7}));
  CHECK(alternates({2, 4, 6}, {1, 3, 5}));
  CHECK_FALSE(alternates({1, 4}, {2, 3}));
  CHECK(alternates({1}, {9}));
  CHECK_THROWS_AS(alternates({1, 2}, {3}), ContractError);
  CHECK_THROWS_AS(alternates({1, 2}, {2, 3}), ContractError);
}

TEST_CASE("alternation matches the color-change oracle, symmetric and shift invariant") {
  for (int n = 2; n <= 10; ++n) {
    for (int s = 1; 2 * s <= n; ++s) {
      for (const auto& [p, q] : enumerate_disjoint_pairs(n, s)) {
        const bool a = alternates(p, q);
        REQUIRE(a == oracle::alternate_by_colors(p, q));
        REQUIRE(a == alternates(q, p));
        std::vector<int> ps(p.begin(), p.end());
        std::vector<int> qs(q.begin(), q.end());
        for (int& x : ps) x += 7;
        for (int& x : qs) x += 7;
        REQUIRE(a == alternates(IndexSubset(ps), IndexSubset(qs)));
      }
    }
  }
}

TEST_CASE("brute-force alternating counts") {
  CHECK(alternating_count_bruteforce({1, 3}, 5) == 2);
  CHECK(alternating_count_bruteforce({1, 2}, 5) == 0);
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> evens;
    for (int i = 0; i <= k; ++i) evens.push_back(2 * i + 2);
    CHECK(alternating_count_bruteforce(IndexSubset(evens), 2 * k + 3) == 2);
  }
  // Exploratory sizes outside the odd-universe regime.
  CHECK(alternating_count_bruteforce({2}, 4) == 3);
  CHECK(alternating_count_bruteforce({1, 3}, 4) == 1);
  CHECK_THROWS_AS(alternating_count_bruteforce({1, 2, 3}, 5), ContractError);
}

TEST_CASE("closed-form alternating counts") {
  const auto ii = alternating_count_closed_form({1, 3}, 5);
  CHECK(ii.case_tag == AlternationCase::LeftEndOnly);
  CHECK(ii.block_sizes == std::vector<int>{1, 2});
  CHECK(ii.count == 2);

  const auto i = alternating_count_closed_form({1, 5}, 5);
  CHECK(i.case_tag == AlternationCase::BothEnds);
  CHECK(i.count == 0);

  const auto iv = alternating_count_closed_form({2, 4}, 5);
  CHECK(iv.case_tag == AlternationCase::NeitherEnd);
  CHECK(iv.count == 2);

  const auto iii = alternating_count_closed_form({3, 5}, 5);
  CHECK(iii.case_tag == AlternationCase::RightEndOnly);
  CHECK(iii.block_sizes == std::vector<int>{2, 1});

  CHECK(alternating_count_closed_form({1, 2}, 5).case_tag == AlternationCase::HasAdjacent);
  CHECK_THROWS_AS(alternating_count_closed_form({1, 3, 5}, 5), ContractError);
  CHECK_THROWS_AS(alternating_count_closed_form({1, 3}, 6), ContractError);
}

TEST_CASE("closed form equals brute force and is even for k <= 6") {
  for (int k = 1; k <= 6; ++k) {
    const int n = 2 * k + 3;
    for (const IndexSubset& subject : subsets_colex(n, k + 1)) {
      const auto closed = alternating_count_closed_form(subject, n);
      const auto brute = alternating_count_bruteforce(subject, n);
      REQUIRE(closed.count == brute);
      REQUIRE(brute % 2 == 0);
    }
  }
}

TEST_CASE("disjoint pair enumeration") {
  const auto four = enumerate_disjoint_pairs(4, 2);
  REQUIRE(four.size() == 3);
  CHECK(four[0] == std::pair<IndexSubset, IndexSubset>{{1, 2}, {3, 4}});
  CHECK(four[1] == std::pair<IndexSubset, IndexSubset>{{1, 3}, {2, 4}});
  CHECK(four[2] == std::pair<IndexSubset, IndexSubset>{{1, 4}, {2, 3}});
  CHECK(enumerate_disjoint_pairs(5, 2).size() == 15);
  CHECK_THROWS_AS(enumerate_disjoint_pairs(3, 2), ContractError);

  for (int k = 1; k <= 4; ++k) {
    const int n = 2 * k + 3;
    const auto pairs = enumerate_disjoint_pairs(n, k + 1);
    CHECK(pairs.size() == binomial(n, k + 1) * binomial(k + 2, k + 1) / 2);
  }

  // Completeness against a bitmask oracle.
  for (int n = 2; n <= 8; ++n) {
    for (int s = 1; 2 * s <= n; ++s) {
      std::set<std::set<std::vector<int>>> seen;
      for (const auto& [a, b] : enumerate_disjoint_pairs(n, s)) {
        REQUIRE(a.disjoint(b));
        REQUIRE(a.front() < b.front());
        seen.insert({a.labels(), b.labels()});
      }
      std::set<std::set<std::vector<int>>> expected;
      const auto all = oracle::all_subsets(n, s);
      for (const auto& a : all) {
        for (const auto& b : all) {
          if (a.disjoint(b)) expected.insert({a.labels(), b.labels()});
        }
      }
      CHECK(seen == expected);
      CHECK(seen.size() == binomial(n, s) * binomial(n - s, s) / 2);
    }
  }
}

TEST_CASE("breakdown csv") {
  std::ostringstream os;
  write_breakdown_csv_header(os);
  write_breakdown_csv_row(os, alternating_count_closed_form({1, 3}, 5));
  write_breakdown_csv_row(os, alternating_count_closed_form({2, 4}, 5));
  CHECK(os.str() == "I,case,block_sizes,count\n1 3,ii,1 2,2\n2 4,iv,,2\n");
}

#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "affmult/permutations.hpp"
#include "oracles.hpp"

using namespace affmult;

namespace {

// Admissibility by definition, with no search pruning involved.
std::set<Word> brute_admissible(const Constraint& c) {
  std::set<Word> out;
  Word w(c.ell);
  std::iota(w.begin(), w.end(), 1);
  do {
    if (is_admissible(w, c)) out.insert(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_CASE("constraint validation") {
  CHECK_THROWS_AS(Constraint(1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Constraint(5, 3, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Constraint(2, 1, 1, 0), std::invalid_argument);
  CHECK_NOTHROW(Constraint(2, 1, 1, 1));
}

TEST_CASE("is_admissible checks the three conditions") {
  Constraint c(5, 3, 2, 9);
  CHECK(is_admissible({3, 2, 9, 8, 6, 1, 7, 5, 4}, c));
  // values 1..3 must appear as 3, 2, 1
  CHECK_FALSE(is_admissible({2, 3, 9, 8, 6, 1, 7, 5, 4}, c));
  // first two letters must descend
  CHECK_FALSE(is_admissible({3, 9, 2, 8, 6, 1, 7, 5, 4}, c));
  // longest decreasing run must stay within k
  CHECK_FALSE(is_admissible({9, 8, 7, 6, 5, 4, 3, 2, 1}, c));
  CHECK_THROWS_AS(is_admissible({1, 2}, c), std::invalid_argument);
  CHECK_THROWS_AS(is_admissible({1, 1, 1, 1, 1, 1, 1, 1, 1}, c), std::invalid_argument);
}

TEST_CASE("321-avoiding counts are the Catalan numbers") {
  std::vector<long long> expect = {1, 2, 5, 14, 42};
  for (int ell = 1; ell <= 5; ++ell) {
    Constraint c(2, 1, 1, ell);
    CHECK(count_admissible(c) == expect[ell - 1]);
    CHECK(count_admissible(c) == oracle::catalan(ell));
    long long brute = 0;
    Word w(ell);
    std::iota(w.begin(), w.end(), 1);
    do {
      if (oracle::avoids_321(w)) ++brute;
    } while (std::next_permutation(w.begin(), w.end()));
    CHECK(count_admissible(c) == brute);
  }
}

TEST_CASE("a full countdown is forced when a = ell") {
  for (int ell = 1; ell <= 5; ++ell) {
    auto words = enumerate_admissible(Constraint(ell + 1, ell, 1, ell));
    REQUIRE(words.size() == 1);
    Word expect(ell);
    std::iota(expect.rbegin(), expect.rend(), 1);
    CHECK(words[0] == expect);
  }
}

TEST_CASE("search agrees with the definition filter") {
  for (int ell = 1; ell <= 6; ++ell)
    for (int a = 1; a <= std::min(ell, 3); ++a)
      for (int b = 1; b <= std::min(ell, 3); ++b)
        for (int k = a + b; k <= 5; ++k) {
          Constraint c(k, a, b, ell);
          auto brute = brute_admissible(c);
          auto fast = enumerate_admissible(c);
          std::set<Word> fast_set(fast.begin(), fast.end());
          CHECK(fast.size() == fast_set.size());
          CHECK(fast_set == brute);
          CHECK(count_admissible(c) == static_cast<long long>(brute.size()));
        }
}

TEST_CASE("counts are monotone in the constraints and stable for large k") {
  for (int ell = 2; ell <= 6; ++ell) {
    for (int a = 1; a + 1 <= ell; ++a)
      CHECK(count_admissible(Constraint(2 * ell, a + 1, 1, ell)) <=
            count_admissible(Constraint(2 * ell, a, 1, ell)));
    for (int b = 1; b + 1 <= ell; ++b)
      CHECK(count_admissible(Constraint(2 * ell, 1, b + 1, ell)) <=
            count_admissible(Constraint(2 * ell, 1, b, ell)));
    CHECK(count_admissible(Constraint(ell, 1, 1, ell)) ==
          count_admissible(Constraint(ell + 1, 1, 1, ell)));
  }
}

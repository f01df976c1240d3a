#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "affmult/rsk.hpp"
#include "oracles.hpp"

using namespace affmult;

TEST_CASE("is_permutation_word") {
  CHECK(is_permutation_word({1}));
  CHECK(is_permutation_word({3, 1, 2}));
  CHECK(is_permutation_word({}));
  CHECK_FALSE(is_permutation_word({2, 2}));
  CHECK_FALSE(is_permutation_word({0, 1}));
  CHECK_FALSE(is_permutation_word({1, 3}));
}

TEST_CASE("row insertion bumps the smallest larger entry") {
  auto [t1, cell1] = insert({{2, 9}, {3}}, 8);
  CHECK(t1 == Filling{{2, 8}, {3, 9}});
  CHECK(cell1 == std::pair<int, int>{2, 2});

  auto [t2, cell2] = insert({{2, 8}, {3, 9}}, 6);
  CHECK(t2 == Filling{{2, 6}, {3, 8}, {9}});
  CHECK(cell2 == std::pair<int, int>{3, 1});

  auto [t3, cell3] = insert({}, 5);
  CHECK(t3 == Filling{{5}});
  CHECK(cell3 == std::pair<int, int>{1, 1});
}

TEST_CASE("rsk_forward reproduces the worked nine-letter example") {
  Word w = {3, 2, 9, 8, 6, 1, 7, 5, 4};
  auto [m, n] = rsk_forward(w);
  CHECK(m.rows() == Filling{{1, 4, 7}, {2, 5}, {3, 6}, {8}, {9}});
  CHECK(n.rows() == Filling{{1, 3, 7}, {2, 4}, {5, 8}, {6}, {9}});
  CHECK(lds_length(w) == 5);
  CHECK(m.shape().length() == 5);
  CHECK(rsk_inverse(m, n) == w);
  CHECK_THROWS_AS(rsk_forward({1, 1}), std::invalid_argument);
}

TEST_CASE("rsk is a bijection onto same-shape tableau pairs") {
  for (int ell = 1; ell <= 7; ++ell) {
    Word w(ell);
    std::iota(w.begin(), w.end(), 1);
    do {
      auto [m, n] = rsk_forward(w);
      CHECK(m.shape() == n.shape());
      CHECK(rsk_inverse(m, n) == w);
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("the shape's row count is the longest decreasing subsequence") {
  for (int ell = 1; ell <= 7; ++ell) {
    Word w(ell);
    std::iota(w.begin(), w.end(), 1);
    do {
      auto [m, n] = rsk_forward(w);
      CHECK(m.shape().length() == lds_length(w));
      if (ell <= 5) CHECK(lds_length(w) == oracle::lds_brute(w));
    } while (std::next_permutation(w.begin(), w.end()));
  }
  CHECK(lds_length({}) == 0);
  CHECK(lds_length({5, 4, 3, 2, 1}) == 5);
  CHECK(lds_length({1, 2, 3}) == 1);
}

TEST_CASE("ordered values land in the anchored column of the insertion pair") {
  auto anchored = [](const StandardTableau& t, int a) {
    if (t.shape().length() < a) return false;
    for (int r = 0; r < a; ++r)
      if (t.rows()[r][0] != r + 1) return false;
    return true;
  };
  for (int ell = 1; ell <= 7; ++ell) {
    Word w(ell);
    std::iota(w.begin(), w.end(), 1);
    do {
      auto [m, n] = rsk_forward(w);
      for (int a = 2; a <= std::min(3, ell); ++a) {
        int expect = a;
        bool countdown = true;
        for (int x : w)
          if (x <= a) {
            if (x != expect) {
              countdown = false;
              break;
            }
            --expect;
          }
        if (countdown) CHECK(anchored(m, a));
      }
      for (int b = 2; b <= std::min(3, ell); ++b) {
        bool prefix = true;
        for (int i = 1; i < b; ++i)
          if (w[i] > w[i - 1]) prefix = false;
        if (prefix) CHECK(anchored(n, b));
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("rsk_inverse validates its inputs") {
  CHECK_THROWS_AS(rsk_inverse(StandardTableau(Filling{{1, 2}}), StandardTableau({{1}, {2}})),
                  std::invalid_argument);
}

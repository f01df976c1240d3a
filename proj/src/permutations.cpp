#include "affmult/permutations.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace affmult {

Constraint::Constraint(int k, int a, int b, int ell)
    : k(k), a(a == 0 ? 1 : a), b(b == 0 ? 1 : b), ell(ell) {
  if (k < 1 || a < 0 || b < 0 || ell < 1)
    throw std::invalid_argument("Constraint: parameters out of range");
  if (this->k < this->a + this->b)
    throw std::invalid_argument("Constraint: need k >= a + b");
  if (std::max(this->a, this->b) > ell)
    throw std::invalid_argument("Constraint: need max{a, b} <= ell");
}

bool is_admissible(const Word& w, const Constraint& c) {
  if (static_cast<int>(w.size()) != c.ell)
    throw std::invalid_argument("is_admissible: word length != ell");
  if (!is_permutation_word(w)) throw std::invalid_argument("is_admissible: not a permutation");
  if (lds_length(w) > c.k) return false;
  int expect = c.a;
  for (int x : w)
    if (x <= c.a) {
      if (x != expect) return false;
      --expect;
    }
  for (int i = 1; i < c.b; ++i)
    if (w[i] > w[i - 1]) return false;
  return true;
}

namespace {

// DFS over prefixes, pruning as soon as a constraint can no longer hold:
// a value <= a may only enter if every larger value <= a is already placed,
// the first b letters must keep descending, and the decreasing-subsequence
// DP may never exceed k.
struct Search {
  const Constraint& c;
  std::vector<int> w;
  std::vector<int> best;
  std::vector<bool> used;

  explicit Search(const Constraint& c) : c(c), used(c.ell + 1, false) {
    w.reserve(c.ell);
    best.reserve(c.ell);
  }

  bool try_push(int v) {
    int i = static_cast<int>(w.size());
    if (i >= 1 && i < c.b && v > w[i - 1]) return false;
    if (v <= c.a)
      for (int u = c.a; u > v; --u)
        if (!used[u]) return false;
    int nb = 1;
    for (int j = 0; j < i; ++j)
      if (w[j] > v) nb = std::max(nb, best[j] + 1);
    if (nb > c.k) return false;
    w.push_back(v);
    best.push_back(nb);
    used[v] = true;
    return true;
  }

  void pop() {
    used[w.back()] = false;
    w.pop_back();
    best.pop_back();
  }

  BigInt count() {
    if (static_cast<int>(w.size()) == c.ell) return 1;
    BigInt total = 0;
    for (int v = 1; v <= c.ell; ++v) {
      if (used[v] || !try_push(v)) continue;
      total += count();
      pop();
    }
    return total;
  }

  void collect(std::vector<Word>& out) {
    if (static_cast<int>(w.size()) == c.ell) {
      out.push_back(w);
      return;
    }
    for (int v = 1; v <= c.ell; ++v) {
      if (used[v] || !try_push(v)) continue;
      collect(out);
      pop();
    }
  }
};

}  // namespace

BigInt count_admissible(const Constraint& c) {
  // First letter fans out across workers, each counting its subtree.
  std::vector<std::future<BigInt>> parts;
  parts.reserve(c.ell);
  for (int v = 1; v <= c.ell; ++v)
    parts.push_back(std::async(std::launch::async, [&c, v] {
      Search s(c);
      if (!s.try_push(v)) return BigInt(0);
      return s.count();
    }));
  BigInt total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

std::vector<Word> enumerate_admissible(const Constraint& c) {
  Search s(c);
  std::vector<Word> out;
  s.collect(out);
  return out;
}

}  // namespace affmult

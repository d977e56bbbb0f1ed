#pragma once

// Slow, direct reference implementations used only to cross-check the
// library. None of them calls back into the code under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline bool is_canonical(const Word& w) {
  int next = 1;
  std::map<int, int> seen;
  for (int a : w) {
    if (seen[a]++ == 0) {
      if (a != next) return false;
      ++next;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second == 2; });
}

// Every canonical word on [2n], via permutations of the multiset 1,1,...,n,n.
inline std::vector<Word> all_words(int n) {
  Word w;
  for (int a = 1; a <= n; ++a) w.insert(w.end(), {a, a});
  std::vector<Word> out;
  do {
    if (is_canonical(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Subset test: some index set of size |p| reads a word order-isomorphic to p.
inline bool contains(const Word& w, const Word& p) {
  const int len = static_cast<int>(w.size());
  const int k = static_cast<int>(p.size());
  if (k > len) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      for (int b = 0; b < k && ok; ++b) {
        const int pa = p[static_cast<std::size_t>(a)], pb = p[static_cast<std::size_t>(b)];
        const int wa = w[static_cast<std::size_t>(pick[static_cast<std::size_t>(a)])];
        const int wb = w[static_cast<std::size_t>(pick[static_cast<std::size_t>(b)])];
        if ((pa < pb) != (wa < wb) || (pa == pb) != (wa == wb)) ok = false;
      }
    }
    if (ok) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == len - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline std::vector<std::pair<int, int>> arcs(const Word& w) {
  std::map<int, int> first;
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    auto it = first.find(w[static_cast<std::size_t>(i)]);
    if (it == first.end()) {
      first[w[static_cast<std::size_t>(i)]] = i + 1;
    } else {
      out.emplace_back(it->second, i + 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Pairs of arcs (a, b), (c, d) with a < c < b < d.
inline int crossings(const Word& w) {
  const auto e = arcs(w);
  int count = 0;
  for (const auto& [a, b] : e) {
    for (const auto& [c, d] : e) {
      if (a < c && c < b && b < d) ++count;
    }
  }
  return count;
}

inline std::uint64_t double_factorial_odd(int n) {
  std::uint64_t r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Lattice points (e, k) with 2k <= e, E/N steps, counted up to (2n, n).
inline std::uint64_t lattice_path_count(int n) {
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(2 * n + 1),
                                             std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
  c[0][0] = 1;
  for (int e = 0; e <= 2 * n; ++e) {
    for (int k = 0; k <= n; ++k) {
      if (2 * k > e || (e == 0 && k == 0)) continue;
      std::uint64_t v = 0;
      if (e > 0) v += c[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(k)];
      if (k > 0) v += c[static_cast<std::size_t>(e)][static_cast<std::size_t>(k - 1)];
      c[static_cast<std::size_t>(e)][static_cast<std::size_t>(k)] = v;
    }
  }
  return c[static_cast<std::size_t>(2 * n)][static_cast<std::size_t>(n)];
}

// Schroeder paths of a given semilength, optionally without low peaks.
// at[x] maps (height, last step was a U up to height 1) to a path count.
inline std::uint64_t schroeder_count(int semilength, bool forbid_low_peaks) {
  const int L = 2 * semilength;
  std::vector<std::map<std::pair<int, int>, std::uint64_t>> at(static_cast<std::size_t>(L + 1));
  at[0][{0, 0}] = 1;
  for (int x = 0; x < L; ++x) {
    for (const auto& [state, ways] : at[static_cast<std::size_t>(x)]) {
      const auto [h, up1] = state;
      at[static_cast<std::size_t>(x + 1)][{h + 1, h + 1 == 1 ? 1 : 0}] += ways;
      if (h > 0 && !(forbid_low_peaks && up1)) at[static_cast<std::size_t>(x + 1)][{h - 1, 0}] += ways;
      if (x + 2 <= L) at[static_cast<std::size_t>(x + 2)][{h, 0}] += ways;
    }
  }
  std::uint64_t total = 0;
  for (const auto& [state, ways] : at[static_cast<std::size_t>(L)]) {
    if (state.first == 0) total += ways;
  }
  return total;
}

}  // namespace oracle

#pragma once

// Independent counting formulas and semantic readings of builtin codes.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "typespace/finset_map.hpp"

namespace typespace::testing {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Stirling numbers of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline std::uint64_t stirling2(int n, int k) {
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n + 1),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) s[i][j] = static_cast<std::uint64_t>(j) * s[i - 1][j] + s[i - 1][j - 1];
  }
  return k <= n ? s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] : 0;
}

/// Bell numbers from the Bell triangle.
inline std::uint64_t bell(int n) {
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

/// Ordered Bell (Fubini) numbers: a(n) = sum_k C(n,k) a(n-k).
inline std::uint64_t fubini(int n) {
  std::vector<std::uint64_t> a{1};
  for (int i = 1; i <= n; ++i) {
    std::uint64_t s = 0;
    for (int k = 1; k <= i; ++k) s += binomial(i, k) * a[static_cast<std::size_t>(i - k)];
    a.push_back(s);
  }
  return a[static_cast<std::size_t>(n)];
}

/// Graphs on the blocks of a set partition: sum_k S(n,k) 2^(k choose 2).
inline std::uint64_t partitioned_graphs(int n) {
  std::uint64_t s = 0;
  for (int k = 1; k <= n; ++k) s += stirling2(n, k) << binomial(k, 2);
  return s;
}

/// Number of subspaces of F_2^n: G(n+1) = 2 G(n) + (2^n - 1) G(n-1).
inline std::uint64_t galois2(int n) {
  std::vector<std::uint64_t> g{1, 2};
  for (int i = 1; i < n; ++i) g.push_back(2 * g[static_cast<std::size_t>(i)] + ((std::uint64_t{1} << i) - 1) * g[static_cast<std::size_t>(i - 1)]);
  return g[static_cast<std::size_t>(n)];
}

/// Which pairs of coordinates are equal.
inline std::vector<bool> equality_pattern(const std::vector<int>& x) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out.push_back(x[i] == x[j]);
  }
  return out;
}

/// Comparison of every ordered pair of coordinates (-1, 0, 1).
inline std::vector<int> order_pattern(const std::vector<int>& x) {
  std::vector<int> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out.push_back((x[i] > x[j]) - (x[i] < x[j]));
  }
  return out;
}

/// For a partition-plus-edges code over n points: per pair, 0 equal, 1 apart,
/// 2 joined by an edge.
inline std::vector<int> graph_pattern(const std::vector<int>& blocks, const std::set<std::pair<int, int>>& edges) {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      const int a = std::min(blocks[i], blocks[j]);
      const int b = std::max(blocks[i], blocks[j]);
      out.push_back(a == b ? 0 : edges.contains({a, b}) ? 2 : 1);
    }
  }
  return out;
}

/// Splits a random_graph code into block labels and the set of block edges.
inline std::pair<std::vector<int>, std::set<std::pair<int, int>>> split_graph_code(int n, const std::vector<int>& code) {
  std::vector<int> blocks(code.begin(), code.begin() + n);
  std::set<std::pair<int, int>> edges;
  for (std::size_t i = static_cast<std::size_t>(n); i + 1 < code.size(); i += 2) edges.insert({code[i], code[i + 1]});
  return {blocks, edges};
}

/// Relations sum_{i in S} v_i = 0 satisfied by v o f, where K (a set of
/// masks) is the relation space of v.
inline std::vector<int> pulled_relations(const FinSetMap& f, const std::vector<int>& K) {
  std::vector<int> out;
  const std::set<int> rel(K.begin(), K.end());
  for (int S = 0; S < (1 << f.source_size()); ++S) {
    int image = 0;
    for (int j = 0; j < f.source_size(); ++j) {
      if (S >> j & 1) image ^= 1 << f(j);
    }
    if (rel.contains(image)) out.push_back(S);
  }
  return out;
}

}  // namespace typespace::testing

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroid/linear_algebra.hpp"
#include "matroid/matroid.hpp"
#include "matroid/operations.hpp"

namespace matroid {

/// U_{rank,size}: every rank-subset is a basis.
inline Matroid uniform(int rank, int size) {
  if (size < 0 || size > max_ground_set || rank < 0 || rank > size)
    fail(ErrorCode::BoundsViolation,
         "uniform(" + std::to_string(rank) + ", " + std::to_string(size) + ")");
  std::vector<Mask> b;
  for_each_k_subset(size, rank, [&](Mask s) { b.push_back(s); });
  return detail::trusted(size, std::move(b));
}

namespace detail {

template <typename Entry, typename RankFn>
Matroid column_matroid(const std::vector<std::vector<Entry>>& a, RankFn&& rank_of) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  if (cols > max_ground_set) fail(ErrorCode::BoundsViolation, "more than 64 columns");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != cols) fail(ErrorCode::InvalidArgument, "ragged matrix");
  auto sub = [&](Mask s) {
    std::vector<std::vector<Entry>> out;
    for (const auto& row : a) {
      std::vector<Entry> r;
      for_each_element(s, [&](int j) { r.push_back(row[j]); });
      out.push_back(std::move(r));
    }
    return out;
  };
  const int top = rank_of(a);
  std::vector<Mask> bases;
  for_each_k_subset(cols, top, [&](Mask s) {
    if (top == 0 || rank_of(sub(s)) == top) bases.push_back(s);
  });
  return trusted(cols, std::move(bases));
}

}  // namespace detail

/// Column matroid of an integer matrix over GF(p) (p > 0) or Q (p == 0).
inline Matroid linear_matroid(Field f, const std::vector<std::vector<std::int64_t>>& a) {
  if (f.finite() && !is_prime(f.p)) fail(ErrorCode::NotPrime, std::to_string(f.p));
  return detail::column_matroid(a, [&](const auto& m) { return matrix_rank(f, m); });
}

/// Column matroid of a rational matrix.
inline Matroid linear_matroid(const std::vector<std::vector<Rational>>& a) {
  return detail::column_matroid(a, [](const auto& m) { return rank_rational(m); });
}

/// Edges are (u, v) pairs; self-loops and parallel edges allowed.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

inline void check_graph(const Graph& g) {
  if (static_cast<int>(g.edges.size()) > max_ground_set)
    fail(ErrorCode::BoundsViolation, "more than 64 edges");
  for (auto [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
      fail(ErrorCode::BoundsViolation, "edge endpoint out of range");
}

}  // namespace detail

inline int graph_components(const Graph& g) {
  detail::UnionFind uf(g.vertices);
  int k = g.vertices;
  for (auto [u, v] : g.edges)
    if (uf.unite(u, v)) --k;
  return k;
}

/// Bases are the spanning forests.
inline Matroid graphic(const Graph& g) {
  detail::check_graph(g);
  const int m = static_cast<int>(g.edges.size());
  const int r = g.vertices - graph_components(g);
  std::vector<Mask> bases;
  for_each_k_subset(m, r, [&](Mask s) {
    detail::UnionFind uf(g.vertices);
    bool forest = true;
    for_each_element(s, [&](int e) {
      forest = forest && uf.unite(g.edges[e].first, g.edges[e].second);
    });
    if (forest) bases.push_back(s);
  });
  return detail::trusted(m, std::move(bases));
}

inline Matroid cographic(const Graph& g) { return dual(graphic(g)); }

inline Graph complete_graph(int k) {
  Graph g{k, {}};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.edges.emplace_back(i, j);
  return g;
}

namespace detail {

/// Can every element of s be matched to a distinct set containing it?
inline bool matchable(Mask s, const std::vector<Mask>& sets) {
  const int k = static_cast<int>(sets.size());
  std::vector<int> owner(k, -1);  // set index -> element
  std::function<bool(int, Mask&)> augment = [&](int e, Mask& seen) -> bool {
    for (int j = 0; j < k; ++j) {
      if (!contains(sets[j], e) || contains(seen, j)) continue;
      seen |= bit(j);
      if (owner[j] < 0 || augment(owner[j], seen)) {
        owner[j] = e;
        return true;
      }
    }
    return false;
  };
  bool ok = true;
  for_each_element(s, [&](int e) {
    if (!ok) return;
    Mask seen = 0;
    ok = augment(e, seen);
  });
  return ok;
}

}  // namespace detail

/// Partial transversals of (A_1, ..., A_k). Independence by augmenting paths,
/// O(|I| k^2) per subset.
inline Matroid transversal(int n, const std::vector<Mask>& sets) {
  if (n < 0 || n > max_ground_set) fail(ErrorCode::BoundsViolation, "ground set too large");
  if (sets.size() > 64) fail(ErrorCode::BoundsViolation, "more than 64 sets");
  for (Mask a : sets)
    if (!is_subset(a, full_mask(n))) fail(ErrorCode::BoundsViolation, to_string(a) + " leaves E");
  int r = 0;
  {
    // maximum matching size = rank
    Mask greedy = 0;
    for (int e = 0; e < n; ++e)
      if (detail::matchable(greedy | bit(e), sets)) greedy |= bit(e);
    r = popcount(greedy);
  }
  std::vector<Mask> bases;
  for_each_k_subset(n, r, [&](Mask s) {
    if (detail::matchable(s, sets)) bases.push_back(s);
  });
  return Matroid::from_bases(n, std::move(bases));
}

/// Paving matroid of rank `rank` whose hyperplanes are `parts`, which must form a
/// (rank-1)-partition: each part has at least rank-1 elements and every
/// (rank-1)-subset of E lies in exactly one part.
inline Matroid paving_from_hyperplanes(int n, int rank, const std::vector<Mask>& parts) {
  if (n < 0 || n > max_ground_set || rank < 1 || rank > n)
    fail(ErrorCode::BoundsViolation, "paving rank/size out of range");
  for (Mask p : parts) {
    if (!is_subset(p, full_mask(n))) fail(ErrorCode::BoundsViolation, to_string(p) + " leaves E");
    if (popcount(p) < rank - 1)
      fail(ErrorCode::NotAnRPartition, to_string(p) + " has fewer than rank-1 elements");
  }
  std::string bad;
  for_each_k_subset(n, rank - 1, [&](Mask s) {
    if (!bad.empty()) return;
    int hits = 0;
    for (Mask p : parts) hits += is_subset(s, p);
    if (hits != 1) bad = to_string(s) + " lies in " + std::to_string(hits) + " parts";
  });
  if (!bad.empty()) fail(ErrorCode::NotAnRPartition, bad);
  std::vector<Mask> bases;
  for_each_k_subset(n, rank, [&](Mask s) {
    for (Mask p : parts)
      if (is_subset(s, p)) return;
    bases.push_back(s);
  });
  return Matroid::from_bases(n, std::move(bases));
}

/// Rank-3 simple matroid of a point-line configuration: the given 3+ point lines
/// plus every pair not on one of them.
inline Matroid rank3_configuration(int n, const std::vector<Mask>& lines) {
  std::vector<Mask> parts = lines;
  for_each_k_subset(n, 2, [&](Mask s) {
    for (Mask l : lines)
      if (is_subset(s, l)) return;
    parts.push_back(s);
  });
  return paving_from_hyperplanes(n, 3, parts);
}

namespace named_data {

/// Column j is the binary expansion of j + 1.
inline std::vector<std::vector<std::int64_t>> fano_matrix() {
  std::vector<std::vector<std::int64_t>> a(3, std::vector<std::int64_t>(7));
  for (int j = 0; j < 7; ++j)
    for (int i = 0; i < 3; ++i) a[i][j] = ((j + 1) >> (2 - i)) & 1;
  return a;
}

/// {0,1,2} (columns 001, 010, 011) is the line relaxed for the non-Fano matroid.
inline constexpr Mask fano_relaxed_line = 0b111;

/// A1..A3 = 0,1,2 on one line, B1..B3 = 3,4,5 on the other, C1..C3 = 6,7,8 the
/// Pappus points Ci = Aj Bk ∩ Ak Bj. The last line {6,7,8} is the one Pappus forces.
inline const std::vector<Mask>& pappus_lines() {
  static const std::vector<Mask> lines = {
      mask_of({0, 1, 2}), mask_of({3, 4, 5}), mask_of({0, 4, 6}),
      mask_of({0, 5, 7}), mask_of({1, 5, 8}), mask_of({1, 3, 6}),
      mask_of({2, 3, 7}), mask_of({2, 4, 8}), mask_of({6, 7, 8}),
  };
  return lines;
}

inline const Mask pappus_middle_line = mask_of({6, 7, 8});

/// Labels 1..4 are 0..3 and 1'..4' are 4..7.
inline std::vector<Mask> vamos_four_point_planes() {
  auto pp = [](int i, int j) { return mask_of({i - 1, j - 1, i + 3, j + 3}); };
  return {pp(1, 2), pp(1, 3), pp(1, 4), pp(2, 3), pp(2, 4)};
}

}  // namespace named_data

inline Matroid fano() { return linear_matroid(Field::gf(2), named_data::fano_matrix()); }
inline Matroid nonfano() { return relax(fano(), named_data::fano_relaxed_line); }
inline Matroid pappus() { return rank3_configuration(9, named_data::pappus_lines()); }
inline Matroid nonpappus() { return relax(pappus(), named_data::pappus_middle_line); }

inline Matroid vamos() {
  auto parts = named_data::vamos_four_point_planes();
  const auto big = parts;
  for_each_k_subset(8, 3, [&](Mask s) {
    for (Mask p : big)
      if (is_subset(s, p)) return;
    parts.push_back(s);
  });
  return paving_from_hyperplanes(8, 4, parts);
}

inline const std::vector<std::string_view>& named_matroids() {
  static const std::vector<std::string_view> names = {"fano", "nonfano", "pappus", "nonpappus",
                                                      "vamos"};
  return names;
}

inline Matroid named(std::string_view name) {
  if (name == "fano") return fano();
  if (name == "nonfano") return nonfano();
  if (name == "pappus") return pappus();
  if (name == "nonpappus") return nonpappus();
  if (name == "vamos") return vamos();
  fail(ErrorCode::InvalidArgument, "unknown named matroid '" + std::string(name) + "'");
}

/// Schubert matroid on E = {0..size-1} (write size = n + 1) of rank d + 1 = a.size().
/// With a basis written in decreasing order s_0 > s_1 > ... > s_d, it must satisfy
/// s_i <= (n - i) - a_{d+1-i}, where a = (a_1, ..., a_{d+1}) is non-increasing
/// with a_1 <= n - d.
inline Matroid schubert(int size, const std::vector<int>& a) {
  const int rank = static_cast<int>(a.size());
  const int n = size - 1;
  const int d = rank - 1;
  if (size < 1 || size > max_ground_set || rank > size)
    fail(ErrorCode::BoundsViolation, "schubert size/rank out of range");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) fail(ErrorCode::BoundsViolation, "negative entry in a");
    if (i > 0 && a[i] > a[i - 1]) fail(ErrorCode::BoundsViolation, "a is not non-increasing");
  }
  if (rank > 0 && a[0] > n - d) fail(ErrorCode::BoundsViolation, "a_1 exceeds n - d");
  std::vector<Mask> bases;
  for_each_k_subset(size, rank, [&](Mask s) {
    auto e = elements(s);  // ascending
    for (int i = 0; i <= d; ++i) {
      const int si = e[d - i];  // i-th largest
      if (si > (n - i) - a[d - i]) return;  // a_{d+1-i} is a[d - i]
    }
    bases.push_back(s);
  });
  return Matroid::from_bases(size, std::move(bases));
}

}  // namespace matroid

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "matroid/linear_algebra.hpp"
#include "matroid/matroid.hpp"
#include "matroid/structure.hpp"

namespace matroid {

using LatticePoint = std::vector<std::int64_t>;
using WeightVector = std::vector<Rational>;

inline LatticePoint indicator(int n, Mask s) {
  LatticePoint p(n, 0);
  for_each_element(s, [&](int i) { p[i] = 1; });
  return p;
}

/// One 0/1 vertex e_B per basis, in basis order.
inline std::vector<LatticePoint> polytope_vertices(const Matroid& m) {
  std::vector<LatticePoint> out;
  for (Mask b : m.bases()) out.push_back(indicator(m.size(), b));
  return out;
}

/// Whether the 0/1 points are the vertex set of a matroid polytope, decided by
/// basis exchange on the corresponding subsets.
inline bool is_matroid_vertex_set(int n, const std::vector<LatticePoint>& pts) {
  if (pts.empty()) return false;
  std::vector<Mask> sets;
  int sum = -1;
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != n) fail(ErrorCode::InvalidArgument, "point of wrong length");
    Mask s = 0;
    for (int i = 0; i < n; ++i) {
      if (p[i] != 0 && p[i] != 1) fail(ErrorCode::InvalidArgument, "point is not 0/1");
      if (p[i]) s |= bit(i);
    }
    if (sum >= 0 && popcount(s) != sum) fail(ErrorCode::MixedCardinality, "coordinate sums differ");
    sum = popcount(s);
    sets.push_back(s);
  }
  detail::canonicalize(sets);
  return detail::exchange_witness(sets).empty();
}

inline Rational weight_of(const WeightVector& w, Mask s) {
  Rational t = 0;
  for_each_element(s, [&](int i) { t += w[i]; });
  return t;
}

namespace detail {
inline void check_weights(const Matroid& m, const WeightVector& w) {
  if (static_cast<int>(w.size()) != m.size())
    fail(ErrorCode::InvalidArgument, "weight vector length differs from |E|");
}
}  // namespace detail

/// Bases of minimal w-weight.
inline Matroid face_matroid_by_filter(const Matroid& m, const WeightVector& w) {
  detail::check_weights(m, w);
  std::vector<Rational> ws;
  for (Mask b : m.bases()) ws.push_back(weight_of(w, b));
  const Rational best = *std::min_element(ws.begin(), ws.end());
  std::vector<Mask> out;
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (ws[i] == best) out.push_back(m.bases()[i]);
  return detail::trusted(m.size(), std::move(out));
}

/// ⊕_i (M|S_i)/S_{i-1} for the level sets S_1 ⊂ S_2 ⊂ ... of w, taken in
/// increasing weight order.
inline Matroid face_matroid_by_flag(const Matroid& m, const WeightVector& w) {
  detail::check_weights(m, w);
  std::vector<Rational> levels(w.begin(), w.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<Mask> acc{0};
  Mask prev = 0;
  int prev_rank = 0;
  for (const Rational& v : levels) {
    Mask s = 0;
    for (int i = 0; i < m.size(); ++i)
      if (w[i] <= v) s |= bit(i);
    const int rs = m.rank(s);
    const Mask piece = s & ~prev;
    std::vector<Mask> part;
    for (Mask b : m.bases()) {
      if (popcount(b & s) == rs && popcount(b & prev) == prev_rank) part.push_back(b & piece);
    }
    detail::canonicalize(part);
    std::vector<Mask> next;
    for (Mask a : acc)
      for (Mask p : part) next.push_back(a | p);
    acc = std::move(next);
    prev = s;
    prev_rank = rs;
  }
  return detail::trusted(m.size(), std::move(acc));
}

/// M_w, computed both ways; disagreement is an internal error.
inline Matroid face_matroid(const Matroid& m, const WeightVector& w) {
  Matroid a = face_matroid_by_filter(m, w);
  if (face_matroid_by_flag(m, w) != a) fail(ErrorCode::Internal, "face matroid methods disagree");
  return a;
}

enum class Sense { Max, Min };

struct GreedyResult {
  Mask basis = 0;
  Rational weight = 0;
};

/// Scan elements best-first (ties by smaller index), keeping each that stays independent.
inline GreedyResult greedy_basis(const Matroid& m, const WeightVector& c, Sense sense = Sense::Max) {
  detail::check_weights(m, c);
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sense == Sense::Max ? c[a] > c[b] : c[a] < c[b];
  });
  GreedyResult r;
  for (int e : order)
    if (m.is_independent(r.basis | bit(e))) r.basis |= bit(e);
  r.weight = weight_of(c, r.basis);
  return r;
}

/// dim P(M) = |E| - (number of connected components).
inline int polytope_dimension(const Matroid& m) {
  return m.size() - static_cast<int>(connected_components(m).size());
}

/// Dimension of the affine hull of the vertices, by exact elimination.
inline int vertex_affine_rank(const Matroid& m) { return affine_rank(polytope_vertices(m)); }

}  // namespace matroid

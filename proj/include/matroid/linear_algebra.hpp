#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matroid/error.hpp"

namespace matroid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// GF(p) when p > 0, the rationals when p == 0.
struct Field {
  std::int64_t p = 0;
  static Field rationals() { return {0}; }
  static Field gf(std::int64_t p) { return {p}; }
  bool finite() const noexcept { return p > 0; }
};

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a = mod(a, p);
  while (e) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * a % p);
    a = static_cast<std::int64_t>((__int128)a * a % p);
    e >>= 1;
  }
  return r;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) { return pow_mod(a, p - 2, p); }

/// Rank over GF(p) by Gaussian elimination; rows are consumed.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  for (auto& row : a)
    for (auto& x : row) x = mod(x, p);
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = inv_mod(a[rank][c], p);
    for (auto& x : a[rank]) x = static_cast<std::int64_t>((__int128)x * inv % p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c];
      for (std::size_t k = c; k < cols; ++k)
        a[r][k] = mod(a[r][k] - static_cast<std::int64_t>((__int128)f * a[rank][k] % p), p);
    }
    ++rank;
  }
  return rank;
}

/// Row-reduces in place over Q; returns the pivot column of each nonzero row.
inline std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const Rational lead = a[rank][c];
    for (auto& x : a[rank]) x /= lead;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

inline int rank_rational(std::vector<std::vector<Rational>> a) {
  return static_cast<int>(row_reduce(a).size());
}

/// Rank over `field` of an integer matrix (entries reduced mod p when finite).
inline int matrix_rank(Field f, const std::vector<std::vector<std::int64_t>>& a) {
  if (f.finite()) return rank_mod_p(a, f.p);
  std::vector<std::vector<Rational>> q;
  for (const auto& row : a) q.emplace_back(row.begin(), row.end());
  return rank_rational(std::move(q));
}

/// Dimension of the affine hull of a point set (-1 when empty).
inline int affine_rank(const std::vector<std::vector<std::int64_t>>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> row;
    for (std::size_t k = 0; k < pts[i].size(); ++k) row.emplace_back(pts[i][k] - pts[0][k]);
    diffs.push_back(std::move(row));
  }
  return rank_rational(std::move(diffs));
}

}  // namespace matroid

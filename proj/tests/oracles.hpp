#pragma once

// Brute-force reference computations. These work from the raw basis list and
// plain subset loops only, so they share no code paths with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Mask = std::uint64_t;
using Big = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int pc(Mask s) { return std::popcount(s); }

/// r(S) = max |B ∩ S|
inline int rank(const std::vector<Mask>& bases, Mask s) {
  int r = 0;
  for (Mask b : bases) r = std::max(r, pc(b & s));
  return r;
}

inline std::vector<int> rank_table(int n, const std::vector<Mask>& bases) {
  std::vector<int> r(std::size_t{1} << n);
  for (Mask s = 0; s < r.size(); ++s) r[s] = rank(bases, s);
  return r;
}

inline std::vector<Mask> flats(int n, const std::vector<Mask>& bases) {
  auto r = rank_table(n, bases);
  std::vector<Mask> out;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask s = 0; s <= full; ++s) {
    bool closed = true;
    for (int j = 0; j < n && closed; ++j)
      if (!((s >> j) & 1) && r[s | (Mask{1} << j)] == r[s]) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> circuits(int n, const std::vector<Mask>& bases) {
  auto r = rank_table(n, bases);
  std::vector<Mask> out;
  for (Mask s = 1; s < r.size(); ++s) {
    if (r[s] == pc(s)) continue;
    bool minimal = true;
    for (int j = 0; j < n && minimal; ++j)
      if ((s >> j) & 1 && r[s & ~(Mask{1} << j)] != pc(s) - 1) minimal = false;
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// χ(q) = Σ_S (-1)^|S| q^{r(E)-r(S)}, ascending coefficients.
inline std::vector<Big> whitney_charpoly(int n, const std::vector<Mask>& bases) {
  auto r = rank_table(n, bases);
  const int top = r.back();
  std::vector<Big> c(top + 1, 0);
  for (Mask s = 0; s < r.size(); ++s) c[top - r[s]] += pc(s) % 2 ? -1 : 1;
  return c;
}

inline Big binom(int n, int k) {
  Big b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

/// T(x,y) = Σ_S (x-1)^{r(E)-r(S)} (y-1)^{|S|-r(S)}, expanded; key (i,j) for x^i y^j.
inline std::map<std::pair<int, int>, Big> tutte(int n, const std::vector<Mask>& bases) {
  auto r = rank_table(n, bases);
  const int top = r.back();
  std::map<std::pair<int, int>, Big> t;
  for (Mask s = 0; s < r.size(); ++s) {
    const int a = top - r[s], b = pc(s) - r[s];
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) {
        Big v = binom(a, i) * binom(b, j);
        if ((a - i + b - j) % 2) v = -v;
        t[{i, j}] += v;
      }
  }
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  return t;
}

/// Number of independent sets of each size.
inline std::vector<Big> f_vector(int n, const std::vector<Mask>& bases) {
  auto r = rank_table(n, bases);
  std::vector<Big> f(r.back() + 1, 0);
  for (Mask s = 0; s < r.size(); ++s)
    if (r[s] == pc(s)) f[pc(s)] += 1;
  return f;
}

/// Proper colourings of a graph with q colours, by trying every assignment.
inline std::int64_t proper_colorings(int vertices, const std::vector<std::pair<int, int>>& edges, int q) {
  std::vector<int> col(vertices, 0);
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    for (auto [u, v] : edges)
      if (col[u] == col[v]) ok = false;
    if (ok) ++count;
    int i = 0;
    while (i < vertices && ++col[i] == q) col[i++] = 0;
    if (i == vertices) break;
  }
  return vertices == 0 ? 1 : count;
}

/// Best total weight over all bases.
inline Rat best_basis_weight(const std::vector<Mask>& bases, const std::vector<Rat>& w, bool maximize) {
  std::optional<Rat> best;
  for (Mask b : bases) {
    Rat s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if ((b >> i) & 1) s += w[i];
    if (!best || (maximize ? s > *best : s < *best)) best = s;
  }
  return *best;
}

/// Bases of minimal weight.
inline std::vector<Mask> min_weight_bases(const std::vector<Mask>& bases, const std::vector<Rat>& w) {
  const Rat m = best_basis_weight(bases, w, false);
  std::vector<Mask> out;
  for (Mask b : bases) {
    Rat s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if ((b >> i) & 1) s += w[i];
    if (s == m) out.push_back(b);
  }
  return out;
}

/// Up-closed among flats and closed under intersections of modular pairs.
inline bool is_modular_cut(int n, const std::vector<Mask>& bases, const std::vector<Mask>& family) {
  auto r = rank_table(n, bases);
  auto fl = flats(n, bases);
  auto in = [&](Mask f) { return std::find(family.begin(), family.end(), f) != family.end(); };
  for (Mask f : family) {
    if (std::find(fl.begin(), fl.end(), f) == fl.end()) return false;
    for (Mask g : fl)
      if ((f & ~g) == 0 && !in(g)) return false;
  }
  for (Mask a : family)
    for (Mask b : family)
      if (r[a] + r[b] == r[a & b] + r[a | b] && !in(a & b)) return false;
  return true;
}

/// Some permutation of the ground set carries one basis family onto the other.
inline bool isomorphic(int n, const std::vector<Mask>& a, std::vector<Mask> b) {
  if (a.size() != b.size()) return false;
  std::sort(b.begin(), b.end());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<Mask> img;
    for (Mask s : a) {
      Mask t = 0;
      for (int i = 0; i < n; ++i)
        if ((s >> i) & 1) t |= Mask{1} << p[i];
      img.push_back(t);
    }
    std::sort(img.begin(), img.end());
    if (img == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Balancing by rational elimination: at every face τ of the support,
/// Σ c(σ) e_{S_σ} must be an integer combination of e_{G_1..G_{k-1}} and e_E.
/// Returns the first failing τ, or nothing.
inline std::optional<std::vector<Mask>> unbalanced_face(int n, int dim,
                                                        const std::map<std::vector<Mask>, std::int64_t>& c) {
  if (dim == 0) return std::nullopt;
  std::map<std::vector<Mask>, std::vector<Rat>> sums;
  for (const auto& [flag, v] : c) {
    if (v == 0) continue;
    for (std::size_t k = 0; k < flag.size(); ++k) {
      std::vector<Mask> tau = flag;
      tau.erase(tau.begin() + static_cast<std::ptrdiff_t>(k));
      auto& acc = sums.try_emplace(tau, std::vector<Rat>(n, 0)).first->second;
      for (int i = 0; i < n; ++i)
        if ((flag[k] >> i) & 1) acc[i] += v;
    }
  }
  const Mask full = (Mask{1} << n) - 1;
  for (const auto& [tau, target] : sums) {
    std::vector<Mask> gens = tau;
    gens.push_back(full);
    const std::size_t g = gens.size();
    // augmented n x (g + 1) system
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(g + 1, 0));
    for (int i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < g; ++j) a[i][j] = (gens[j] >> i) & 1 ? 1 : 0;
      a[i][g] = target[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < g && row < static_cast<std::size_t>(n); ++col) {
      std::size_t p = row;
      while (p < static_cast<std::size_t>(n) && a[p][col] == 0) ++p;
      if (p == static_cast<std::size_t>(n)) continue;
      std::swap(a[p], a[row]);
      const Rat piv = a[row][col];
      for (auto& x : a[row]) x /= piv;
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        if (i != row && a[i][col] != 0) {
          const Rat f = a[i][col];
          for (std::size_t j = 0; j <= g; ++j) a[i][j] -= f * a[row][j];
        }
      pivots.push_back(col);
      ++row;
    }
    bool ok = true;
    for (std::size_t i = row; i < static_cast<std::size_t>(n); ++i)
      if (a[i][g] != 0) ok = false;
    for (std::size_t i = 0; i < row && ok; ++i)
      if (denominator(a[i][g]) != 1) ok = false;
    if (!ok) return tau;
  }
  return std::nullopt;
}

}  // namespace oracle

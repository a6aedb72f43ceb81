#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/isomorphism.hpp"
#include "matroid/matroid.hpp"
#include "matroid/structure.hpp"

namespace matroid {

/// A minor together with index_map[new] = old element.
struct Minor {
  Matroid matroid;
  std::vector<int> index_map;
};

namespace detail {

inline std::vector<int> index_map_of(Mask keep) { return elements(keep); }

inline void check_inside(const Matroid& m, Mask x, const char* what) {
  if (!is_subset(x, m.ground()))
    fail(ErrorCode::BoundsViolation, std::string(what) + ": " + to_string(x) + " leaves E");
}

}  // namespace detail

/// M \ X, re-indexed densely.
inline Minor delete_elements(const Matroid& m, Mask x) {
  detail::check_inside(m, x, "delete");
  const Mask keep = m.ground() & ~x;
  if (keep == 0 && m.size() > 0) fail(ErrorCode::EmptyGroundSet, "deleting every element");
  int best = 0;
  for (Mask b : m.bases()) best = std::max(best, popcount(b & keep));
  std::vector<Mask> out;
  for (Mask b : m.bases())
    if (popcount(b & keep) == best) out.push_back(compress(b & keep, keep));
  return {detail::trusted(popcount(keep), std::move(out)), detail::index_map_of(keep)};
}

/// M / X, re-indexed densely. r(M/X) = r(M) - r(X).
inline Minor contract_elements(const Matroid& m, Mask x) {
  detail::check_inside(m, x, "contract");
  const Mask keep = m.ground() & ~x;
  if (keep == 0 && m.size() > 0) fail(ErrorCode::EmptyGroundSet, "contracting every element");
  const int rx = m.rank(x);
  std::vector<Mask> out;
  for (Mask b : m.bases())
    if (popcount(b & x) == rx) out.push_back(compress(b & keep, keep));
  return {detail::trusted(popcount(keep), std::move(out)), detail::index_map_of(keep)};
}

/// M|T = M \ (E - T).
inline Minor restrict_to(const Matroid& m, Mask t) {
  detail::check_inside(m, t, "restrict");
  return delete_elements(m, m.ground() & ~t);
}

inline Matroid dual(const Matroid& m) {
  std::vector<Mask> out;
  out.reserve(m.basis_count());
  for (Mask b : m.bases()) out.push_back(m.ground() & ~b);
  return detail::trusted(m.size(), std::move(out));
}

inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.size() + b.size() > max_ground_set)
    fail(ErrorCode::BoundsViolation, "direct sum exceeds 64 elements");
  std::vector<Mask> out;
  out.reserve(a.basis_count() * b.basis_count());
  for (Mask x : a.bases())
    for (Mask y : b.bases()) out.push_back(x | (y << a.size()));
  return detail::trusted(a.size() + b.size(), std::move(out));
}

/// Rank-k truncation: r'(S) = min(r(S), k); bases are the independent k-sets.
inline Matroid truncate(const Matroid& m, int k) {
  if (k < 0 || k > m.rank())
    fail(ErrorCode::BoundsViolation, "truncation rank " + std::to_string(k) + " outside 0.." +
                                         std::to_string(m.rank()));
  if (k == m.rank()) return m;
  std::vector<Mask> out;
  for (Mask b : m.bases()) {
    // every k-subset of b
    for_each_k_subset(popcount(b), k, [&](Mask s) { out.push_back(expand(s, b)); });
  }
  return detail::trusted(m.size(), std::move(out));
}

inline bool is_circuit_hyperplane(const Matroid& m, Mask x) {
  if (!is_subset(x, m.ground()) || m.rank() == 0) return false;
  if (popcount(x) != m.rank() || m.is_basis(x)) return false;
  if (m.rank(x) != m.rank() - 1) return false;
  bool minimal = true;
  for_each_element(x, [&](int i) { minimal = minimal && m.is_independent(x & ~bit(i)); });
  return minimal && m.closure(x) == x;
}

/// Adds the circuit-hyperplane X as a new basis.
inline Matroid relax(const Matroid& m, Mask x) {
  if (!is_circuit_hyperplane(m, x))
    fail(ErrorCode::NotCircuitHyperplane, to_string(x) + " is not a circuit-hyperplane");
  auto b = m.bases();
  b.push_back(x);
  return Matroid::from_bases(m.size(), std::move(b));
}

// ---------------------------------------------------------------- modular cuts

namespace detail {

/// Flats with precomputed covers and modular-pair meets, shared by cut checks
/// and enumeration.
struct CutContext {
  std::vector<Mask> flats;                         // decreasing rank
  std::vector<int> rank;
  std::vector<std::vector<int>> covers;            // indices of covering flats
  std::vector<std::vector<std::pair<int, int>>> modular_meets;  // (a, b) with a ∧ b = this
  std::vector<std::pair<Mask, int>> index;

  int find(Mask f) const {
    auto it = std::lower_bound(index.begin(), index.end(), std::pair<Mask, int>{f, -1});
    return (it != index.end() && it->first == f) ? it->second : -1;
  }
};

inline CutContext cut_context(const Matroid& m) {
  CutContext c;
  auto fam = flats_by_rank(m);
  for (int r = fam.top_rank(); r >= 0; --r)
    for (Mask f : fam.of_rank(r)) {
      c.flats.push_back(f);
      c.rank.push_back(r);
    }
  const int k = static_cast<int>(c.flats.size());
  for (int i = 0; i < k; ++i) c.index.emplace_back(c.flats[i], i);
  std::sort(c.index.begin(), c.index.end());
  c.covers.resize(k);
  c.modular_meets.resize(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (c.rank[j] == c.rank[i] + 1 && is_subset(c.flats[i], c.flats[j])) c.covers[i].push_back(j);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const Mask a = c.flats[i], b = c.flats[j];
      if (is_subset(a, b) || is_subset(b, a)) continue;
      const int meet = c.find(a & b);
      if (c.rank[i] + c.rank[j] == c.rank[meet] + m.rank(a | b))
        c.modular_meets[meet].emplace_back(i, j);
    }
  return c;
}

}  // namespace detail

/// Empty string if `family` is a modular cut of M, otherwise a witness.
inline std::string modular_cut_witness(const Matroid& m, const std::vector<Mask>& family) {
  auto c = detail::cut_context(m);
  std::vector<char> in(c.flats.size(), 0);
  for (Mask f : family) {
    const int i = c.find(f);
    if (i < 0) return to_string(f) + " is not a flat";
    in[i] = 1;
  }
  for (std::size_t i = 0; i < c.flats.size(); ++i) {
    if (in[i]) {
      for (int j : c.covers[i])
        if (!in[j]) return "not up-closed: " + to_string(c.flats[i]) + " in, " + to_string(c.flats[j]) + " out";
    } else {
      for (auto [a, b] : c.modular_meets[i])
        if (in[a] && in[b])
          return "modular pair " + to_string(c.flats[a]) + ", " + to_string(c.flats[b]) +
                 " meets outside the cut";
    }
  }
  return {};
}

inline bool is_modular_cut(const Matroid& m, const std::vector<Mask>& family) {
  return modular_cut_witness(m, family).empty();
}

/// Every modular cut of M (including the empty cut), each sorted ascending.
/// Flats are decided in decreasing rank. Choosing "in" adds the smallest cut
/// containing the current one plus the flat (covers upward, modular meets
/// downward) and is abandoned if that touches an excluded flat; choosing "out"
/// is always consistent, so every branch ends in a cut.
inline std::vector<std::vector<Mask>> modular_cuts(const Matroid& m) {
  auto c = detail::cut_context(m);
  const int k = static_cast<int>(c.flats.size());
  std::vector<std::vector<int>> meet(k, std::vector<int>(k, -1));
  for (int f = 0; f < k; ++f)
    for (auto [a, b] : c.modular_meets[f]) meet[a][b] = meet[b][a] = f;
  std::vector<std::vector<Mask>> out;
  std::vector<signed char> st(k, 0);  // 1 in, -1 out, 0 open
  std::vector<int> in_list, trail;

  auto add = [&](int x) {
    std::vector<int> work{x};
    while (!work.empty()) {
      const int y = work.back();
      work.pop_back();
      if (st[y] == 1) continue;
      if (st[y] == -1) return false;
      st[y] = 1;
      trail.push_back(y);
      for (int g : in_list)
        if (meet[y][g] >= 0 && st[meet[y][g]] != 1) work.push_back(meet[y][g]);
      in_list.push_back(y);
      for (int z : c.covers[y])
        if (st[z] != 1) work.push_back(z);
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      st[trail.back()] = 0;
      trail.pop_back();
      in_list.pop_back();
    }
  };
  std::function<void(int)> go = [&](int i) {
    while (i < k && st[i] != 0) ++i;
    if (i == k) {
      std::vector<Mask> cut;
      for (int j = 0; j < k; ++j)
        if (st[j] == 1) cut.push_back(c.flats[j]);
      std::sort(cut.begin(), cut.end());
      out.push_back(std::move(cut));
      return;
    }
    const std::size_t mark = trail.size();
    if (add(i)) go(i + 1);
    undo(mark);
    st[i] = -1;
    go(i + 1);
    st[i] = 0;
  };
  go(0);
  return out;
}

namespace detail {

/// Single-element extension by a cut already known to be modular. The new
/// element is n. r'(S + p) = r(S) when cl(S) is in the cut, r(S) + 1 otherwise.
inline std::vector<Mask> extension_bases(const Matroid& m, const std::vector<Mask>& cut) {
  const int n = m.size();
  const Mask p = bit(n);
  std::vector<Mask> sorted_cut = cut;
  std::sort(sorted_cut.begin(), sorted_cut.end());
  auto in_cut = [&](Mask f) { return std::binary_search(sorted_cut.begin(), sorted_cut.end(), f); };
  std::vector<Mask> out;
  if (!in_cut(m.ground())) {
    for (Mask b : m.bases()) out.push_back(b | p);
    return out;
  }
  out = m.bases();
  if (m.rank() == 0) return out;
  std::vector<Mask> seen;
  for (Mask b : m.bases())
    for_each_element(b, [&](int i) { seen.push_back(b & ~bit(i)); });
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (Mask s : seen)
    if (!in_cut(m.closure(s))) out.push_back(s | p);
  return out;
}

}  // namespace detail

/// M +_cut p, with p the new last element. The cut is validated and so is the result.
inline Matroid extend(const Matroid& m, const std::vector<Mask>& cut) {
  if (m.size() >= max_ground_set) fail(ErrorCode::BoundsViolation, "extension exceeds 64 elements");
  if (auto w = modular_cut_witness(m, cut); !w.empty()) fail(ErrorCode::NotModularCut, w);
  Matroid out = Matroid::from_bases(m.size() + 1, detail::extension_bases(m, cut));
  if (delete_elements(out, bit(m.size())).matroid != m)
    fail(ErrorCode::Internal, "extension does not delete back to M");
  return out;
}

/// Flats containing F.
inline std::vector<Mask> principal_cut(const Matroid& m, Mask f) {
  if (!is_subset(f, m.ground()) || !m.is_flat(f)) fail(ErrorCode::NotAFlat, to_string(f));
  std::vector<Mask> out;
  for (Mask g : flats_by_rank(m).all())
    if (is_subset(f, g)) out.push_back(g);
  return out;
}

inline Matroid principal_extension(const Matroid& m, Mask f) { return extend(m, principal_cut(m, f)); }

inline Matroid free_extension(const Matroid& m) { return principal_extension(m, m.ground()); }

/// M × e = (M* + e)*.
inline Matroid free_coextension(const Matroid& m) { return dual(free_extension(dual(m))); }

/// Some M / C \ D is isomorphic to N (C independent, D coindependent).
inline bool has_minor(const Matroid& m, const Matroid& n) {
  if (m.size() > isomorphism_cap)
    fail(ErrorCode::GroundSetTooLarge,
         "minor search is limited to " + std::to_string(isomorphism_cap) + " elements");
  const int drop = m.size() - n.size();
  const int c_size = m.rank() - n.rank();
  if (drop < 0 || c_size < 0 || c_size > drop) return false;
  const int d_size = drop - c_size;
  if (d_size > m.size() - m.rank()) return false;
  const auto sig = isomorphism_signature(n);
  bool found = false;
  for_each_k_subset(m.size(), c_size, [&](Mask c) {
    if (found || !m.is_independent(c)) return;
    auto mc = contract_elements(m, c).matroid;
    if (mc.size() == 0) {
      found = n.size() == 0;
      return;
    }
    for_each_k_subset(mc.size(), d_size, [&](Mask d) {
      if (found) return;
      if (d == mc.ground()) {
        found = n.size() == 0;
        return;
      }
      auto minor = delete_elements(mc, d).matroid;
      if (minor.rank() != n.rank() || minor.basis_count() != n.basis_count()) return;
      if (isomorphism_signature(minor) != sig) return;
      found = is_isomorphic(minor, n);
    });
  });
  return found;
}

/// f maps E1 ∪ {o1} to E2 ∪ {o2}: f[i] for i < |E1| is an element of E2 or
/// |E2| (standing for o2), and f[|E1|] = |E2|. Strong iff the preimage of every
/// flat of M2 ⊕ U_{0,1} is a flat of M1 ⊕ U_{0,1}.
inline bool is_strong_map(const Matroid& m1, const Matroid& m2, const std::vector<int>& f) {
  const int n1 = m1.size(), n2 = m2.size();
  if (static_cast<int>(f.size()) != n1 + 1)
    fail(ErrorCode::InvalidArgument, "map must have |E1| + 1 entries");
  if (f[n1] != n2) fail(ErrorCode::InvalidArgument, "the extra point must map to the extra point");
  for (int i = 0; i < n1; ++i)
    if (f[i] < 0 || f[i] > n2) fail(ErrorCode::BoundsViolation, "map entry out of range");
  for (Mask flat : flats_by_rank(m2).all()) {
    Mask pre = 0;
    for (int i = 0; i < n1; ++i)
      if (f[i] == n2 || contains(flat, f[i])) pre |= bit(i);
    if (!m1.is_flat(pre)) return false;
  }
  return true;
}

}  // namespace matroid

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

/// Backtracking isomorphism search refuses ground sets above this size.
inline constexpr int isomorphism_cap = 12;

namespace detail {

struct ElementProfile {
  std::vector<std::uint32_t> degree;               // bases containing e
  std::vector<std::vector<std::uint32_t>> pair;    // bases containing {e, f}
  std::vector<std::vector<std::uint32_t>> key;     // degree then sorted pair row
};

inline ElementProfile element_profile(const Matroid& m) {
  const int n = m.size();
  ElementProfile p;
  p.degree.assign(n, 0);
  p.pair.assign(n, std::vector<std::uint32_t>(n, 0));
  for (Mask b : m.bases()) {
    for_each_element(b, [&](int i) {
      ++p.degree[i];
      for_each_element(b & ~bit(i), [&](int j) { ++p.pair[i][j]; });
    });
  }
  p.key.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> row;
    for (int j = 0; j < n; ++j)
      if (j != i) row.push_back(p.pair[i][j]);
    std::sort(row.begin(), row.end());
    p.key[i].push_back(p.degree[i]);
    p.key[i].insert(p.key[i].end(), row.begin(), row.end());
  }
  return p;
}

}  // namespace detail

/// A cheap isomorphism invariant: equal matroids up to relabelling share it.
inline std::vector<std::uint32_t> isomorphism_signature(const Matroid& m) {
  auto p = detail::element_profile(m);
  std::vector<std::uint32_t> out{static_cast<std::uint32_t>(m.size()),
                                 static_cast<std::uint32_t>(m.rank()),
                                 static_cast<std::uint32_t>(m.basis_count())};
  auto keys = p.key;
  std::sort(keys.begin(), keys.end());
  for (auto& k : keys) out.insert(out.end(), k.begin(), k.end());
  return out;
}

/// Some bijection E1 -> E2 carries bases onto bases. Returns the map (perm[i] = image
/// of i) through `witness` when non-null.
inline bool is_isomorphic(const Matroid& a, const Matroid& b, std::vector<int>* witness = nullptr) {
  if (a.size() > isomorphism_cap || b.size() > isomorphism_cap)
    fail(ErrorCode::GroundSetTooLarge,
         "isomorphism search is limited to " + std::to_string(isomorphism_cap) + " elements");
  if (a.size() != b.size() || a.rank() != b.rank() || a.basis_count() != b.basis_count())
    return false;
  const int n = a.size();
  auto pa = detail::element_profile(a);
  auto pb = detail::element_profile(b);
  {
    auto ka = pa.key, kb = pb.key;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return false;
  }
  // Assign the most constrained elements first.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> class_size(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pa.key[i] == pa.key[j]) ++class_size[i];
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return class_size[x] < class_size[y]; });

  std::vector<int> perm(n, -1);
  Mask used = 0;
  auto check_full = [&] {
    for (Mask s : a.bases()) {
      Mask t = 0;
      for_each_element(s, [&](int i) { t |= bit(perm[i]); });
      if (!b.is_basis(t)) return false;
    }
    return true;
  };
  std::function<bool(int)> go = [&](int depth) -> bool {
    if (depth == n) return check_full();
    const int x = order[depth];
    for (int y = 0; y < n; ++y) {
      if (contains(used, y) || pa.key[x] != pb.key[y]) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        const int z = order[k];
        ok = pa.pair[x][z] == pb.pair[y][perm[z]];
      }
      if (!ok) continue;
      perm[x] = y;
      used |= bit(y);
      if (go(depth + 1)) return true;
      used &= ~bit(y);
      perm[x] = -1;
    }
    return false;
  };
  if (!go(0)) return false;
  if (witness) *witness = perm;
  return true;
}

/// Relabels M by the bijection perm (element i becomes perm[i]).
inline Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(m.basis_count());
  for (Mask s : m.bases()) {
    Mask t = 0;
    for_each_element(s, [&](int i) { t |= bit(perm[i]); });
    out.push_back(t);
  }
  return detail::trusted(m.size(), std::move(out));
}

}  // namespace matroid

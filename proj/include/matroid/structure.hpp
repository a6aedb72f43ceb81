#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

/// The lattice of flats, grouped by rank 0..r(E).
class FlatFamily {
 public:
  FlatFamily() = default;
  FlatFamily(int n, std::vector<std::vector<Mask>> by_rank) : n_(n), by_rank_(std::move(by_rank)) {
    for (auto& level : by_rank_) std::sort(level.begin(), level.end());
    for (int r = 0; r < static_cast<int>(by_rank_.size()); ++r)
      for (Mask f : by_rank_[r]) index_.emplace_back(f, r);
    std::sort(index_.begin(), index_.end());
  }

  int ground_size() const noexcept { return n_; }
  int top_rank() const noexcept { return static_cast<int>(by_rank_.size()) - 1; }
  const std::vector<Mask>& of_rank(int r) const { return by_rank_.at(r); }
  const std::vector<std::vector<Mask>>& levels() const noexcept { return by_rank_; }
  std::size_t size() const noexcept { return index_.size(); }

  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out;
    for (const auto& l : by_rank_) out.push_back(l.size());
    return out;
  }

  /// Rank of the flat f, or -1 when f is not a flat.
  int rank_of(Mask f) const noexcept {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<Mask, int>{f, -1});
    return (it != index_.end() && it->first == f) ? it->second : -1;
  }

  bool contains(Mask f) const noexcept { return rank_of(f) >= 0; }

  /// All flats in order of increasing rank.
  std::vector<Mask> all() const {
    std::vector<Mask> out;
    out.reserve(size());
    for (const auto& l : by_rank_) out.insert(out.end(), l.begin(), l.end());
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Mask>> by_rank_;
  std::vector<std::pair<Mask, int>> index_;
};

namespace detail {

/// Checks the three flat axioms on an arbitrary family over {0..n-1}:
/// E is a member, the family is closed under intersection, and for each member F
/// the minimal members properly containing F partition E \ F.
/// Returns a witness description, or an empty string when all hold.
inline std::string flat_axiom_witness(int n, std::vector<Mask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const Mask g = full_mask(n);
  auto member = [&](Mask s) { return std::binary_search(family.begin(), family.end(), s); };
  if (!member(g)) return "E is not a member";
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      if (!member(family[a] & family[b]))
        return "intersection of " + to_string(family[a]) + " and " + to_string(family[b]) +
               " is missing";
  for (Mask f : family) {
    if (f == g) continue;
    std::vector<Mask> above;
    for (Mask h : family)
      if (h != f && is_subset(f, h)) above.push_back(h);
    Mask covered = 0;
    for (Mask h : above) {
      bool minimal = true;
      for (Mask k : above)
        if (k != h && is_subset(k, h)) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      const Mask part = h & ~f;
      if (covered & part)
        return "covers of " + to_string(f) + " overlap outside it (at " + to_string(h) + ")";
      covered |= part;
    }
    if (covered != (g & ~f)) return "covers of " + to_string(f) + " do not exhaust E \\ F";
  }
  return {};
}

template <typename RankFn>
Mask closure_with(RankFn&& rank, Mask ground, Mask s) {
  const int rs = rank(s);
  Mask out = s;
  for_each_element(ground & ~s, [&](int j) {
    if (rank(s | bit(j)) == rs) out |= bit(j);
  });
  return out;
}

template <typename RankFn>
FlatFamily build_flats(int n, int top, RankFn&& rank) {
  const Mask g = full_mask(n);
  std::vector<std::vector<Mask>> levels(top + 1);
  levels[0].push_back(closure_with(rank, g, 0));
  for (int r = 0; r < top; ++r) {
    std::vector<Mask>& next = levels[r + 1];
    for (Mask f : levels[r])
      for_each_element(g & ~f, [&](int j) { next.push_back(closure_with(rank, g, f | bit(j))); });
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
  }
  return FlatFamily(n, std::move(levels));
}

// Families larger than this skip the quadratic axiom re-check in flats_by_rank.
inline constexpr std::size_t flat_recheck_limit = 2048;

}  // namespace detail

/// Flats of M grouped by rank. Generated level by level as closures of covers,
/// then re-checked against the flat axioms (for families up to 2048 flats).
inline FlatFamily flats_by_rank(const Matroid& m) {
  FlatFamily fam;
  if (m.size() <= exhaustive_cap()) {
    RankTable rt(m);
    fam = detail::build_flats(m.size(), m.rank(), [&](Mask s) { return rt(s); });
  } else {
    fam = detail::build_flats(m.size(), m.rank(), [&](Mask s) { return m.rank(s); });
  }
  if (fam.size() <= detail::flat_recheck_limit) {
    if (auto w = detail::flat_axiom_witness(m.size(), fam.all()); !w.empty())
      fail(ErrorCode::Internal, "flat family failed its axioms: " + w);
  }
  return fam;
}

/// Minimal dependent sets. Every circuit is the fundamental circuit of some
/// element outside some basis, so the union of fundamental circuits is complete.
inline std::vector<Mask> circuits(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask b : m.bases()) {
    for_each_element(m.ground() & ~b, [&](int e) {
      Mask c = bit(e);
      for_each_element(b, [&](int x) {
        if (m.is_basis((b & ~bit(x)) | bit(e))) c |= bit(x);
      });
      out.push_back(c);
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Degeneracies {
  Mask loops = 0;
  Mask coloops = 0;
  bool simple = true;
  std::vector<std::pair<int, int>> parallel_pairs;
};

inline Degeneracies degeneracies(const Matroid& m) {
  Degeneracies d;
  d.loops = m.loops();
  d.coloops = m.coloops();
  const Mask live = m.ground() & ~d.loops;
  for_each_element(live, [&](int i) {
    for_each_element(live & ~full_mask(i + 1), [&](int j) {
      if (m.rank(bit(i) | bit(j)) == 1) d.parallel_pairs.emplace_back(i, j);
    });
  });
  d.simple = d.loops == 0 && d.parallel_pairs.empty();
  return d;
}

/// Connected components as a partition of E, ordered by smallest element.
/// i ~ j iff some basis B has (B \ i) ∪ j also a basis; loops and coloops come
/// out as singletons.
inline std::vector<Mask> connected_components(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mask b : m.bases()) {
    for_each_element(b, [&](int i) {
      for_each_element(m.ground() & ~b, [&](int j) {
        if (find(i) != find(j) && m.is_basis((b & ~bit(i)) | bit(j))) parent[find(i)] = find(j);
      });
    });
  }
  std::vector<Mask> comp(n, 0);
  for (int i = 0; i < n; ++i) comp[find(i)] |= bit(i);
  std::vector<Mask> out;
  for (Mask c : comp)
    if (c) out.push_back(c);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
  return out;
}

inline bool is_connected(const Matroid& m) { return connected_components(m).size() <= 1; }

}  // namespace matroid

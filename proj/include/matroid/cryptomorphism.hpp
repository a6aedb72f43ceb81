#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "matroid/matroid.hpp"
#include "matroid/structure.hpp"

namespace matroid {

enum class Crypto { RankTable, Flats, Independents };

namespace detail {

[[noreturn]] inline void axiom_fail(const char* kind, const std::string& w) {
  fail(ErrorCode::AxiomViolation, std::string(kind) + ": " + w);
}

inline std::vector<Mask> sets_of_size_with(int n, int k, auto&& pred) {
  std::vector<Mask> out;
  for_each_k_subset(n, k, [&](Mask s) {
    if (pred(s)) out.push_back(s);
  });
  return out;
}

}  // namespace detail

/// r(S) for every S, indexed by mask. Needs the exhaustive cap.
inline std::vector<int> export_rank_table(const Matroid& m) {
  RankTable rt(m);
  std::vector<int> out(std::size_t{1} << m.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = rt(s);
  return out;
}

inline std::vector<Mask> export_flats(const Matroid& m) { return flats_by_rank(m).all(); }

inline std::vector<Mask> export_independents(const Matroid& m) {
  std::vector<Mask> out;
  for (int k = 0; k <= m.rank(); ++k)
    for_each_k_subset(m.size(), k, [&](Mask s) {
      if (m.is_independent(s)) out.push_back(s);
    });
  std::sort(out.begin(), out.end());
  return out;
}

/// Checks r(∅)=0, unit increase and local submodularity
///   r(S+i) + r(S+j) >= r(S+i+j) + r(S),
/// which together imply the full rank axioms.
inline Matroid from_rank_table(int n, const std::vector<int>& r) {
  require_exhaustive(n, "rank-table validation");
  const std::size_t count = std::size_t{1} << n;
  if (r.size() != count)
    detail::axiom_fail("rank-table", "expected " + std::to_string(count) + " entries");
  if (r[0] != 0) detail::axiom_fail("rank-table", "r({}) != 0");
  for (std::size_t s = 0; s < count; ++s) {
    for (int i = 0; i < n; ++i) {
      if (contains(s, i)) continue;
      const int d = r[s | bit(i)] - r[s];
      if (d < 0 || d > 1)
        detail::axiom_fail("rank-table", "r(" + to_string(s | bit(i)) + ") - r(" + to_string(s) +
                                             ") = " + std::to_string(d));
      for (int j = i + 1; j < n; ++j) {
        if (contains(s, j)) continue;
        if (r[s | bit(i)] + r[s | bit(j)] < r[s | bit(i) | bit(j)] + r[s])
          detail::axiom_fail("rank-table", "submodularity fails at S=" + to_string(s) +
                                               " i=" + std::to_string(i) +
                                               " j=" + std::to_string(j));
      }
    }
  }
  const int top = r[count - 1];
  auto bases = detail::sets_of_size_with(n, top, [&](Mask s) { return r[s] == top; });
  return Matroid::from_bases(n, std::move(bases));
}

/// Checks the flat axioms, then reads ranks off as heights in the lattice and
/// independence as r(cl S) = |S|.
inline Matroid from_flats(int n, std::vector<Mask> flats) {
  const Mask g = full_mask(n);
  for (Mask f : flats)
    if (!is_subset(f, g)) detail::axiom_fail("flats", to_string(f) + " leaves the ground set");
  if (auto w = detail::flat_axiom_witness(n, flats); !w.empty()) detail::axiom_fail("flats", w);
  std::sort(flats.begin(), flats.end(),
            [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  std::vector<int> height(flats.size(), 0);
  for (std::size_t i = 0; i < flats.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (flats[j] != flats[i] && is_subset(flats[j], flats[i]))
        height[i] = std::max(height[i], height[j] + 1);
  auto cl_height = [&](Mask s) {
    for (std::size_t i = 0; i < flats.size(); ++i)  // sorted by size: first superset is cl(S)
      if (is_subset(s, flats[i])) return height[i];
    return -1;
  };
  const int top = height.back();
  auto bases = detail::sets_of_size_with(n, top, [&](Mask s) { return cl_height(s) == top; });
  Matroid m = Matroid::from_bases(n, std::move(bases));
  auto back = export_flats(m);
  std::vector<Mask> given = flats;
  std::sort(given.begin(), given.end());
  std::sort(back.begin(), back.end());
  if (back != given) detail::axiom_fail("flats", "family is not the flat lattice of any matroid");
  return m;
}

/// Checks ∅ ∈ I, downward closure and augmentation.
inline Matroid from_independents(int n, std::vector<Mask> family) {
  const Mask g = full_mask(n);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  auto member = [&](Mask s) { return std::binary_search(family.begin(), family.end(), s); };
  if (!member(0)) detail::axiom_fail("independents", "empty set missing");
  for (Mask s : family) {
    if (!is_subset(s, g)) detail::axiom_fail("independents", to_string(s) + " leaves the ground set");
    for_each_element(s, [&](int i) {
      if (!member(s & ~bit(i)))
        detail::axiom_fail("independents", to_string(s & ~bit(i)) + " missing below " + to_string(s));
    });
  }
  for (Mask a : family)
    for (Mask b : family) {
      if (popcount(a) >= popcount(b)) continue;
      bool ok = false;
      for_each_element(b & ~a, [&](int j) { ok = ok || member(a | bit(j)); });
      if (!ok)
        detail::axiom_fail("independents",
                           "augmentation fails for I=" + to_string(a) + " J=" + to_string(b));
    }
  int top = 0;
  for (Mask s : family) top = std::max(top, popcount(s));
  std::vector<Mask> bases;
  for (Mask s : family)
    if (popcount(s) == top) bases.push_back(s);
  return Matroid::from_bases(n, std::move(bases));
}

/// Uniform entry point. For RankTable, data[S] is r(S); otherwise data lists subsets.
inline Matroid validate_cryptomorphic(Crypto kind, int n, const std::vector<std::uint64_t>& data) {
  if (n < 0 || n > max_ground_set) fail(ErrorCode::BoundsViolation, "ground set too large");
  switch (kind) {
    case Crypto::RankTable: {
      std::vector<int> r(data.begin(), data.end());
      return from_rank_table(n, r);
    }
    case Crypto::Flats: return from_flats(n, data);
    case Crypto::Independents: return from_independents(n, data);
  }
  fail(ErrorCode::InvalidArgument, "unknown cryptomorphism");
}

}  // namespace matroid

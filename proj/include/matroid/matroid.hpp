#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matroid/config.hpp"
#include "matroid/error.hpp"
#include "matroid/subset.hpp"

namespace matroid {

class Matroid;

namespace detail {
Matroid trusted(int n, std::vector<Mask> bases);
}

/// A matroid on the ground set {0, ..., n-1}, stored canonically as its sorted
/// list of bases. Values are immutable once constructed; two matroids compare
/// equal iff their canonical forms coincide (no isomorphism quotient).
class Matroid {
 public:
  /// Validates the basis axioms (nonempty, equicardinal, exchange) and returns
  /// the canonical matroid. Throws Error with a witness otherwise.
  static Matroid from_bases(int n, std::vector<Mask> bases);

  int size() const noexcept { return n_; }
  int rank() const noexcept { return rank_; }
  Mask ground() const noexcept { return full_mask(n_); }
  const std::vector<Mask>& bases() const noexcept { return bases_; }
  std::size_t basis_count() const noexcept { return bases_.size(); }

  /// r(S) = max over bases B of |B ∩ S|.
  int rank(Mask s) const noexcept {
    int best = 0;
    for (Mask b : bases_) {
      int c = popcount(b & s);
      if (c > best) {
        best = c;
        if (best == rank_) break;
      }
    }
    return best;
  }

  bool is_basis(Mask s) const noexcept {
    return std::binary_search(bases_.begin(), bases_.end(), s);
  }

  bool is_independent(Mask s) const noexcept {
    for (Mask b : bases_)
      if (is_subset(s, b)) return true;
    return false;
  }

  /// cl(S) = { j : r(S ∪ j) = r(S) }.
  Mask closure(Mask s) const noexcept {
    const int rs = rank(s);
    Mask out = s;
    for_each_element(ground() & ~s, [&](int j) {
      if (rank(s | bit(j)) == rs) out |= bit(j);
    });
    return out;
  }

  bool is_flat(Mask s) const noexcept { return closure(s) == s; }

  /// Elements in no basis.
  Mask loops() const noexcept {
    Mask u = 0;
    for (Mask b : bases_) u |= b;
    return ground() & ~u;
  }

  /// Elements in every basis.
  Mask coloops() const noexcept {
    Mask i = ground();
    for (Mask b : bases_) i &= b;
    return i;
  }

  bool operator==(const Matroid& o) const noexcept {
    return n_ == o.n_ && bases_ == o.bases_;
  }

  auto operator<=>(const Matroid& o) const noexcept {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    if (auto c = rank_ <=> o.rank_; c != 0) return c;
    return bases_ <=> o.bases_;
  }

 private:
  Matroid(int n, int rank, std::vector<Mask> bases)
      : n_(n), rank_(rank), bases_(std::move(bases)) {}

  friend Matroid detail::trusted(int n, std::vector<Mask> bases);

  int n_ = 0;
  int rank_ = 0;
  std::vector<Mask> bases_;
};

namespace detail {

inline void canonicalize(std::vector<Mask>& bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

/// Builds a matroid from a basis family already known to satisfy the axioms
/// (output of a construction that preserves matroids). Sorting is still done here.
inline Matroid trusted(int n, std::vector<Mask> bases) {
  canonicalize(bases);
  const int r = bases.empty() ? 0 : popcount(bases.front());
  return Matroid(n, r, std::move(bases));
}

/// Returns an empty string when `bases` (sorted, deduplicated, equicardinal)
/// satisfies exchange; otherwise a description of the failing (B1, B2, i).
inline std::string exchange_witness(const std::vector<Mask>& bases) {
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      if (b1 == b2) continue;
      const Mask only1 = b1 & ~b2;
      const Mask only2 = b2 & ~b1;
      bool ok = true;
      int bad = -1;
      for_each_element(only1, [&](int i) {
        if (!ok) return;
        bool found = false;
        for_each_element(only2, [&](int j) {
          if (!found && std::binary_search(bases.begin(), bases.end(), (b1 & ~bit(i)) | bit(j)))
            found = true;
        });
        if (!found) {
          ok = false;
          bad = i;
        }
      });
      if (!ok)
        return "B1=" + to_string(b1) + " B2=" + to_string(b2) + " i=" + std::to_string(bad);
    }
  }
  return {};
}

}  // namespace detail

inline Matroid Matroid::from_bases(int n, std::vector<Mask> bases) {
  if (n < 0 || n > max_ground_set)
    fail(ErrorCode::BoundsViolation, "ground set size " + std::to_string(n) + " not in 0..64");
  if (bases.empty()) fail(ErrorCode::EmptyFamily, "basis family is empty");
  const Mask g = full_mask(n);
  for (Mask b : bases)
    if (!is_subset(b, g))
      fail(ErrorCode::BoundsViolation, "basis " + to_string(b) + " leaves the ground set");
  detail::canonicalize(bases);
  const int r = popcount(bases.front());
  for (Mask b : bases)
    if (popcount(b) != r)
      fail(ErrorCode::UnequalCardinality,
           to_string(bases.front()) + " and " + to_string(b) + " differ in size");
  if (auto w = detail::exchange_witness(bases); !w.empty()) fail(ErrorCode::ExchangeFailure, w);
  return Matroid(n, r, std::move(bases));
}

inline Matroid matroid_from_bases(int n, std::vector<Mask> bases) {
  return Matroid::from_bases(n, std::move(bases));
}

inline int rank(const Matroid& m, Mask s) { return m.rank(s); }
inline Mask closure(const Matroid& m, Mask s) { return m.closure(s); }

/// Rank of every subset of E, computed once by dynamic programming over the
/// independence indicator. Meant for workloads that sweep all of 2^E.
class RankTable {
 public:
  explicit RankTable(const Matroid& m) : n_(m.size()) {
    require_exhaustive(n_, "rank table");
    const std::size_t count = std::size_t{1} << n_;
    std::vector<std::uint8_t> indep(count, 0);
    for (Mask b : m.bases()) indep[b] = 1;
    for (int i = 0; i < n_; ++i)
      for (std::size_t s = 0; s < count; ++s)
        if ((s >> i) & 1U) indep[s ^ bit(i)] |= indep[s];
    rank_.assign(count, 0);
    for (std::size_t s = 1; s < count; ++s) {
      if (indep[s]) {
        rank_[s] = static_cast<std::uint8_t>(popcount(s));
      } else {
        std::uint8_t best = 0;
        for_each_element(s, [&](int i) { best = std::max(best, rank_[s ^ bit(i)]); });
        rank_[s] = best;
      }
    }
  }

  int size() const noexcept { return n_; }
  int operator()(Mask s) const noexcept { return rank_[s]; }
  bool independent(Mask s) const noexcept { return rank_[s] == popcount(s); }

 private:
  int n_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace matroid

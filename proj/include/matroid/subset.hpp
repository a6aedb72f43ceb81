#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace matroid {

/// A subset of the ground set {0, ..., n-1}, bit i set iff element i is present.
using Mask = std::uint64_t;

inline constexpr int max_ground_set = 64;

constexpr Mask bit(int i) noexcept { return Mask{1} << i; }

/// Mask of the full ground set of size n (n <= 64).
constexpr Mask full_mask(int n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask s) noexcept { return std::popcount(s); }

constexpr bool contains(Mask s, int i) noexcept { return (s >> i) & 1U; }

constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

constexpr int lowest(Mask s) noexcept { return std::countr_zero(s); }

/// Calls f(i) for every element i of s in increasing order.
template <typename F>
constexpr void for_each_element(Mask s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

inline std::vector<int> elements(Mask s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for_each_element(s, [&](int i) { out.push_back(i); });
  return out;
}

inline Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= bit(e);
  return m;
}

/// Next mask with the same popcount (Gosper's hack). Undefined for s == 0.
constexpr Mask next_same_popcount(Mask s) noexcept {
  Mask c = s & (~s + 1);
  Mask r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

/// Calls f(S) for every k-subset S of {0..n-1}, in increasing numeric order
/// (which is colex order on the element tuples).
template <typename F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  Mask s = full_mask(k);
  const Mask limit = full_mask(n);
  while (true) {
    f(s);
    if (s == (limit & ~full_mask(n - k))) break;  // top k bits set: last one
    s = next_same_popcount(s);
  }
}

/// Calls f(T) for every subset T of s (including 0 and s itself).
template <typename F>
void for_each_subset_of(Mask s, F&& f) {
  Mask t = s;
  while (true) {
    f(t);
    if (t == 0) break;
    t = (t - 1) & s;
  }
}

/// "{0,2,5}" style rendering.
inline std::string to_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for_each_element(s, [&](int i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

/// Packs the elements of s that lie in `keep` down to consecutive indices.
/// Used after deletion/contraction to re-index the ground set densely.
inline Mask compress(Mask s, Mask keep) {
  Mask out = 0;
  int j = 0;
  for_each_element(keep, [&](int i) {
    if (contains(s, i)) out |= bit(j);
    ++j;
  });
  return out;
}

/// Inverse of compress: spreads the low bits of s over the positions of `keep`.
inline Mask expand(Mask s, Mask keep) {
  Mask out = 0;
  int j = 0;
  for_each_element(keep, [&](int i) {
    if (contains(s, j)) out |= bit(i);
    ++j;
  });
  return out;
}

}  // namespace matroid

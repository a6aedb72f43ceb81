#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "matroid/matroid.hpp"
#include "matroid/structure.hpp"

namespace matroid {

// The inequalities below are quantified over flats only. Both sides are sums of
// r(union of some X_i), and r(X ∪ Y) = r(cl X ∪ cl Y), so replacing every X_i by
// its closure changes no term: each tuple of subsets has a tuple of flats with
// identical left and right sides.

inline constexpr std::size_t default_flat_cap = 160;

struct IngletonWitness {
  std::array<Mask, 4> x{};
  int lhs = 0;
  int rhs = 0;
};

namespace detail {

inline std::function<int(Mask)> rank_oracle(const Matroid& m) {
  if (m.size() <= exhaustive_cap()) {
    auto rt = std::make_shared<RankTable>(m);
    return [rt](Mask s) { return (*rt)(s); };
  }
  return [&m](Mask s) { return m.rank(s); };
}

inline std::vector<Mask> capped_flats(const Matroid& m, std::size_t cap) {
  auto flats = flats_by_rank(m).all();
  if (flats.size() > cap)
    fail(ErrorCode::FlatCountTooLarge,
         std::to_string(flats.size()) + " flats exceed the cap of " + std::to_string(cap));
  return flats;
}

}  // namespace detail

/// r(X1)+r(X2)+r(X1X2X3)+r(X1X2X4)+r(X3X4) vs r(X1X2)+r(X1X3)+r(X1X4)+r(X2X3)+r(X2X4).
inline std::pair<int, int> ingleton_sides(const std::function<int(Mask)>& r, Mask x1, Mask x2, Mask x3,
                                          Mask x4) {
  const int lhs = r(x1) + r(x2) + r(x1 | x2 | x3) + r(x1 | x2 | x4) + r(x3 | x4);
  const int rhs = r(x1 | x2) + r(x1 | x3) + r(x1 | x4) + r(x2 | x3) + r(x2 | x4);
  return {lhs, rhs};
}

/// Every flat 4-tuple violating Ingleton's inequality. The inequality is
/// symmetric under X1 <-> X2 and X3 <-> X4, so only one tuple per orbit is
/// tested and all members of violating orbits are reported.
inline std::vector<IngletonWitness> ingleton_violations(const Matroid& m,
                                                        std::size_t flat_cap = default_flat_cap) {
  auto flats = detail::capped_flats(m, flat_cap);
  auto r = detail::rank_oracle(m);
  const std::size_t k = flats.size();
  std::vector<IngletonWitness> out;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      const Mask x1 = flats[a], x2 = flats[b], u = x1 | x2;
      const int base_l = r(x1) + r(x2), base_r = r(u);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = c; d < k; ++d) {
          const Mask x3 = flats[c], x4 = flats[d];
          const int lhs = base_l + r(u | x3) + r(u | x4) + r(x3 | x4);
          const int rhs = base_r + r(x1 | x3) + r(x1 | x4) + r(x2 | x3) + r(x2 | x4);
          if (lhs <= rhs) continue;
          for (int s = 0; s < (a == b ? 1 : 2); ++s)
            for (int t = 0; t < (c == d ? 1 : 2); ++t) {
              IngletonWitness w;
              w.x = {s ? x2 : x1, s ? x1 : x2, t ? x4 : x3, t ? x3 : x4};
              w.lhs = lhs;
              w.rhs = rhs;
              out.push_back(w);
            }
        }
    }
  return out;
}

struct KinserWitness {
  std::vector<Mask> x;  // X_1..X_k
  int lhs = 0;
  int rhs = 0;
};

struct KinserResult {
  std::vector<KinserWitness> violations;
  bool exhaustive = true;   // false when tuples were sampled
  std::uint64_t tuples_checked = 0;
};

/// Sides of Kinser's k-th inequality, with the free index on X_k:
/// r(X1X2) + r(X1X3Xk) + r(X3) + Σ_{i=4..k} (r(Xi) + r(X2 X_{i-1} Xi))
///   <= r(X1X3) + r(X1Xk) + r(X2X3) + Σ_{i=4..k} (r(X2Xi) + r(X_{i-1}Xi)).
inline std::pair<int, int> kinser_sides(const std::function<int(Mask)>& r, const std::vector<Mask>& x) {
  const std::size_t k = x.size();
  auto X = [&](std::size_t i) { return x[i - 1]; };
  int lhs = r(X(1) | X(2)) + r(X(1) | X(3) | X(k)) + r(X(3));
  int rhs = r(X(1) | X(3)) + r(X(1) | X(k)) + r(X(2) | X(3));
  for (std::size_t i = 4; i <= k; ++i) {
    lhs += r(X(i)) + r(X(2) | X(i - 1) | X(i));
    rhs += r(X(2) | X(i)) + r(X(i - 1) | X(i));
  }
  return {lhs, rhs};
}

/// Violations of Kinser's inequality over flat k-tuples. Always exhaustive for
/// k = 4; for larger k exhaustive when the tuple count is within `budget`,
/// otherwise `budget` seeded random tuples.
inline KinserResult kinser_check(const Matroid& m, int k, std::uint64_t budget = 2'000'000,
                                 std::uint64_t seed = 1, std::size_t flat_cap = default_flat_cap) {
  if (k < 4) fail(ErrorCode::BoundsViolation, "Kinser inequalities need k >= 4");
  auto flats = detail::capped_flats(m, flat_cap);
  auto r = detail::rank_oracle(m);
  const std::uint64_t f = flats.size();
  long double total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<long double>(f);
  KinserResult out;
  std::vector<Mask> x(k);
  auto test = [&] {
    ++out.tuples_checked;
    auto [l, rr] = kinser_sides(r, x);
    if (l > rr) out.violations.push_back({x, l, rr});
  };
  if (k == 4 || total <= static_cast<long double>(budget)) {
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      for (int i = 0; i < k; ++i) x[i] = flats[idx[i]];
      test();
      int p = k - 1;
      while (p >= 0 && ++idx[p] == f) idx[p--] = 0;
      if (p < 0) break;
    }
  } else {
    out.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, f - 1);
    for (std::uint64_t t = 0; t < budget; ++t) {
      for (int i = 0; i < k; ++i) x[i] = flats[pick(rng)];
      test();
    }
  }
  return out;
}

}  // namespace matroid

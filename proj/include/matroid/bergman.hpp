#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/invariants.hpp"
#include "matroid/linear_algebra.hpp"
#include "matroid/matroid.hpp"
#include "matroid/structure.hpp"

namespace matroid {

/// ∅ ⊊ F_1 ⊊ ... ⊊ F_k ⊊ E, indexing the cone spanned by e_{F_1}, ..., e_{F_k}
/// of the permutohedral fan. The empty flag is the origin.
using Flag = std::vector<Mask>;

inline bool is_valid_flag(int n, const Flag& f) {
  const Mask g = full_mask(n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0 || f[i] == g || !is_subset(f[i], g)) return false;
    if (i > 0 && (f[i - 1] == f[i] || !is_subset(f[i - 1], f[i]))) return false;
  }
  return true;
}

inline std::string to_string(const Flag& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " < " : "") + to_string(f[i]);
  return out + ")";
}

/// Integer weights on the k-dimensional cones of the permutohedral fan of an
/// n-element ground set. Absent flags carry 0; zeros are never stored.
struct MinkowskiWeight {
  int n = 0;
  int dim = 0;
  std::map<Flag, std::int64_t> values;

  std::int64_t operator()(const Flag& f) const {
    auto it = values.find(f);
    return it == values.end() ? 0 : it->second;
  }
  void add(const Flag& f, std::int64_t v) {
    if (v == 0) return;
    auto& slot = values[f];
    slot += v;
    if (slot == 0) values.erase(f);
  }
  bool operator==(const MinkowskiWeight& o) const {
    return n == o.n && dim == o.dim && values == o.values;
  }
  friend MinkowskiWeight operator*(std::int64_t k, MinkowskiWeight c) {
    if (k == 0) c.values.clear();
    for (auto& [f, v] : c.values) v *= k;
    return c;
  }
};

namespace detail {

/// All chains of flats with ranks lo..hi (one flat per rank), by walking covers.
inline void for_each_rank_chain(const FlatFamily& fam, int lo, int hi,
                                const std::function<void(const Flag&)>& f) {
  Flag chain;
  std::function<void(int, Mask)> go = [&](int r, Mask below) {
    if (r > hi) {
      f(chain);
      return;
    }
    for (Mask g : fam.of_rank(r)) {
      if (!chain.empty() && !is_subset(below, g)) continue;
      chain.push_back(g);
      go(r + 1, g);
      chain.pop_back();
    }
  };
  if (lo > hi) {
    f(chain);
    return;
  }
  go(lo, 0);
}

}  // namespace detail

/// Δ_M: weight 1 on every d-step flag of proper flats (d = r(M) - 1).
inline MinkowskiWeight bergman_weight(const Matroid& m) {
  detail::require_loopless(m, "bergman_weight");
  if (m.rank() == 0) fail(ErrorCode::InvalidArgument, "rank-0 matroid has no Bergman fan");
  auto fam = flats_by_rank(m);
  MinkowskiWeight c{m.size(), m.rank() - 1, {}};
  detail::for_each_rank_chain(fam, 1, m.rank() - 1, [&](const Flag& f) { c.values[f] = 1; });
  return c;
}

/// Δ_{M[r1,r2]}: |μ(∅, F_{r1})| on flags of flats F_{r1} ⊂ ... ⊂ F_{r2} with r(F_i) = i.
inline MinkowskiWeight truncation_weight(const Matroid& m, int r1, int r2) {
  detail::require_loopless(m, "truncation_weight");
  const int d = m.rank() - 1;
  if (r1 < 1 || r1 > r2 || r2 > d)
    fail(ErrorCode::BoundsViolation, "need 1 <= r1 <= r2 <= " + std::to_string(d));
  auto mu = mobius(m);
  MinkowskiWeight c{m.size(), r2 - r1 + 1, {}};
  detail::for_each_rank_chain(mu.flats(), r1, r2, [&](const Flag& f) {
    BigInt v = mu(f.front());
    if (v < 0) v = -v;
    c.add(f, static_cast<std::int64_t>(v));
  });
  return c;
}

namespace detail {

/// For every codimension-one face τ of the support: v_τ = Σ_{σ ⊃ τ} c(σ) e_S
/// in Z^n, S being the subset σ adds to τ.
inline std::map<Flag, std::vector<std::int64_t>> face_sums(const MinkowskiWeight& c) {
  std::map<Flag, std::vector<std::int64_t>> out;
  for (const auto& [sigma, val] : c.values) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      Flag tau = sigma;
      tau.erase(tau.begin() + static_cast<std::ptrdiff_t>(i));
      auto& v = out.try_emplace(tau, std::vector<std::int64_t>(c.n, 0)).first->second;
      for_each_element(sigma[i], [&](int e) { v[e] += val; });
    }
  }
  return out;
}

/// Blocks G_1, G_2 - G_1, ..., E - G_{k-1} of τ. v lies in the integer span of
/// e_{G_1}, ..., e_{G_{k-1}}, e_E iff it is constant on each block; returns the
/// block values innermost first, or nothing.
inline std::optional<std::vector<std::int64_t>> block_values(int n, const Flag& tau,
                                                            const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out;
  Mask prev = 0;
  auto block_const = [&](Mask block) -> std::optional<std::int64_t> {
    std::optional<std::int64_t> val;
    bool ok = true;
    for_each_element(block, [&](int e) {
      if (!val) val = v[e];
      else if (*val != v[e]) ok = false;
    });
    if (!ok) return std::nullopt;
    return val;
  };
  for (Mask g : tau) {
    auto b = block_const(g & ~prev);
    if (!b) return std::nullopt;
    out.push_back(*b);
    prev = g;
  }
  auto b = block_const(full_mask(n) & ~prev);
  if (!b) return std::nullopt;
  out.push_back(*b);
  return out;
}

}  // namespace detail

struct BalanceReport {
  bool ok = true;
  Flag witness;                       // τ where balancing fails
  std::vector<std::int64_t> residual;  // Σ c(σ) e_S at τ
};

/// Σ_{σ ⊃ τ} c(σ) e_S ∈ span(e_{G_1}, ..., e_{G_{k-1}}, e_E) at every face τ.
inline BalanceReport check_balancing(const MinkowskiWeight& c) {
  for (const auto& [tau, v] : detail::face_sums(c))
    if (!detail::block_values(c.n, tau, v)) return {false, tau, v};
  return {};
}

namespace detail {

enum class Divisor { Alpha, Beta };

/// Cup product with α = min(w) or β = min(-w) in the homogenized lattice, where
/// α'(e_S) = 0 and β'(e_S) = -1 for proper nonempty S, α'(e_E) = 1, β'(e_E) = -1.
/// With v_τ = Σ c(σ) e_S written over e_{G_i} and e_E, α'_τ(v) is the e_E
/// coefficient (v on the outer block) and β'_τ(v) is minus the coefficient sum
/// (v on the inner block).
inline MinkowskiWeight cup(const MinkowskiWeight& c, Divisor which) {
  if (c.dim == 0) fail(ErrorCode::WrongDimension, "cannot cup a 0-dimensional weight");
  MinkowskiWeight out{c.n, c.dim - 1, {}};
  std::map<Flag, std::int64_t> total;
  if (which == Divisor::Beta)
    for (const auto& [sigma, val] : c.values)
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        Flag tau = sigma;
        tau.erase(tau.begin() + static_cast<std::ptrdiff_t>(i));
        total[tau] += val;
      }
  for (const auto& [tau, v] : face_sums(c)) {
    auto blocks = block_values(c.n, tau, v);
    if (!blocks)
      fail(ErrorCode::NotBalanced, "at " + to_string(tau));
    if (which == Divisor::Alpha) {
      out.add(tau, blocks->back());
    } else {
      out.add(tau, total[tau] - blocks->front());
    }
  }
  return out;
}

}  // namespace detail

inline MinkowskiWeight cup_alpha(const MinkowskiWeight& c) { return detail::cup(c, detail::Divisor::Alpha); }
inline MinkowskiWeight cup_beta(const MinkowskiWeight& c) { return detail::cup(c, detail::Divisor::Beta); }

/// Value on the origin of a 0-dimensional weight.
inline std::int64_t degree(const MinkowskiWeight& c) {
  if (c.dim != 0) fail(ErrorCode::WrongDimension, "degree needs dimension 0, got " + std::to_string(c.dim));
  return c(Flag{});
}

enum class CupOrder { BetaFirst, AlphaFirst };

/// α^a β^b ∪ c.
inline MinkowskiWeight cup_power(MinkowskiWeight c, int alphas, int betas,
                                 CupOrder order = CupOrder::BetaFirst) {
  auto apply = [&](int k, auto fn) {
    for (int i = 0; i < k; ++i) c = fn(c);
  };
  if (order == CupOrder::BetaFirst) {
    apply(betas, cup_beta);
    apply(alphas, cup_alpha);
  } else {
    apply(alphas, cup_alpha);
    apply(betas, cup_beta);
  }
  return c;
}

/// deg(α^{d-r} β^r ∪ Δ_M).
inline std::int64_t mu_via_intersection(const Matroid& m, int r, CupOrder order = CupOrder::BetaFirst) {
  const int d = m.rank() - 1;
  if (r < 0 || r > d) fail(ErrorCode::BoundsViolation, "r must lie in 0.." + std::to_string(d));
  return degree(cup_power(bergman_weight(m), d - r, r, order));
}

/// deg(α^dim ∪ c) == 1.
inline bool fink_degree_test(const MinkowskiWeight& c) { return degree(cup_power(c, c.dim, 0)) == 1; }

/// α^{d-r2} β^{r1-1} ∪ Δ_M equals Δ_{M[r1,r2]}, flag by flag.
inline bool verify_truncation_identity(const Matroid& m, int r1, int r2) {
  const int d = m.rank() - 1;
  auto lhs = cup_power(bergman_weight(m), d - r2, r1 - 1);
  return lhs == truncation_weight(m, r1, r2);
}

}  // namespace matroid

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matroid/constructions.hpp"
#include "matroid/linear_algebra.hpp"
#include "matroid/matroid.hpp"
#include "matroid/operations.hpp"
#include "matroid/polynomial.hpp"
#include "matroid/structure.hpp"

namespace matroid {

/// μ(∅, F) for every flat F of a loopless matroid.
class MobiusTable {
 public:
  MobiusTable() = default;
  MobiusTable(FlatFamily flats, std::vector<BigInt> mu) : flats_(std::move(flats)), mu_(std::move(mu)) {
    auto all = flats_.all();
    for (std::size_t i = 0; i < all.size(); ++i) index_.emplace_back(all[i], i);
    std::sort(index_.begin(), index_.end());
  }

  const FlatFamily& flats() const noexcept { return flats_; }
  /// Values in the order of flats().all().
  const std::vector<BigInt>& values() const noexcept { return mu_; }

  const BigInt& operator()(Mask f) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<Mask, std::size_t>{f, 0});
    if (it == index_.end() || it->first != f) fail(ErrorCode::NotAFlat, to_string(f));
    return mu_[it->second];
  }

 private:
  FlatFamily flats_;
  std::vector<BigInt> mu_;
  std::vector<std::pair<Mask, std::size_t>> index_;
};

namespace detail {
inline void require_loopless(const Matroid& m, const char* what) {
  if (m.loops() != 0)
    fail(ErrorCode::LoopPresent, std::string(what) + ": loops " + to_string(m.loops()));
}
}  // namespace detail

/// μ(∅,F) = -Σ_{F' ⊊ F} μ(∅,F'), then re-checked against Weisner's identity
/// μ(∅,F) = -Σ_{F' ⋖ F, a ∉ F'} μ(∅,F') for every a ∈ F.
inline MobiusTable mobius(const Matroid& m) {
  detail::require_loopless(m, "mobius");
  auto fam = flats_by_rank(m);
  auto all = fam.all();
  std::vector<BigInt> mu(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i == 0) {
      mu[0] = 1;
      continue;
    }
    BigInt s = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (is_subset(all[j], all[i]) && all[j] != all[i]) s += mu[j];
    mu[i] = -s;
  }
  MobiusTable table(fam, mu);
  for (int r = 1; r <= fam.top_rank(); ++r) {
    for (Mask f : fam.of_rank(r)) {
      for_each_element(f, [&](int a) {
        BigInt s = 0;
        for (Mask g : fam.of_rank(r - 1))
          if (is_subset(g, f) && !contains(g, a)) s += table(g);
        if (-s != table(f))
          fail(ErrorCode::Internal, "Weisner identity fails at F=" + to_string(f) +
                                        " a=" + std::to_string(a));
      });
    }
  }
  return table;
}

enum class CharpolyAlgorithm { Mobius, Whitney, Delcon };

namespace detail {

inline Polynomial charpoly_mobius(const Matroid& m) {
  if (m.loops()) return {};
  auto t = mobius(m);
  const int r = m.rank();
  std::vector<BigInt> c(r + 1, 0);
  const auto& fam = t.flats();
  for (int k = 0; k <= r; ++k)
    for (Mask f : fam.of_rank(k)) c[r - k] += t(f);
  return Polynomial(std::move(c));
}

inline Polynomial charpoly_whitney(const Matroid& m) {
  RankTable rt(m);
  const int r = m.rank();
  std::vector<std::int64_t> c(r + 1, 0);
  const std::size_t count = std::size_t{1} << m.size();
  for (std::size_t s = 0; s < count; ++s) c[r - rt(s)] += (popcount(s) & 1) ? -1 : 1;
  return Polynomial(std::vector<BigInt>(c.begin(), c.end()));
}

struct CharpolyMemo {
  std::map<Matroid, Polynomial> memo;

  Polynomial operator()(const Matroid& m) {
    if (m.loops()) return {};
    const Mask co = m.coloops();
    if (co) {
      Polynomial base = co == m.ground() ? Polynomial::constant(1)
                                         : (*this)(delete_elements(m, co).matroid);
      Polynomial factor = Polynomial::constant(1);
      for (int i = 0; i < popcount(co); ++i) factor = factor * Polynomial::linear(-1);
      return factor * base;
    }
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    // every element is neither a loop nor a coloop here
    const Mask e = bit(m.size() - 1);
    Polynomial out = (*this)(delete_elements(m, e).matroid) - (*this)(contract_elements(m, e).matroid);
    memo.emplace(m, out);
    return out;
  }
};

}  // namespace detail

/// χ_M(q) by Möbius sum over flats, Whitney's subset sum, or deletion-contraction.
inline Polynomial charpoly(const Matroid& m, CharpolyAlgorithm alg = CharpolyAlgorithm::Mobius) {
  switch (alg) {
    case CharpolyAlgorithm::Mobius: return detail::charpoly_mobius(m);
    case CharpolyAlgorithm::Whitney: return detail::charpoly_whitney(m);
    case CharpolyAlgorithm::Delcon: {
      if (m.size() == 0) return Polynomial::constant(1);
      detail::CharpolyMemo memo;
      return memo(m);
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown algorithm");
}

/// μ^0..μ^d read off the flats not containing a:
/// μ^k = (-1)^k Σ_{r(F) = k, a ∉ F} μ(∅,F).
inline std::vector<BigInt> reduced_coefficients_via_flats(const MobiusTable& t, int a) {
  const auto& fam = t.flats();
  std::vector<BigInt> out;
  for (int k = 0; k < fam.top_rank(); ++k) {
    BigInt s = 0;
    for (Mask f : fam.of_rank(k))
      if (!contains(f, a)) s += t(f);
    out.push_back(k % 2 ? BigInt(-s) : s);
  }
  return out;
}

struct ReducedCharpoly {
  Polynomial poly;
  std::vector<BigInt> mu;  // μ^0 .. μ^d
};

/// χ_M(q) / (q - 1), checked against the flat-sum formula at a = 0.
inline ReducedCharpoly reduced_charpoly(const Matroid& m) {
  detail::require_loopless(m, "reduced_charpoly");
  if (m.rank() == 0) fail(ErrorCode::InvalidArgument, "reduced polynomial needs rank >= 1");
  auto t = mobius(m);
  Polynomial chi = detail::charpoly_mobius(m);
  BigInt rem;
  Polynomial red = chi.divide_linear(1, rem);
  if (rem != 0) fail(ErrorCode::NonzeroRemainder, "remainder " + rem.str());
  const int d = m.rank() - 1;
  std::vector<BigInt> mu;
  for (int k = 0; k <= d; ++k) {
    BigInt c = red.coeff(d - k);
    mu.push_back(k % 2 ? BigInt(-c) : c);
  }
  if (reduced_coefficients_via_flats(t, 0) != mu)
    fail(ErrorCode::Internal, "reduced coefficients disagree with the flat sum");
  return {red, mu};
}

enum class TutteAlgorithm { RankGenerating, Delcon };

namespace detail {

inline BiPolynomial tutte_rankgen(const Matroid& m) {
  RankTable rt(m);
  const int r = m.rank(), n = m.size();
  std::vector<std::vector<std::int64_t>> g(r + 1, std::vector<std::int64_t>(n - r + 1, 0));
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t s = 0; s < count; ++s) {
    const int rs = rt(s);
    ++g[r - rs][popcount(s) - rs];
  }
  BiPolynomial rg;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= n - r; ++j)
      if (g[i][j]) rg.add(i, j, g[i][j]);
  return rg.shifted(-1, -1);
}

struct TutteMemo {
  std::map<Matroid, BiPolynomial> memo;

  BiPolynomial operator()(const Matroid& m) {
    const Mask lo = m.loops(), co = m.coloops();
    if (lo | co) {
      BiPolynomial factor;
      factor.add(popcount(co), popcount(lo), 1);
      if ((lo | co) == m.ground()) return factor;
      return factor * (*this)(delete_elements(m, lo | co).matroid);
    }
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    const Mask e = bit(m.size() - 1);
    BiPolynomial out = (*this)(delete_elements(m, e).matroid) + (*this)(contract_elements(m, e).matroid);
    memo.emplace(m, out);
    return out;
  }
};

}  // namespace detail

/// T_M(x, y) by the rank-generating sum R(x-1, y-1) or by deletion-contraction.
inline BiPolynomial tutte(const Matroid& m, TutteAlgorithm alg = TutteAlgorithm::Delcon) {
  if (alg == TutteAlgorithm::RankGenerating) return detail::tutte_rankgen(m);
  if (m.size() == 0) {
    BiPolynomial one;
    one.add(0, 0, 1);
    return one;
  }
  detail::TutteMemo memo;
  return memo(m);
}

/// (-1)^{r(M)} T_M(1 - q, 0).
inline Polynomial charpoly_from_tutte(const BiPolynomial& t, int rank) {
  Polynomial p = t.at_y0_with_x(Polynomial(std::vector<BigInt>{1, -1}));
  return rank % 2 ? BigInt(-1) * p : p;
}

/// W_k = number of rank-k flats.
inline std::vector<BigInt> whitney_numbers(const Matroid& m) {
  std::vector<BigInt> out;
  for (auto c : flats_by_rank(m).counts()) out.emplace_back(c);
  return out;
}

/// f_i = number of independent i-sets, i = 0..r(M).
inline std::vector<BigInt> f_vector(const Matroid& m) {
  require_exhaustive(m.size(), "f-vector");
  std::vector<std::uint64_t> f(m.rank() + 1, 0);
  const int n = m.size();
  auto go = [&](auto&& self, Mask s, int next) -> void {
    ++f[popcount(s)];
    for (int j = next; j < n; ++j)
      if (m.is_independent(s | bit(j))) self(self, s | bit(j), j + 1);
  };
  go(go, 0, 0);
  return {f.begin(), f.end()};
}

/// f(q) = Σ f_i q^{r-i}.
inline Polynomial f_polynomial(const Matroid& m) {
  auto f = f_vector(m);
  return Polynomial(std::vector<BigInt>(f.rbegin(), f.rend()));
}

/// h(q) = f(q - 1).
inline Polynomial h_polynomial(const Matroid& m) { return f_polynomial(m).compose_linear(1, -1); }

struct LogConcavity {
  bool ok = true;
  int first_violation = -1;  // index i with |c_{i-1} c_{i+1}| > c_i^2
  bool internal_zeros = false;
  bool strict = true;        // every interior inequality strict
};

inline LogConcavity is_log_concave(const std::vector<BigInt>& c) {
  LogConcavity out;
  const int n = static_cast<int>(c.size());
  auto abs = [](const BigInt& v) { return v < 0 ? BigInt(-v) : v; };
  for (int i = 1; i + 1 < n; ++i) {
    const BigInt lhs = abs(c[i - 1] * c[i + 1]);
    const BigInt rhs = c[i] * c[i];
    if (lhs > rhs && out.ok) {
      out.ok = false;
      out.first_violation = i;
    }
    if (lhs >= rhs) out.strict = false;
  }
  int first = -1, last = -1;
  for (int i = 0; i < n; ++i)
    if (c[i] != 0) {
      if (first < 0) first = i;
      last = i;
    }
  for (int i = first; first >= 0 && i <= last; ++i)
    if (c[i] == 0) out.internal_zeros = true;
  return out;
}

/// Composition -> number of maximal chains producing it, where a chain
/// ∅ = E_0 ⊂ E_1 ⊂ ... ⊂ E_n = E contributes (r(E_k) - r(E_{k-1}) + 1)_k.
inline std::map<std::vector<int>, std::uint64_t> derksen_g(const Matroid& m) {
  constexpr int limit = 10;
  if (m.size() > limit)
    fail(ErrorCode::GroundSetTooLarge, "derksen_g enumerates n! chains; limited to 10 elements");
  RankTable rt(m);
  std::vector<int> perm(m.size());
  for (int i = 0; i < m.size(); ++i) perm[i] = i;
  std::map<std::vector<int>, std::uint64_t> out;
  std::vector<int> comp(m.size());
  do {
    Mask s = 0;
    int prev = 0;
    for (int k = 0; k < m.size(); ++k) {
      s |= bit(perm[k]);
      const int r = rt(s);
      comp[k] = r - prev + 1;
      prev = r;
    }
    ++out[comp];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct PointCount {
  BigInt count;  // vectors of V with every coordinate nonzero
  BigInt chi;    // χ_M(p)
  bool agrees() const { return count == chi; }
};

/// V is the row space of `rows` (which must be independent) over GF(p).
inline PointCount torus_point_count(std::int64_t p, const std::vector<std::vector<std::int64_t>>& rows,
                                    std::int64_t limit = 10'000'000) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p));
  const int k = static_cast<int>(rows.size());
  if (k == 0) fail(ErrorCode::InvalidArgument, "empty basis for V");
  if (matrix_rank(Field::gf(p), rows) != k) fail(ErrorCode::InvalidArgument, "rows are dependent");
  std::int64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= p;
    if (total > limit) fail(ErrorCode::EnumerationTooLarge, "p^dim V exceeds " + std::to_string(limit));
  }
  const std::size_t cols = rows[0].size();
  std::vector<std::int64_t> coef(k, 0);
  std::int64_t hits = 0;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t t = idx;
    for (int i = 0; i < k; ++i) {
      coef[i] = t % p;
      t /= p;
    }
    bool all_nonzero = true;
    for (std::size_t c = 0; c < cols && all_nonzero; ++c) {
      std::int64_t v = 0;
      for (int i = 0; i < k; ++i) v = (v + coef[i] * mod(rows[i][c], p)) % p;
      all_nonzero = v != 0;
    }
    hits += all_nonzero;
  }
  Matroid m = linear_matroid(Field::gf(p), rows);
  return {BigInt(hits), charpoly(m)(BigInt(p))};
}

}  // namespace matroid

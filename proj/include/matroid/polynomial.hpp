#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/linear_algebra.hpp"

namespace matroid {

/// Exact integer polynomial in q. Coefficients are stored by ascending power;
/// `descending()` gives the printing order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }
  static Polynomial constant(BigInt v) { return Polynomial(std::vector<BigInt>{std::move(v)}); }
  static Polynomial monomial(int k, BigInt v = 1) {
    std::vector<BigInt> c(k + 1, 0);
    c[k] = std::move(v);
    return Polynomial(std::move(c));
  }
  /// q + a
  static Polynomial linear(BigInt a) { return Polynomial(std::vector<BigInt>{std::move(a), 1}); }

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0); }
  const std::vector<BigInt>& ascending() const noexcept { return c_; }
  std::vector<BigInt> descending() const { return {c_.rbegin(), c_.rend()}; }

  BigInt operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const BigInt& k, Polynomial a) {
    for (auto& x : a.c_) x *= k;
    a.trim();
    return a;
  }
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  /// p(q) -> p(a q + b).
  Polynomial compose_linear(const BigInt& a, const BigInt& b) const {
    Polynomial out, power = constant(1);
    const Polynomial lin(std::vector<BigInt>{b, a});
    for (const auto& x : c_) {
      out += x * power;
      power = power * lin;
    }
    return out;
  }

  /// Divides by (q - root); returns quotient and sets the remainder.
  Polynomial divide_linear(const BigInt& root, BigInt& remainder) const {
    if (c_.empty()) {
      remainder = 0;
      return {};
    }
    std::vector<BigInt> q(c_.size() - 1, 0);
    BigInt acc = 0;
    for (int k = degree(); k >= 0; --k) {
      acc = acc * root + c_[k];
      if (k > 0) q[k - 1] = acc;
    }
    remainder = acc;
    return Polynomial(std::move(q));
  }

  /// "q^2 - 4q + 3" style, in variable `var`.
  std::string to_string(const std::string& var = "q") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const BigInt& v = c_[k];
      if (v == 0) continue;
      const BigInt mag = v < 0 ? BigInt(-v) : v;
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      if (mag != 1 || k == 0) out += mag.str();
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// Dense integer polynomial in x and y; coeff(i, j) multiplies x^i y^j.
class BiPolynomial {
 public:
  BiPolynomial() = default;
  BiPolynomial(int deg_x, int deg_y) : grid_(deg_x + 1, std::vector<BigInt>(deg_y + 1, 0)) {}

  int x_size() const noexcept { return static_cast<int>(grid_.size()); }
  int y_size() const noexcept { return grid_.empty() ? 0 : static_cast<int>(grid_[0].size()); }

  BigInt coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= x_size() || j >= y_size()) return 0;
    return grid_[i][j];
  }
  void add(int i, int j, const BigInt& v) {
    if (i >= x_size() || j >= y_size()) grow(std::max(i + 1, x_size()), std::max(j + 1, y_size()));
    grid_[i][j] += v;
  }

  BiPolynomial& operator+=(const BiPolynomial& o) {
    for (int i = 0; i < o.x_size(); ++i)
      for (int j = 0; j < o.y_size(); ++j)
        if (o.grid_[i][j] != 0) add(i, j, o.grid_[i][j]);
    return *this;
  }
  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) {
    for (int i = 0; i < b.x_size(); ++i)
      for (int j = 0; j < b.y_size(); ++j)
        if (b.grid_[i][j] != 0) a.add(i, j, -b.grid_[i][j]);
    return a;
  }
  friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
    BiPolynomial out;
    for (int i = 0; i < a.x_size(); ++i)
      for (int j = 0; j < a.y_size(); ++j) {
        if (a.grid_[i][j] == 0) continue;
        for (int k = 0; k < b.x_size(); ++k)
          for (int l = 0; l < b.y_size(); ++l)
            if (b.grid_[k][l] != 0) out.add(i + k, j + l, a.grid_[i][j] * b.grid_[k][l]);
      }
    return out;
  }

  /// Equality ignores trailing zero rows and columns.
  bool operator==(const BiPolynomial& o) const {
    const int xs = std::max(x_size(), o.x_size()), ys = std::max(y_size(), o.y_size());
    for (int i = 0; i < xs; ++i)
      for (int j = 0; j < ys; ++j)
        if (coeff(i, j) != o.coeff(i, j)) return false;
    return true;
  }

  /// T(y, x).
  BiPolynomial swapped() const {
    BiPolynomial out;
    for (int i = 0; i < x_size(); ++i)
      for (int j = 0; j < y_size(); ++j)
        if (grid_[i][j] != 0) out.add(j, i, grid_[i][j]);
    return out;
  }

  /// p(x + a, y + b), used to pass between rank-generating and Tutte forms.
  BiPolynomial shifted(const BigInt& a, const BigInt& b) const {
    BiPolynomial out;
    auto binom_row = [](int n) {
      std::vector<BigInt> r(n + 1, 1);
      for (int k = 1; k < n; ++k) r[k] = r[k - 1] * (n - k + 1) / k;
      return r;
    };
    for (int i = 0; i < x_size(); ++i)
      for (int j = 0; j < y_size(); ++j) {
        if (grid_[i][j] == 0) continue;
        auto bi = binom_row(i), bj = binom_row(j);
        for (int k = 0; k <= i; ++k) {
          BigInt ak = bi[k];
          for (int t = 0; t < i - k; ++t) ak *= a;
          for (int l = 0; l <= j; ++l) {
            BigInt bl = bj[l];
            for (int t = 0; t < j - l; ++t) bl *= b;
            out.add(k, l, grid_[i][j] * ak * bl);
          }
        }
      }
    return out;
  }

  BigInt operator()(const BigInt& x, const BigInt& y) const {
    BigInt acc = 0;
    for (int i = x_size() - 1; i >= 0; --i) {
      BigInt row = 0;
      for (int j = y_size() - 1; j >= 0; --j) row = row * y + grid_[i][j];
      acc = acc * x + row;
    }
    return acc;
  }

  /// T(p(q), 0) as a polynomial in q.
  Polynomial at_y0_with_x(const Polynomial& px) const {
    Polynomial out, power = Polynomial::constant(1);
    for (int i = 0; i < x_size(); ++i) {
      if (y_size() > 0 && grid_[i][0] != 0) out += grid_[i][0] * power;
      power = power * px;
    }
    return out;
  }

  bool nonnegative() const {
    for (const auto& row : grid_)
      for (const auto& v : row)
        if (v < 0) return false;
    return true;
  }

  /// Terms by descending x-degree, then ascending y-degree: "x^2 + 2x + 2y + y^2".
  std::string to_string() const {
    std::string out;
    for (int i = x_size() - 1; i >= 0; --i)
      for (int j = 0; j < y_size(); ++j) {
        const BigInt& v = grid_[i][j];
        if (v == 0) continue;
        const BigInt mag = v < 0 ? BigInt(-v) : v;
        if (out.empty()) {
          if (v < 0) out += "-";
        } else {
          out += v < 0 ? " - " : " + ";
        }
        if (mag != 1 || (i == 0 && j == 0)) out += mag.str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
        if (j >= 1) out += "y";
        if (j >= 2) out += "^" + std::to_string(j);
      }
    return out.empty() ? "0" : out;
  }

  /// (i, j, coefficient) for every nonzero term.
  std::vector<std::tuple<int, int, BigInt>> terms() const {
    std::vector<std::tuple<int, int, BigInt>> out;
    for (int i = x_size() - 1; i >= 0; --i)
      for (int j = 0; j < y_size(); ++j)
        if (grid_[i][j] != 0) out.emplace_back(i, j, grid_[i][j]);
    return out;
  }

 private:
  void grow(int xs, int ys) {
    grid_.resize(xs);
    for (auto& row : grid_) row.resize(ys, 0);
  }
  std::vector<std::vector<BigInt>> grid_;
};

}  // namespace matroid

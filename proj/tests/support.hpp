#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matroid/matroid_all.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name) { return std::string(MATROID_DATA_DIR) + "/" + name; }

inline const std::vector<matroid::Matroid>& database() {
  static const auto db = matroid::io::load_database(data_path("db_n8.txt"));
  return db;
}

/// Every k-th database member with at most max_n elements.
inline std::vector<matroid::Matroid> db_sample(int max_n, std::size_t stride) {
  std::vector<matroid::Matroid> out;
  const auto& db = database();
  for (std::size_t i = 0; i < db.size(); i += stride)
    if (db[i].size() <= max_n) out.push_back(db[i]);
  return out;
}

inline std::vector<std::vector<std::int64_t>> random_matrix(std::mt19937_64& rng, int rows, int cols,
                                                            std::int64_t p) {
  std::uniform_int_distribution<std::int64_t> d(0, p - 1);
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (auto& r : a)
    for (auto& x : r) x = d(rng);
  return a;
}

/// Random full-row-rank matrix over GF(p).
inline std::vector<std::vector<std::int64_t>> random_full_rank(std::mt19937_64& rng, int rows, int cols,
                                                               std::int64_t p) {
  while (true) {
    auto a = random_matrix(rng, rows, cols, p);
    if (matroid::matrix_rank(matroid::Field::gf(p), a) == rows) return a;
  }
}

inline matroid::Graph random_graph(std::mt19937_64& rng, int vertices, int edges) {
  std::uniform_int_distribution<int> v(0, vertices - 1);
  matroid::Graph g{vertices, {}};
  for (int i = 0; i < edges; ++i) g.edges.emplace_back(v(rng), v(rng));
  return g;
}

inline matroid::Matroid random_linear(std::mt19937_64& rng, std::int64_t p, int rows, int cols) {
  return matroid::linear_matroid(matroid::Field::gf(p), random_matrix(rng, rows, cols, p));
}

inline std::vector<matroid::Rational> random_weights(std::mt19937_64& rng, int n, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<matroid::Rational> w;
  for (int i = 0; i < n; ++i) w.emplace_back(d(rng), 1 + (d(rng) & 1));
  return w;
}

}  // namespace testing_support

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "matroid/isomorphism.hpp"
#include "matroid/matroid.hpp"
#include "matroid/operations.hpp"

namespace matroid {

/// Isomorphism classes, bucketed by signature so each candidate is compared
/// only against classes sharing it.
class ClassRegistry {
 public:
  /// Adds m unless an isomorphic matroid is already present; true if added.
  bool insert(const Matroid& m) {
    auto& bucket = buckets_[isomorphism_signature(m)];
    for (std::size_t i : bucket)
      if (is_isomorphic(reps_[i], m)) return false;
    bucket.push_back(reps_.size());
    reps_.push_back(m);
    return true;
  }
  const std::vector<Matroid>& representatives() const noexcept { return reps_; }

 private:
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> buckets_;
  std::vector<Matroid> reps_;
};

/// One representative of every isomorphism class of matroids on exactly k
/// elements, for k = 0..max_n. Every matroid on k elements is a single-element
/// extension of its deletion of the last element, so extending every class on
/// k - 1 elements by every modular cut reaches all classes on k.
/// Classes are ordered by rank, then canonical basis list.
inline std::vector<std::vector<Matroid>> enumerate_matroids(
    int max_n, const std::function<void(int, std::size_t)>& progress = {}) {
  if (max_n < 0 || max_n > isomorphism_cap)
    fail(ErrorCode::GroundSetTooLarge, "enumeration is limited to " + std::to_string(isomorphism_cap) +
                                           " elements");
  std::vector<std::vector<Matroid>> out;
  out.push_back({Matroid::from_bases(0, {0})});
  for (int k = 1; k <= max_n; ++k) {
    ClassRegistry reg;
    for (const Matroid& m : out.back())
      for (const auto& cut : modular_cuts(m)) reg.insert(detail::trusted(k, detail::extension_bases(m, cut)));
    auto reps = reg.representatives();
    std::sort(reps.begin(), reps.end());
    if (progress) progress(k, reps.size());
    out.push_back(std::move(reps));
  }
  return out;
}

}  // namespace matroid

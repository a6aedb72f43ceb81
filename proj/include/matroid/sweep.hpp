#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "matroid/bergman.hpp"
#include "matroid/invariants.hpp"
#include "matroid/operations.hpp"

namespace matroid {

enum class SweepCheck { Charpoly, Tutte, LogConcave, Balancing, MuIdentity, Fink, Truncation };

inline const std::vector<std::pair<std::string_view, SweepCheck>>& sweep_check_names() {
  static const std::vector<std::pair<std::string_view, SweepCheck>> names = {
      {"charpoly", SweepCheck::Charpoly},     {"tutte", SweepCheck::Tutte},
      {"logconcave", SweepCheck::LogConcave}, {"balancing", SweepCheck::Balancing},
      {"mu-identity", SweepCheck::MuIdentity}, {"fink", SweepCheck::Fink},
      {"truncation", SweepCheck::Truncation},
  };
  return names;
}

inline SweepCheck parse_sweep_check(std::string_view s) {
  for (auto [name, c] : sweep_check_names())
    if (name == s) return c;
  fail(ErrorCode::InvalidArgument, "unknown check '" + std::string(s) + "'");
}

inline std::string_view sweep_check_name(SweepCheck c) {
  for (auto [name, k] : sweep_check_names())
    if (k == c) return name;
  return "?";
}

enum class Outcome { Pass, Fail, Skip };

struct CheckResult {
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

namespace detail {

inline std::string poly_list(const std::vector<BigInt>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

inline CheckResult run_check(const Matroid& m, SweepCheck c) {
  const bool bergman_ok = m.loops() == 0 && m.rank() >= 1;
  const int d = m.rank() - 1;
  auto bad = [](std::string s) { return CheckResult{Outcome::Fail, std::move(s)}; };
  switch (c) {
    case SweepCheck::Charpoly: {
      auto a = charpoly(m, CharpolyAlgorithm::Mobius);
      auto b = charpoly(m, CharpolyAlgorithm::Whitney);
      auto e = charpoly(m, CharpolyAlgorithm::Delcon);
      if (!(a == b && b == e))
        return bad("mobius " + a.to_string() + ", whitney " + b.to_string() + ", delcon " + e.to_string());
      return {};
    }
    case SweepCheck::Tutte: {
      auto t1 = tutte(m, TutteAlgorithm::RankGenerating);
      auto t2 = tutte(m, TutteAlgorithm::Delcon);
      if (!(t1 == t2)) return bad("rankgen " + t1.to_string() + " vs delcon " + t2.to_string());
      if (!t1.nonnegative()) return bad("negative Tutte coefficient");
      if (!(charpoly_from_tutte(t1, m.rank()) == charpoly(m)))
        return bad("chi != (-1)^r T(1-q,0)");
      if (!(tutte(dual(m)) == t1.swapped())) return bad("T_{M*}(y,x) != T_M(x,y)");
      return {};
    }
    case SweepCheck::LogConcave: {
      if (!bergman_ok) return {Outcome::Skip, {}};
      auto full = charpoly(m).descending();
      auto red = reduced_charpoly(m).poly.descending();
      for (const auto* seq : {&full, &red}) {
        auto lc = is_log_concave(*seq);
        if (!lc.ok || lc.internal_zeros) return bad("not log-concave: " + poly_list(*seq));
      }
      return {};
    }
    case SweepCheck::Balancing: {
      if (!bergman_ok) return {Outcome::Skip, {}};
      auto rep = check_balancing(bergman_weight(m));
      if (!rep.ok) return bad("Delta_M unbalanced at " + to_string(rep.witness));
      for (int r1 = 1; r1 <= d; ++r1)
        for (int r2 = r1; r2 <= d; ++r2) {
          auto t = check_balancing(truncation_weight(m, r1, r2));
          if (!t.ok)
            return bad("truncation [" + std::to_string(r1) + "," + std::to_string(r2) +
                       "] unbalanced at " + to_string(t.witness));
        }
      return {};
    }
    case SweepCheck::MuIdentity: {
      if (!bergman_ok) return {Outcome::Skip, {}};
      auto mu = reduced_charpoly(m).mu;
      for (int r = 0; r <= d; ++r) {
        const auto x = mu_via_intersection(m, r, CupOrder::BetaFirst);
        const auto y = mu_via_intersection(m, r, CupOrder::AlphaFirst);
        if (BigInt(x) != mu[r] || BigInt(y) != mu[r])
          return bad("r=" + std::to_string(r) + ": degrees " + std::to_string(x) + "/" +
                     std::to_string(y) + " vs mu " + mu[r].str());
      }
      return {};
    }
    case SweepCheck::Fink: {
      if (!bergman_ok) return {Outcome::Skip, {}};
      if (!fink_degree_test(bergman_weight(m))) return bad("deg(alpha^d Delta_M) != 1");
      return {};
    }
    case SweepCheck::Truncation: {
      if (!bergman_ok) return {Outcome::Skip, {}};
      for (int r1 = 1; r1 <= d; ++r1)
        for (int r2 = r1; r2 <= d; ++r2)
          if (!verify_truncation_identity(m, r1, r2))
            return bad("identity fails for [" + std::to_string(r1) + "," + std::to_string(r2) + "]");
      return {};
    }
  }
  return bad("unknown check");
}

}  // namespace detail

struct SweepFailure {
  std::size_t index;
  SweepCheck check;
  std::string detail;
};

struct SweepTally {
  std::size_t passed = 0, failed = 0, skipped = 0;
};

struct SweepReport {
  std::size_t matroids = 0;
  std::map<SweepCheck, SweepTally> tally;
  std::vector<SweepFailure> failures;  // ordered by matroid index, then check order

  bool ok() const { return failures.empty(); }
  std::string summary() const {
    std::ostringstream os;
    os << "matroids: " << matroids << "\n";
    for (const auto& [c, t] : tally)
      os << sweep_check_name(c) << ": " << t.passed << " passed, " << t.failed << " failed, "
         << t.skipped << " skipped\n";
    os << "failures: " << failures.size() << "\n";
    return os.str();
  }
};

/// Runs every check on every matroid across `jobs` workers. Results are merged
/// by matroid index, so output does not depend on the worker count.
inline SweepReport sweep(const std::vector<Matroid>& db, const std::vector<SweepCheck>& checks,
                         unsigned jobs = 1) {
  std::vector<std::vector<CheckResult>> results(db.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < db.size();) {
      auto& row = results[i];
      for (SweepCheck c : checks) {
        try {
          row.push_back(detail::run_check(db[i], c));
        } catch (const std::exception& e) {
          row.push_back({Outcome::Fail, std::string("exception: ") + e.what()});
        }
      }
    }
  };
  jobs = std::max(1U, jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepReport rep;
  rep.matroids = db.size();
  for (SweepCheck c : checks) rep.tally[c];
  for (std::size_t i = 0; i < db.size(); ++i)
    for (std::size_t k = 0; k < checks.size(); ++k) {
      const auto& r = results[i][k];
      auto& t = rep.tally[checks[k]];
      if (r.outcome == Outcome::Pass) ++t.passed;
      else if (r.outcome == Outcome::Skip) ++t.skipped;
      else {
        ++t.failed;
        rep.failures.push_back({i, checks[k], r.detail});
      }
    }
  return rep;
}

}  // namespace matroid

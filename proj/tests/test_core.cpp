#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace matroid;
using testing_support::db_sample;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("from_bases builds and validates", "[core]") {
  auto u24 = Matroid::from_bases(4, {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
  CHECK(u24 == uniform(2, 4));
  CHECK(u24.rank() == 2);
  CHECK(Matroid::from_bases(3, {0b011, 0b101, 0b110}) == uniform(2, 3));
  CHECK(code_of([] { Matroid::from_bases(4, {0b0011, 0b1100}); }) == ErrorCode::ExchangeFailure);
  CHECK(code_of([] { Matroid::from_bases(3, {}); }) == ErrorCode::EmptyFamily);
  CHECK(code_of([] { Matroid::from_bases(3, {0b001, 0b011}); }) == ErrorCode::UnequalCardinality);
}

TEST_CASE("exchange failure names a witness", "[core]") {
  try {
    Matroid::from_bases(4, {0b0011, 0b1100});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("{0,1}") != std::string::npos);
  }
}

TEST_CASE("rank and closure", "[core]") {
  auto u24 = uniform(2, 4);
  CHECK(u24.rank(0) == 0);
  CHECK(u24.rank(0b0111) == 2);
  auto f = fano();
  CHECK(f.rank(0b0000111) == 2);  // columns 1, 2, 3 with 1 + 2 = 3
  CHECK(oracle::rank(f.bases(), 0b0000111) == 2);
  CHECK(uniform(2, 3).closure(0b011) == 0b111);
  CHECK(f.closure(0b0000011) == 0b0000111);
  CHECK(f.closure(f.ground()) == f.ground());
}

TEST_CASE("flats by rank", "[core]") {
  CHECK(flats_by_rank(uniform(2, 4)).counts() == std::vector<std::size_t>{1, 4, 1});
  CHECK(flats_by_rank(fano()).counts() == std::vector<std::size_t>{1, 7, 7, 1});
  auto u11 = flats_by_rank(uniform(1, 1));
  CHECK(u11.counts() == std::vector<std::size_t>{1, 1});
  CHECK(u11.all() == std::vector<Mask>{0, 1});
}

TEST_CASE("circuits", "[core]") {
  CHECK(circuits(uniform(2, 4)) == std::vector<Mask>{0b0111, 0b1011, 0b1101, 0b1110});
  CHECK(circuits(uniform(1, 1)).empty());
  CHECK(circuits(uniform(0, 1)) == std::vector<Mask>{1});
}

TEST_CASE("degeneracies", "[core]") {
  auto a = degeneracies(uniform(1, 1));
  CHECK(a.coloops == 1);
  CHECK(a.loops == 0);
  CHECK(a.simple);
  CHECK(degeneracies(uniform(0, 1)).loops == 1);
  auto c = degeneracies(uniform(1, 2));
  CHECK(c.loops == 0);
  CHECK(c.coloops == 0);
  CHECK_FALSE(c.simple);
  CHECK(c.parallel_pairs == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("connected components", "[core]") {
  CHECK(connected_components(uniform(2, 4)).size() == 1);
  CHECK(connected_components(direct_sum(uniform(1, 1), uniform(0, 1))) == std::vector<Mask>{0b01, 0b10});
  CHECK(connected_components(direct_sum(uniform(2, 3), uniform(2, 3))) == std::vector<Mask>{0b000111, 0b111000});
}

TEST_CASE("cryptomorphic validation", "[core]") {
  std::vector<std::uint64_t> rt;
  for (Mask s = 0; s < 8; ++s) rt.push_back(std::min(popcount(s), 2));
  CHECK(validate_cryptomorphic(Crypto::RankTable, 3, rt) == uniform(2, 3));

  std::vector<std::uint64_t> fl{0, 1, 2, 4, 8, 15};
  CHECK(validate_cryptomorphic(Crypto::Flats, 4, fl) == uniform(2, 4));

  std::vector<std::uint64_t> bad{0, 0, 0, 2};  // r({0}) = r({1}) = 0, r({0,1}) = 2
  CHECK(code_of([&] { validate_cryptomorphic(Crypto::RankTable, 2, bad); }) == ErrorCode::AxiomViolation);

  std::vector<std::uint64_t> not_closed{0, 1, 2, 7};  // covers of ∅ miss element 2
  CHECK(code_of([&] { validate_cryptomorphic(Crypto::Flats, 3, not_closed); }) == ErrorCode::AxiomViolation);

  std::vector<std::uint64_t> not_down{0, 3};  // {0,1} without its subsets
  CHECK(code_of([&] { validate_cryptomorphic(Crypto::Independents, 2, not_down); }) ==
        ErrorCode::AxiomViolation);
}

TEST_CASE("isomorphism", "[core]") {
  CHECK(is_isomorphic(uniform(2, 4), uniform(2, 4)));
  CHECK_FALSE(is_isomorphic(fano(), nonfano()));
  CHECK(is_isomorphic(uniform(2, 4), dual(uniform(2, 4))));
  std::vector<int> w;
  auto m = Matroid::from_bases(3, {0b011, 0b101});
  auto p = Matroid::from_bases(3, {0b011, 0b110});
  REQUIRE(is_isomorphic(m, p, &w));
  CHECK(relabel(m, w) == p);
  CHECK_THROWS_AS(is_isomorphic(uniform(3, 13), uniform(3, 13)), Error);
}

TEST_CASE("isomorphism agrees with permutation search", "[core][property]") {
  std::mt19937_64 rng(7);
  auto sample = db_sample(6, 3);
  std::uniform_int_distribution<std::size_t> pick(0, sample.size() - 1);
  for (int t = 0; t < 150; ++t) {
    const auto& a = sample[pick(rng)];
    const auto& b = sample[pick(rng)];
    if (a.size() != b.size() || a.rank() != b.rank()) continue;
    CHECK(is_isomorphic(a, b) == oracle::isomorphic(a.size(), a.bases(), b.bases()));
    std::vector<int> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(is_isomorphic(a, relabel(a, perm)));
  }
}

TEST_CASE("rank axioms and structure against brute force", "[core][property]") {
  for (const auto& m : db_sample(7, 5)) {
    const int n = m.size();
    auto r = oracle::rank_table(n, m.bases());
    for (Mask s = 0; s < r.size(); ++s) REQUIRE(m.rank(s) == r[s]);
    bool axioms = true;
    for (Mask s = 0; s < r.size() && axioms; ++s) {
      if (r[s] < 0 || r[s] > popcount(s)) axioms = false;
      for (Mask u = 0; u < r.size(); ++u)
        if (r[s | u] + r[s & u] > r[s] + r[u]) axioms = false;
    }
    CHECK(axioms);
    std::vector<Mask> from_rank;
    for (Mask s = 0; s < r.size(); ++s)
      if (popcount(s) == m.rank() && r[s] == m.rank()) from_rank.push_back(s);
    CHECK(from_rank == m.bases());
    CHECK(flats_by_rank(m).all().size() == oracle::flats(n, m.bases()).size());
    auto fl = flats_by_rank(m).all();
    std::sort(fl.begin(), fl.end());
    CHECK(fl == oracle::flats(n, m.bases()));
    CHECK(detail::flat_axiom_witness(n, fl).empty());
    CHECK(circuits(m) == oracle::circuits(n, m.bases()));
    for (Mask c : circuits(m)) {
      CHECK(m.rank(c) == popcount(c) - 1);
      for_each_element(c, [&](int i) { CHECK(m.is_independent(c & ~bit(i))); });
    }
    for (Mask s = 0; s < r.size(); s += 3) {
      const Mask cl = m.closure(s);
      CHECK(is_subset(s, cl));
      CHECK(m.rank(cl) == m.rank(s));
      CHECK(m.closure(cl) == cl);
    }
  }
}

TEST_CASE("cryptomorphism round trips", "[core][property]") {
  for (const auto& m : db_sample(7, 7)) {
    const int n = m.size();
    auto rt = export_rank_table(m);
    CHECK(validate_cryptomorphic(Crypto::RankTable, n, {rt.begin(), rt.end()}) == m);
    auto fl = export_flats(m);
    CHECK(validate_cryptomorphic(Crypto::Flats, n, {fl.begin(), fl.end()}) == m);
    auto ind = export_independents(m);
    CHECK(validate_cryptomorphic(Crypto::Independents, n, {ind.begin(), ind.end()}) == m);
  }
}

TEST_CASE("components reassemble the matroid", "[core][property]") {
  for (const auto& m : db_sample(7, 9)) {
    auto comps = connected_components(m);
    Mask seen = 0;
    for (Mask c : comps) {
      CHECK((seen & c) == 0);
      seen |= c;
    }
    CHECK(seen == m.ground());
    // M equals the sum of its restrictions, read back through the element order
    std::vector<int> order;
    Matroid sum = Matroid::from_bases(0, {0});
    for (Mask c : comps) {
      sum = direct_sum(sum, restrict_to(m, c).matroid);
      for (int e : elements(c)) order.push_back(e);
    }
    CHECK(relabel(sum, order) == m);
  }
}

TEST_CASE("exhaustive cap is configurable", "[core]") {
  const int old = exhaustive_cap();
  set_exhaustive_cap(4);
  CHECK_THROWS_AS(charpoly(uniform(2, 5), CharpolyAlgorithm::Whitney), Error);
  set_exhaustive_cap(old);
  CHECK(charpoly(uniform(2, 5), CharpolyAlgorithm::Whitney) == charpoly(uniform(2, 5)));
}

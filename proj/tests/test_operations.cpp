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

std::vector<std::vector<Mask>> sorted_cuts(std::vector<std::vector<Mask>> cuts) {
  for (auto& c : cuts) std::sort(c.begin(), c.end());
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace

TEST_CASE("deletion and contraction", "[operations]") {
  CHECK(delete_elements(uniform(2, 4), 0b1000).matroid == uniform(2, 3));
  auto c = contract_elements(uniform(2, 4), 0b0001);
  CHECK(c.matroid == uniform(1, 3));
  CHECK(c.index_map == std::vector<int>{1, 2, 3});
  auto with_loop = direct_sum(uniform(2, 3), uniform(0, 1));
  CHECK(contract_elements(with_loop, 0b1000).matroid.rank() == 2);
  CHECK(restrict_to(uniform(2, 4), 0b0111).matroid == uniform(2, 3));
  CHECK(code_of([] { delete_elements(uniform(2, 4), 0b1111); }) == ErrorCode::EmptyGroundSet);
  CHECK(code_of([] { contract_elements(uniform(2, 4), 0b1111); }) == ErrorCode::EmptyGroundSet);
  CHECK(contract_elements(uniform(2, 4), 0b0011).matroid.rank() == 0);
}

TEST_CASE("duality", "[operations]") {
  CHECK(dual(uniform(2, 4)) == uniform(2, 4));
  CHECK(dual(uniform(1, 1)) == uniform(0, 1));
  CHECK(dual(graphic(complete_graph(4))).basis_count() == 16);
  CHECK(dual(uniform(2, 5)) == uniform(3, 5));
}

TEST_CASE("direct sums", "[operations]") {
  CHECK(direct_sum(uniform(1, 1), uniform(1, 1)) == uniform(2, 2));
  auto s = direct_sum(uniform(2, 3), uniform(0, 1));
  CHECK(s.rank() == 2);
  CHECK(s.size() == 4);
  CHECK(s.loops() == 0b1000);
  CHECK(charpoly(direct_sum(uniform(2, 3), fano())) == charpoly(uniform(2, 3)) * charpoly(fano()));
}

TEST_CASE("truncation", "[operations]") {
  CHECK(truncate(uniform(3, 4), 2) == uniform(2, 4));
  CHECK(truncate(fano(), 3) == fano());
  CHECK(truncate(fano(), 2) == uniform(2, 7));
  CHECK(truncate(fano(), 0) == uniform(0, 7));
  CHECK_THROWS_AS(truncate(fano(), 4), Error);
  // rank function is min(r(S), k)
  auto t = truncate(pappus(), 2);
  for (Mask s = 0; s < (Mask{1} << 9); s += 7) CHECK(t.rank(s) == std::min(pappus().rank(s), 2));
}

TEST_CASE("relaxation", "[operations]") {
  CHECK(relax(fano(), named_data::fano_relaxed_line) == nonfano());
  CHECK(relax(pappus(), named_data::pappus_middle_line) == nonpappus());
  CHECK(code_of([] { relax(uniform(2, 4), 0b0111); }) == ErrorCode::NotCircuitHyperplane);
  CHECK(code_of([] { relax(uniform(2, 4), 0b0011); }) == ErrorCode::NotCircuitHyperplane);
}

TEST_CASE("single-element extensions", "[operations]") {
  auto u23 = uniform(2, 3);
  CHECK(extend(u23, {u23.ground()}) == free_extension(u23));
  CHECK(free_extension(u23) == uniform(2, 4));
  CHECK(extend(uniform(1, 1), {0b1}) == uniform(1, 2));
  CHECK(extend(u23, {}) == direct_sum(u23, uniform(1, 1)));
  auto fc = free_coextension(uniform(1, 2));
  CHECK(fc.rank() == 2);
  CHECK(fc.size() == 3);
  CHECK(principal_extension(fano(), 0b0000111).rank(0b10000111) == 2);
  CHECK(code_of([&] { principal_extension(fano(), 0b0000011); }) == ErrorCode::NotAFlat);
  // two points of U_{2,3} without their join E
  CHECK(code_of([&] { extend(u23, {0b001, 0b010}); }) == ErrorCode::NotModularCut);
  CHECK_FALSE(is_modular_cut(u23, {0b001, 0b010, 0b111}));
  CHECK(is_modular_cut(u23, {0b001, 0b111}));
}

TEST_CASE("modular cuts match a brute-force search", "[operations][property]") {
  for (const auto& m : db_sample(4, 1)) {
    auto fl = oracle::flats(m.size(), m.bases());
    REQUIRE(fl.size() <= 16);
    std::vector<std::vector<Mask>> expected;
    for (Mask pick = 0; pick < (Mask{1} << fl.size()); ++pick) {
      std::vector<Mask> family;
      for (std::size_t i = 0; i < fl.size(); ++i)
        if ((pick >> i) & 1) family.push_back(fl[i]);
      if (oracle::is_modular_cut(m.size(), m.bases(), family)) expected.push_back(family);
    }
    CHECK(sorted_cuts(modular_cuts(m)) == sorted_cuts(expected));
  }
}

TEST_CASE("is_modular_cut agrees with the oracle on random families", "[operations][property]") {
  std::mt19937_64 rng(21);
  for (const auto& m : db_sample(6, 13)) {
    auto fl = flats_by_rank(m).all();
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < 20; ++t) {
      std::vector<Mask> family;
      for (Mask f : fl)
        if (coin(rng)) family.push_back(f);
      CHECK(is_modular_cut(m, family) == oracle::is_modular_cut(m.size(), m.bases(), family));
    }
    // principal cuts are always modular
    for (Mask f : fl) CHECK(oracle::is_modular_cut(m.size(), m.bases(), principal_cut(m, f)));
  }
}

TEST_CASE("extension then deletion returns M", "[operations][property]") {
  for (const auto& m : db_sample(6, 11)) {
    if (m.size() == 0) continue;
    const Mask p = bit(m.size());
    for (const auto& cut : modular_cuts(m)) {
      auto e = extend(m, cut);
      REQUIRE(delete_elements(e, p).matroid == m);
      // flats F with F ∪ p a flat of the extension are exactly the cut
      std::vector<Mask> absorbed;
      for (Mask f : flats_by_rank(m).all())
        if (e.is_flat(f | p) && e.rank(f | p) == e.rank(f)) absorbed.push_back(f);
      auto c = cut;
      std::sort(c.begin(), c.end());
      std::sort(absorbed.begin(), absorbed.end());
      CHECK(absorbed == c);
    }
    CHECK(delete_elements(free_extension(m), p).matroid == m);
    CHECK(free_coextension(m).rank() == m.rank() + 1);
  }
}

TEST_CASE("duality and minor identities", "[operations][property]") {
  for (const auto& m : db_sample(8, 9)) {
    CHECK(dual(dual(m)) == m);
    const int d1 = m.rank();
    for (int i = 0; i < m.size(); ++i) {
      if (m.size() == 1) break;
      auto del = delete_elements(m, bit(i)).matroid;
      auto con = contract_elements(m, bit(i)).matroid;
      CHECK(dual(del) == contract_elements(dual(m), bit(i)).matroid);
      if (!contains(m.coloops(), i)) CHECK(del.rank() == d1);
      if (!contains(m.loops(), i)) CHECK(con.rank() == d1 - 1);
    }
  }
}

TEST_CASE("relaxation adds one basis", "[operations][property]") {
  int relaxed = 0;
  for (const auto& m : db_sample(7, 3)) {
    for (Mask c : circuits(m)) {
      if (!is_circuit_hyperplane(m, c)) continue;
      auto r = relax(m, c);
      CHECK(r.basis_count() == m.basis_count() + 1);
      CHECK(r.is_basis(c));
      ++relaxed;
    }
  }
  CHECK(relaxed > 0);
}

TEST_CASE("minors", "[operations]") {
  CHECK(has_minor(uniform(2, 4), uniform(2, 3)));
  CHECK_FALSE(has_minor(fano(), uniform(2, 4)));
  // non-Fano is not binary, so it has a U_{2,4} minor: contract 0, delete 4 and 6
  CHECK(has_minor(nonfano(), uniform(2, 4)));
  auto c = contract_elements(nonfano(), 0b0000001);
  REQUIRE(c.index_map == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(delete_elements(c.matroid, 0b101000).matroid == uniform(2, 4));
  CHECK_FALSE(has_minor(graphic(complete_graph(4)), uniform(2, 4)));
  CHECK(has_minor(uniform(3, 6), uniform(2, 4)));
  CHECK(has_minor(pappus(), uniform(2, 4)));
  CHECK(has_minor(nonfano(), nonfano()));
  CHECK_FALSE(has_minor(uniform(2, 4), uniform(2, 5)));
  CHECK_THROWS_AS(has_minor(uniform(3, 13), uniform(2, 4)), Error);
}

TEST_CASE("strong maps", "[operations]") {
  // identity on M ⊕ loop
  for (const auto& m : {fano(), uniform(2, 4), graphic(complete_graph(4))}) {
    std::vector<int> id(m.size() + 1);
    std::iota(id.begin(), id.end(), 0);
    CHECK(is_strong_map(m, m, id));
  }
  // contraction E ∪ o -> (E \ U) ∪ o, sending U to o
  auto m = fano();
  const Mask u = 0b0000101;
  auto c = contract_elements(m, u);
  std::vector<int> f(m.size() + 1, c.matroid.size());
  for (std::size_t k = 0; k < c.index_map.size(); ++k) f[c.index_map[k]] = static_cast<int>(k);
  CHECK(is_strong_map(m, c.matroid, f));
  // parallel pair onto a free pair: preimage of the flat {0} is not closed
  CHECK_FALSE(is_strong_map(uniform(1, 2), uniform(2, 2), {0, 1, 2}));
  // the identity the other way is strong
  CHECK(is_strong_map(uniform(2, 2), uniform(1, 2), {0, 1, 2}));
}

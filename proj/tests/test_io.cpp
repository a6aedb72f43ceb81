#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace matroid;
using testing_support::data_path;
using testing_support::database;

namespace {

std::string parse_error(std::string_view text, io::Format f) {
  try {
    io::parse(text, f);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    return e.what();
  }
  FAIL("parsed");
  return {};
}

}  // namespace

TEST_CASE("bases format", "[io]") {
  auto u = io::parse_bases("4 2\n01 02 03 12 13 23\n");
  CHECK(u == uniform(2, 4));
  CHECK(io::parse_bases("4 2 # U24\n{0,1} {0,2} 0,3 12 13 23") == uniform(2, 4));
  CHECK(io::parse_bases("3 0\n") == uniform(0, 3));
  CHECK(io::parse_bases("3 0\n-") == uniform(0, 3));
  CHECK(io::parse_bases(io::write_bases(fano())) == fano());
  CHECK(io::parse_bases(io::write_bases(vamos())) == vamos());
  CHECK(io::parse(io::read_file(data_path("u24.txt")), io::Format::Bases) == uniform(2, 4));
}

TEST_CASE("matrix and graph formats", "[io]") {
  auto f = io::parse(io::read_file(data_path("fano_gf2.txt")), io::Format::Matrix);
  CHECK(is_isomorphic(f, fano()));
  CHECK(io::parse_matrix("q\n2 3\n1 0 1/2\n0 1 -3") == uniform(2, 3));
  CHECK(io::parse_matrix("q\n1 2\n1 2/4") == uniform(1, 2));
  auto k4 = io::parse(io::read_file(data_path("k4.txt")), io::Format::Graph);
  CHECK(k4 == graphic(complete_graph(4)));
  CHECK(io::parse("fano", io::Format::Named) == fano());
  CHECK_THROWS_AS(io::parse_matrix("gf 4\n1 1\n1"), Error);
}

TEST_CASE("revlex format", "[io]") {
  auto all = io::parse_revlex(io::read_file(data_path("revlex_n4_r2.txt")));
  REQUIRE(all.size() == 4);
  CHECK(all[0] == uniform(2, 4));
  CHECK(all[1].bases() == std::vector<Mask>{0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  CHECK(all[2].bases() == std::vector<Mask>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010});
  CHECK(all[3].bases() == std::vector<Mask>{0b0011, 0b0110, 0b1010});
  CHECK(io::revlex_line(uniform(2, 4)) == "******");
  CHECK(io::revlex_line(all[3]) == "*0*0*0");
  CHECK(io::parse_revlex(io::write_revlex(all)) == all);
  CHECK(io::parse_revlex("3 0 1\n*") == std::vector<Matroid>{uniform(0, 3)});
}

TEST_CASE("parse errors carry positions", "[io]") {
  CHECK_THAT(parse_error("3 2\n01 02\n0x", io::Format::Bases), Catch::Matchers::ContainsSubstring("line 3"));
  CHECK_THAT(parse_error("3 2\n01 012", io::Format::Bases), Catch::Matchers::ContainsSubstring("line 2, column 4"));
  CHECK_THAT(parse_error("3 two", io::Format::Bases), Catch::Matchers::ContainsSubstring("column 3"));
  CHECK_THAT(parse_error("4 2 1\n*****", io::Format::Revlex), Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THAT(parse_error("4 2 2\n******", io::Format::Revlex), Catch::Matchers::ContainsSubstring("end of input"));
  CHECK_THAT(parse_error("q\n1 2\n1 1/0", io::Format::Matrix), Catch::Matchers::ContainsSubstring("zero denominator"));
  CHECK_THAT(parse_error("3 1\n0 5", io::Format::Graph), Catch::Matchers::ContainsSubstring("out of range"));
  // violates basis exchange
  CHECK_THROWS_AS(io::parse_bases("4 2\n01 23"), Error);
  CHECK_THROWS_AS(io::parse_revlex("4 2 1\n*0000*"), Error);
}

TEST_CASE("round trips on the database", "[io][property]") {
  const auto& db = database();
  for (std::size_t i = 0; i < db.size(); i += 5) {
    CHECK(io::from_revlex(db[i].size(), db[i].rank(), io::revlex_line(db[i])) == db[i]);
    CHECK(io::parse_bases(io::write_bases(db[i])) == db[i]);
  }
}

TEST_CASE("bundled database", "[io][database]") {
  const auto& db = database();
  std::vector<std::size_t> per_n(9, 0);
  for (const auto& m : db) {
    REQUIRE(m.size() <= 8);
    ++per_n[m.size()];
    // re-validate against the basis axioms
    CHECK_NOTHROW(Matroid::from_bases(m.size(), m.bases()));
  }
  CHECK(per_n == std::vector<std::size_t>{1, 2, 4, 8, 17, 38, 98, 306, 1724});
  CHECK(db.size() == 2198);
  // no two members of a small block are isomorphic
  for (std::size_t i = 0; i < db.size(); ++i)
    for (std::size_t j = i + 1; j < db.size() && db[j].size() == db[i].size(); ++j)
      if (db[i].size() <= 5 && db[i].rank() == db[j].rank())
        CHECK_FALSE(oracle::isomorphic(db[i].size(), db[i].bases(), db[j].bases()));
}

TEST_CASE("database equals a fresh enumeration", "[io][database]") {
  std::vector<Matroid> flat;
  for (auto& level : enumerate_matroids(8)) flat.insert(flat.end(), level.begin(), level.end());
  CHECK(flat == database());
}

TEST_CASE("sweep output does not depend on the worker count", "[io][sweep]") {
  auto sample = testing_support::db_sample(7, 4);
  std::vector<SweepCheck> checks;
  for (auto [name, c] : sweep_check_names()) checks.push_back(c);
  auto one = sweep(sample, checks, 1);
  auto three = sweep(sample, checks, 3);
  CHECK(one.summary() == three.summary());
  CHECK(one.failures.empty());
  CHECK(one.summary().find("failures: 0") != std::string::npos);
}

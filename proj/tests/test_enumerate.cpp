#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support/oracles.hpp"
#include "tileperm/enumerate.hpp"

using namespace tileperm;

// a_3 .. a_12.
static const std::uint64_t kLittleSchroeder[] = {1,    3,     11,    45,     197,
                                                 903,  4279,  20793, 103049, 518859};

TEST_CASE("a_n(m) formula against the table") {
  CHECK(a_n_m_formula(6, 2).str() == "21");
  CHECK(a_n_m_formula(8, 3).str() == "300");
  CHECK(a_n_m_formula(9, 4).str() == "1485");
  CHECK(a_n_m_formula(10, 7).str() == "1430");
  for (int n = 3; n <= 12; ++n) CHECK(a_n_m_formula(n, 0).str() == "1");
  CHECK_THROWS_AS(a_n_m_formula(6, 4), error);
  CHECK_THROWS_AS(a_n_m_formula(6, -1), error);
}

TEST_CASE("a_n formula is the little Schroeder sequence") {
  for (int n = 3; n <= 12; ++n)
    CHECK(a_n_formula(n).str() == std::to_string(kLittleSchroeder[n - 3]));
  CHECK(a_n_formula(7).str() == "197");
  CHECK(a_n_formula(9).str() == "4279");
  CHECK(a_n_formula(3).str() == "1");
}

TEST_CASE("generate_all counts and uniqueness") {
  CHECK(generate_all(3).size() == 1);
  CHECK(generate_all(6).size() == 45);
  CHECK(generate_all(10).size() == 20793);
  for (int n = 3; n <= 10; ++n) {
    std::vector<Tiling> all = generate_all(n);
    CHECK(all.size() == kLittleSchroeder[n - 3]);
    std::set<Tiling> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
  }
  CHECK_THROWS_MATCHES(generate_all(13), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::StartsWith("RankTooLarge")));
  CHECK(a_n_formula(13).str() == "2646723");
}

TEST_CASE("generate_all matches the backtracking oracle as a set") {
  for (int n = 3; n <= 9; ++n) {
    std::set<Tiling> got;
    for (const Tiling& t : generate_all(n)) got.insert(t);
    std::set<Tiling> expected;
    for (const auto& ds : oracles::noncrossing_sets(n))
      expected.insert(make_tiling(n, {ds.begin(), ds.end()}));
    CHECK(got == expected);
  }
}

TEST_CASE("generate_by_m") {
  CHECK(generate_by_m(6, 2).size() == 21);
  CHECK(generate_by_m(9, 4).size() == 1485);
  for (int n = 3; n <= 9; ++n) CHECK(generate_by_m(n, 0).size() == 1);
  for (int n = 3; n <= 10; ++n)
    for (int m = 0; m <= n - 3; ++m)
      CHECK(BigUint(generate_by_m(n, m).size()) == a_n_m_formula(n, m));
  CHECK_THROWS_AS(generate_by_m(6, 5), error);
}

TEST_CASE("shape_of") {
  CHECK(shape_of(make_tiling(8, {{2, 8}, {3, 5}, {5, 8}})) ==
        ShapePartition({2, 2, 1, 1}));
  CHECK(shape_of(make_tiling(9, {})) == ShapePartition({7}));
  CHECK(shape_of(make_tiling(5, {{1, 3}, {1, 4}})) == ShapePartition({1, 1, 1}));
}

TEST_CASE("generate_by_lambda") {
  CHECK(generate_by_lambda(7, ShapePartition({3, 2})).size() == 7);
  CHECK(generate_by_lambda(8, ShapePartition({2, 2, 1, 1})).size() == 180);
  for (int n = 4; n <= 9; ++n)
    CHECK(generate_by_lambda(n, ShapePartition({n - 2})).size() == 1);
  CHECK_THROWS_AS(generate_by_lambda(8, ShapePartition({3, 2})), error);
}

TEST_CASE("lambda cells per m sum back to a_n(m)") {
  for (int n = 3; n <= 10; ++n) {
    std::map<ShapePartition, std::uint64_t> counts = lambda_counts(n);
    for (int m = 0; m <= n - 3; ++m) {
      BigUint total;
      for (const ShapePartition& lam : partitions_with_parts(n - 2, m + 1)) {
        auto it = counts.find(lam);
        if (it != counts.end()) total += BigUint(it->second);
      }
      CHECK(total == a_n_m_formula(n, m));
    }
  }
}

TEST_CASE("partition parsing and replacement") {
  ShapePartition lam = parse_partition("2,2,1,1");
  CHECK(lam.parts == std::vector<int>{2, 2, 1, 1});
  CHECK(lam.alpha(1) == 2);
  CHECK(lam.alpha(2) == 2);
  CHECK(lam.replace({1, 1}, {2}) == ShapePartition({2, 2, 2}));
  CHECK(parse_partition("3 1 1") == ShapePartition({3, 1, 1}));
  CHECK_THROWS_AS(parse_partition(""), error);
  CHECK_THROWS_AS(parse_partition("2,x"), error);
  CHECK(partitions_with_parts(8, 3).front() == ShapePartition({6, 1, 1}));
  CHECK(partitions_with_parts(8, 3).back() == ShapePartition({3, 3, 2}));
}

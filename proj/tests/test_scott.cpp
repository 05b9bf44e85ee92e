#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tileperm/enumerate.hpp"
#include "tileperm/scott.hpp"

using namespace tileperm;

namespace {
Permutation sigma_of(int n, std::vector<std::pair<int, int>> ds) {
  return scott_perm(make_tiling(n, ds));
}
}  // namespace

TEST_CASE("untile permutation rotates backwards") {
  CHECK(sigma_of(4, {}).images == std::vector<int>{4, 1, 2, 3});
  CHECK(to_cycles(sigma_of(4, {})) == "(1432)");
  for (int n = 3; n <= 9; ++n) {
    Permutation sigma = sigma_of(n, {});
    for (int i = 1; i <= n; ++i) CHECK(sigma(i) == cyc_prev(i, n));
  }
}

TEST_CASE("triangulations give i -> i+2") {
  Permutation sigma = sigma_of(6, {{1, 3}, {1, 4}, {1, 5}});
  CHECK(to_cycles(sigma) == "(135)(246)");
  for (int n = 4; n <= 9; ++n) {
    std::vector<std::pair<int, int>> fan;
    for (int k = 3; k < n; ++k) fan.emplace_back(1, k);
    Permutation s = sigma_of(n, fan);
    for (int i = 1; i <= n; ++i) CHECK(s(i) == cyc_next(cyc_next(i, n), n));
  }
}

TEST_CASE("pentagon with one diagonal: the worked example") {
  Tiling t = make_tiling(5, {{1, 3}});
  std::vector<Strand> strands = scott_strands(t);
  REQUIRE(strands.size() == 5);
  CHECK(strands[0].start == 1);
  CHECK(strands[0].end == 3);
  CHECK(strands[4].start == 5);
  CHECK(strands[4].end == 4);
  Permutation sigma = scott_perm(t);
  CHECK(sigma.images == std::vector<int>{3, 5, 1, 2, 4});
  CHECK(to_cycles(sigma) == "(13)(254)");
}

TEST_CASE("octagon example strands") {
  Tiling t = make_tiling(8, {{2, 8}, {3, 5}, {5, 8}});
  std::vector<Strand> strands = scott_strands(t);
  const Strand& six = strands[5];
  CHECK(six.start == 6);
  CHECK(six.end == 3);
  Tile big{{5, 6, 7, 8}};
  CHECK(strand_class(six, big) == StrandTileRelation::Long);
  CHECK(covered_vertices(six, big, 8) == 2);
  // Strand 3 ~> 5 lives entirely in the ear {3,4,5}.
  CHECK(strands[2].end == 5);
  CHECK(strand_class(strands[2], Tile{{1, 2, 8}}) == StrandTileRelation::NotIncident);
  // Strand 7 ~> 6 stays inside {5,6,7,8}, which touches {2,3,5,8}.
  CHECK(strands[6].end == 6);
  CHECK(strand_class(strands[6], Tile{{2, 3, 5, 8}}) == StrandTileRelation::Short);
}

TEST_CASE("every strand of the untile is long for the unique tile") {
  for (int n = 3; n <= 8; ++n) {
    Tiling t = make_tiling(n, {});
    Tile whole = tiles_of(t)[0];
    for (const Strand& s : scott_strands(t))
      CHECK(strand_class(s, whole) == StrandTileRelation::Long);
  }
}

TEST_CASE("to_cycles formatting") {
  CHECK(to_cycles(Permutation::identity(5)) == "");
  CHECK(to_cycles(Permutation{6, {3, 4, 5, 6, 1, 2}}) == "(135)(246)");
  // Commas once labels pass one digit.
  std::vector<int> img(14);
  for (int i = 0; i < 14; ++i) img[i] = (i + 2) % 14 + 1;
  CHECK(to_cycles(Permutation{14, img}) ==
        "(1,3,5,7,9,11,13)(2,4,6,8,10,12,14)");
}

TEST_CASE("runs") {
  // Untile: one n-run.
  CHECK(detect_runs(sigma_of(7, {})) == std::vector<std::pair<int, int>>{{1, 7}});
  // Triangulation: no descending pair anywhere.
  CHECK(detect_runs(sigma_of(7, {{1, 3}, {1, 4}, {1, 5}, {1, 6}})).empty());
  // sigma = (1 4 12)(2 14)(3 10 8 7 11 6 9 5 13) has a 3-run at 9.
  std::vector<int> img(14);
  auto set = [&](int a, int b) { img[a - 1] = b; };
  set(1, 4), set(4, 12), set(12, 1);
  set(2, 14), set(14, 2);
  set(3, 10), set(10, 8), set(8, 7), set(7, 11), set(11, 6), set(6, 9), set(9, 5), set(5, 13),
      set(13, 3);
  std::vector<std::pair<int, int>> runs = detect_runs(Permutation{14, img});
  CHECK(runs == std::vector<std::pair<int, int>>{{9, 3}});
}

TEST_CASE("restrict_scott") {
  Tiling t = make_tiling(8, {{2, 8}, {3, 5}, {5, 8}});
  auto [inner, outer] = restrict_scott(t, {5, 8});
  // P' = {5,6,7,8} is an untiled square.
  CHECK(inner.images == std::vector<int>{4, 1, 2, 3});
  // P'' = {8,1,2,3,4,5} relabelled from 8 keeps [2,8] and [3,5].
  CHECK(outer == scott_perm(make_tiling(6, {{1, 3}, {4, 6}})));
  CHECK_THROWS_AS(restrict_scott(t, {2, 6}), error);

  // Restriction at an ear of a triangulation is a triangle case.
  Tiling fan = make_tiling(5, {{1, 3}, {1, 4}});
  auto [tri, rest] = restrict_scott(fan, {1, 3});
  CHECK(tri.images == std::vector<int>{3, 1, 2});
}

TEST_CASE("crossing counts on small cases") {
  // Two strands in one triangle cross once.
  std::vector<Strand> s3 = scott_strands(make_tiling(3, {}));
  CHECK(strand_crossings(s3[0], s3[1]) == 1);
  CHECK(strand_crossings(s3[0], s3[2]) == 1);
  // Exhaustive bound is covered by the verify suite; spot a double
  // crossing through a quadrilateral flanked by triangles.
  Tiling t = make_tiling(6, {{1, 3}, {4, 6}, {3, 6}});
  std::vector<Strand> s = scott_strands(t);
  int twos = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      int c = strand_crossings(s[a], s[b]);
      CHECK(c <= 2);
      twos += c == 2;
    }
  CHECK(twos > 0);
}

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support/oracles.hpp"
#include "tileperm/enumerate.hpp"
#include "tileperm/tiling.hpp"

using namespace tileperm;

namespace {
Tiling octagon_example() { return make_tiling(8, {{2, 8}, {3, 5}, {5, 8}}); }
}  // namespace

TEST_CASE("make_tiling validates") {
  Tiling t = octagon_example();
  CHECK(tiles_of(t).size() == 4);

  CHECK(tiles_of(make_tiling(5, {})).size() == 1);

  CHECK_THROWS_MATCHES(make_tiling(6, {{1, 3}, {2, 4}}), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::StartsWith("CrossingDiagonals")));
  CHECK_THROWS_MATCHES(
      make_tiling(6, {{1, 2}}), error,
      Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("InvalidDiagonal")));
  CHECK_THROWS_MATCHES(
      make_tiling(6, {{1, 7}}), error,
      Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("InvalidDiagonal")));
  CHECK_THROWS_MATCHES(
      make_tiling(6, {{1, 3}, {3, 1}}), error,
      Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("DuplicateDiagonal")));
}

TEST_CASE("tiles of the octagon example") {
  std::vector<Tile> tiles = tiles_of(octagon_example());
  REQUIRE(tiles.size() == 4);
  CHECK(tiles[0].vertices == std::vector<int>{1, 2, 8});
  CHECK(tiles[1].vertices == std::vector<int>{2, 3, 5, 8});
  CHECK(tiles[2].vertices == std::vector<int>{3, 4, 5});
  CHECK(tiles[3].vertices == std::vector<int>{5, 6, 7, 8});
}

TEST_CASE("tiles for simple cases") {
  CHECK(tiles_of(make_tiling(3, {}))[0].vertices == std::vector<int>{1, 2, 3});
  std::vector<Tile> square = tiles_of(make_tiling(4, {{1, 3}}));
  REQUIRE(square.size() == 2);
  CHECK(square[0].vertices == std::vector<int>{1, 2, 3});
  CHECK(square[1].vertices == std::vector<int>{1, 3, 4});
}

TEST_CASE("tiles agree with the splitting oracle exhaustively") {
  for (int n = 3; n <= 8; ++n)
    for (const Tiling& t : generate_all(n)) {
      std::vector<std::vector<int>> expected = oracles::tiles_of_oracle(t);
      std::vector<Tile> got = tiles_of(t);
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].vertices == expected[i]);
      int total = 0;
      for (const Tile& tile : got) total += tile.size() - 2;
      CHECK(total == n - 2);
    }
}

TEST_CASE("dual tree") {
  DualTree g = dual_tree(octagon_example());
  CHECK(g.node_count == 4);
  REQUIRE(g.edges.size() == 3);
  // A path: {1,2,8}-{2,3,5,8}, {2,3,5,8}-{3,4,5}, {2,3,5,8}-{5,6,7,8}.
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});

  CHECK(dual_tree(make_tiling(6, {})).node_count == 1);
  DualTree fan = dual_tree(make_tiling(6, {{1, 3}, {1, 4}, {1, 5}}));
  CHECK(fan.node_count == 4);
  CHECK(fan.edges.size() == 3);
}

TEST_CASE("ears") {
  std::vector<Tile> e = ears(octagon_example());
  REQUIRE(e.size() == 3);
  CHECK(e[0].vertices == std::vector<int>{1, 2, 8});
  CHECK(e[1].vertices == std::vector<int>{3, 4, 5});
  CHECK(e[2].vertices == std::vector<int>{5, 6, 7, 8});

  CHECK(ears(make_tiling(7, {})).empty());
  CHECK(ears(make_tiling(4, {{1, 3}})).size() == 2);
}

TEST_CASE("simple edges") {
  CHECK(simple_edges(make_tiling(5, {{1, 3}})) ==
        std::vector<std::pair<int, int>>{{4, 5}});
  CHECK(simple_edges(make_tiling(4, {})).size() == 4);
  CHECK(simple_edges(make_tiling(6, {{1, 3}, {1, 4}, {1, 5}})).empty());
  // The wrap-around edge (n, 1).
  CHECK(simple_edges(make_tiling(5, {{2, 4}})) ==
        std::vector<std::pair<int, int>>{{5, 1}});
}

TEST_CASE("flip") {
  Tiling sq = make_tiling(4, {{1, 3}});
  Tiling flipped = flip(sq, {1, 3});
  CHECK(flipped == make_tiling(4, {{2, 4}}));
  CHECK(flip(flipped, {2, 4}) == sq);

  CHECK_THROWS_MATCHES(
      flip(octagon_example(), {3, 5}), error,
      Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("NotFlippable")));
  CHECK_THROWS_MATCHES(
      flip(octagon_example(), {2, 6}), error,
      Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("NotPresent")));
}

TEST_CASE("flip is an involution wherever defined") {
  for (int n = 4; n <= 7; ++n)
    for (const Tiling& t : generate_all(n))
      for (const Diagonal& d : t.diagonals()) {
        Tiling other = [&] {
          try {
            return flip(t, d);
          } catch (const error&) {
            return t;
          }
        }();
        if (other == t) continue;
        Diagonal back{};
        for (const Diagonal& e : other.diagonals())
          if (!t.has(e)) back = e;
        CHECK(flip(other, back) == t);
      }
}

TEST_CASE("tile partitions") {
  Tile q{{1, 3, 5}};
  TilePartitions p = tile_partitions(q, 6);
  CHECK(p.I == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5, 6}});
  CHECK(p.J == std::vector<std::vector<int>>{{2, 3}, {4, 5}, {6, 1}});

  Tile untile{{1, 2, 3, 4, 5}};
  TilePartitions u = tile_partitions(untile, 5);
  for (int i = 0; i < 5; ++i) CHECK(u.I[i] == std::vector<int>{i + 1});
}

TEST_CASE("diagonal flag syntax") {
  Tiling t = parse_tiling_flag(8, "2-8,3-5,5-8");
  CHECK(t == octagon_example());
  CHECK(format_diagonals(t) == "2-8,3-5,5-8");
  CHECK(parse_tiling_flag(5, "") == make_tiling(5, {}));
  CHECK_THROWS_AS(parse_tiling_flag(8, "2+8"), error);
}

#include <doctest.h>

#include <algorithm>

#include "clcc/error.hpp"
#include "clcc/generators.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace clcc;
using fixtures::count;

TEST_CASE("closure of a four-cycle") {
  const auto c4 = fixtures::c2k(2);
  CHECK(c4.vertex_count() == 4);
  CHECK(count(c4, 0) == 4);
  CHECK(count(c4, 1) == 4);
  CHECK(count(c4, -1) == 1);
  CHECK(c4.dimension() == 1);
}

TEST_CASE("closure of S0 and of the octahedron") {
  const auto s0 = fixtures::coloured(1, {{"a+", 1}, {"a-", 1}}, {{"a+"}, {"a-"}});
  CHECK(count(s0, 0) == 2);
  CHECK(s0.dimension() == 0);

  const auto o3 = fixtures::octahedron();
  // Brute force: every choice of at most one vertex per colour is a face.
  std::size_t by_dim[4] = {0, 0, 0, 0};
  for (int pick = 0; pick < 27; ++pick) {
    int size = 0;
    for (int c = 0, p = pick; c < 3; ++c, p /= 3) size += p % 3 != 0;
    ++by_dim[size];
  }
  CHECK(count(o3, 0) == by_dim[1]);
  CHECK(count(o3, 1) == by_dim[2]);
  CHECK(count(o3, 2) == by_dim[3]);
  CHECK(by_dim[1] == 6);
  CHECK(by_dim[2] == 12);
  CHECK(by_dim[3] == 8);
}

TEST_CASE("closure rejects bad input") {
  CHECK_THROWS_AS(fixtures::coloured(2, {{"x", 1}, {"y", 1}}, {{"x", "y"}}), Error);
  CHECK_THROWS_AS(fixtures::coloured(2, {{"x", 1}}, {{"x", "z"}}), Error);
  CHECK_THROWS_AS(fixtures::coloured(2, {{"x", 3}}, {}), Error);
  CHECK_THROWS_AS(fixtures::coloured(2, {{"x", 0}}, {}), Error);
  CHECK_THROWS_AS(fixtures::coloured(2, {{"x", 1}, {"x", 2}}, {}), Error);
}

TEST_CASE("closure is idempotent") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto k = testing::random_coloured(3, 7, 5, "r");
    std::vector<std::vector<std::string>> all;
    for (const auto& s : k.simplices()) all.push_back(k.ids(s));
    const auto again = ColoredComplex::close_downward(3, k.vertices(), all);
    CHECK(again == k);
    CHECK(is_flag(again).flag == is_flag(k).flag);
  }
}

TEST_CASE("flagness") {
  CHECK(is_flag(fixtures::c2k(2)).flag);
  CHECK(is_flag(fixtures::octahedron()).flag);
  const auto hollow = fixtures::coloured(3, {{"1", 1}, {"2", 2}, {"3", 3}}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
  const auto r = is_flag(hollow);
  CHECK_FALSE(r.flag);
  CHECK(r.witness == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("flagness agrees with a subset scan") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = testing::random_coloured(testing::uniform(1, 4), testing::uniform(0, 8), testing::uniform(0, 6), "q");
    const auto fast = check_flag(k.uncoloured());
    CHECK(fast.flag == testing::brute_flag(k.uncoloured()));
    if (!fast.flag) {
      // Witness is a clique, not a simplex, and every proper face is a simplex.
      const auto& u = k.uncoloured();
      CHECK_FALSE(u.contains(fast.witness));
      for (std::size_t drop = 0; drop < fast.witness.size(); ++drop) {
        auto face = fast.witness;
        face.erase(face.begin() + static_cast<long>(drop));
        CHECK(u.contains(face));
      }
    }
  }
}

TEST_CASE("links") {
  const auto c6 = fixtures::c2k(3);
  const auto v = c6.simplex_from_ids({"v0"});
  const auto l = link_simplex(c6, v);
  CHECK(l.vertex_count() == 2);
  CHECK(count(l, 1) == 0);
  for (const auto& w : l.vertices()) CHECK(w.colour == 2);

  const auto o3 = fixtures::octahedron();
  const auto lo = link_simplex(o3, o3.simplex_from_ids({"a1+"}));
  CHECK(lo.vertex_count() == 4);
  CHECK(count(lo, 1) == 4);
  CHECK(lo == full_subcomplex(o3, {"a2+", "a2-", "a3+", "a3-"}));
  for (const auto& w : lo.vertices()) CHECK(w.colour != 1);

  CHECK(link_simplex(o3, o3.empty_simplex()) == o3);
  CHECK_THROWS_AS(link_simplex(c6, c6.simplex_from_ids({"v0", "v2"})), Error);
}

TEST_CASE("links of flag complexes are flag and equal common-neighbour subcomplexes") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = testing::random_flag_coloured(3, testing::uniform(1, 10), 0.5, "f");
    for (const auto& s : k.simplices()) {
      const auto l = link_simplex(k, s);
      CHECK(is_flag(l).flag);
      std::vector<std::string> common;
      for (int v = 0; v < k.vertex_count(); ++v) {
        if (s.has(k.colour_of(v)) && s.at(k.colour_of(v)) == v) continue;
        bool all = true;
        for (int u : s.vertices()) all = all && k.uncoloured().adjacent(u, v);
        if (all) common.push_back(k.id_of(v));
      }
      const auto expected = full_subcomplex(k, common);
      CHECK(l.uncoloured() == expected.uncoloured());
    }
  }
}

TEST_CASE("full subcomplexes") {
  const auto c6 = fixtures::c2k(3);
  CHECK(full_subcomplex(c6, {"v0", "v1", "v2", "v3", "v4", "v5"}) == c6);
  const auto e = full_subcomplex(c6, {"v0", "v1"});
  CHECK(count(e, 1) == 1);
  CHECK(count(e, 0) == 2);
  const auto o3 = fixtures::octahedron();
  const auto o2 = full_subcomplex(o3, {"a1+", "a1-", "a2+", "a2-"});
  CHECK(count(o2, 1) == 4);
  CHECK(o2.dimension() == 1);
  CHECK_THROWS_AS(full_subcomplex(c6, {"nope"}), Error);
}

TEST_CASE("joins") {
  const auto s0 = SimplicialComplex::from_simplices({"p", "q"}, {});
  const auto t0 = SimplicialComplex::from_simplices({"r", "s"}, {});
  const auto sq = simplicial_join(s0, t0);
  CHECK(sq.vertex_count() == 4);
  CHECK(sq.simplices(1).size() == 4);
  CHECK(sq.dimension() == 1);
  CHECK(testing::brute_squares(sq).size() == 1);

  const SimplicialComplex nothing;
  CHECK(simplicial_join(sq, nothing) == sq);

  const auto oct = simplicial_join(s0, fixtures::c2k(2).uncoloured());
  CHECK(oct.simplices(0).size() == 6);
  CHECK(oct.simplices(1).size() == 12);
  CHECK(oct.simplices(2).size() == 8);

  // Colliding labels are kept apart.
  const auto self = simplicial_join(s0, s0);
  CHECK(self.vertex_count() == 4);
}

TEST_CASE("empty squares") {
  const auto c4 = fixtures::c2k(2);
  CHECK(empty_squares(c4).size() == 1);
  const auto chord = SimplicialComplex::from_simplices(
      {"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}, {"0", "2"}});
  CHECK(find_empty_squares(chord).empty());
  const auto o3 = fixtures::octahedron();
  const auto squares = empty_squares(o3);
  REQUIRE(squares.size() == 3);
  std::set<std::set<int>> colour_sets;
  for (const auto& w : squares) {
    colour_sets.insert(std::set<int>(w.colours.begin(), w.colours.end()));
    CHECK(w.distinct_colours() == 2);
  }
  CHECK(colour_sets.size() == 3);
  CHECK(empty_squares(o3, std::make_pair(1, 2)).size() == 1);
}

TEST_CASE("empty squares agree with a four-tuple scan") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = testing::random_coloured(testing::uniform(2, 4), testing::uniform(0, 9), testing::uniform(0, 12), "e");
    const auto fast = find_empty_squares(k.uncoloured());
    std::set<std::array<int, 4>> got;
    for (const auto& s : fast) got.insert(s.cycle);
    CHECK(got == testing::brute_squares(k.uncoloured()));
    CHECK(std::is_sorted(fast.begin(), fast.end()));
  }
}

TEST_CASE("empty squares are invariant under relabelling") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto k = testing::random_coloured(3, 8, 10, "x").uncoloured();
    std::vector<std::string> fresh;
    std::vector<int> order(static_cast<std::size_t>(k.vertex_count()));
    for (int i = 0; i < k.vertex_count(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), testing::rng());
    for (int i = 0; i < k.vertex_count(); ++i) fresh.push_back("z" + std::to_string(order[static_cast<std::size_t>(i)]));
    const auto r = k.relabelled(fresh);
    auto as_labels = [](const SimplicialComplex& c, const std::vector<std::string>* rename) {
      std::set<std::set<std::string>> out;
      for (const auto& s : find_empty_squares(c)) {
        std::set<std::string> names;
        for (int v : s.cycle) names.insert(rename ? (*rename)[static_cast<std::size_t>(v)] : c.label(v));
        out.insert(names);
      }
      return out;
    };
    CHECK(as_labels(k, &fresh) == as_labels(r, nullptr));
  }
}

TEST_CASE("5-large") {
  CHECK(is_5_large(fixtures::c2k(3)).holds);
  const auto r = is_5_large(fixtures::c2k(2));
  CHECK_FALSE(r.holds);
  CHECK(r.witness.has_value());
  const auto tri = SimplicialComplex::from_simplices({"1", "2", "3"}, {{"1", "2", "3"}});
  CHECK(is_5_large(barycentric_subdivision_2d(tri, {})).holds);
}

TEST_CASE("only bicolour empty squares") {
  CHECK(is_obes(fixtures::c2k(2)).holds);
  CHECK(is_obes(barycentric_subdivision_2d(tetrahedron_boundary(), {})).holds);
  const auto tricolour = fixtures::coloured(3, {{"p", 1}, {"q", 2}, {"r", 1}, {"s", 3}},
                                            {{"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "p"}});
  const auto r = is_obes(tricolour);
  CHECK_FALSE(r.holds);
  CHECK(r.witness->distinct_colours() == 3);
}

TEST_CASE("pairwise 5-large") {
  CHECK(pairwise_5_large(fixtures::c2k(2, "a"), fixtures::c2k(3, "b")).holds);
  const auto r = pairwise_5_large(fixtures::c2k(2, "a"), fixtures::c2k(2, "b"));
  CHECK_FALSE(r.holds);
  CHECK(r.colours == std::make_pair(1, 2));
  CHECK(r.witness_a.has_value());
  CHECK(r.witness_b.has_value());
  CHECK(pairwise_5_large(gen_cross_polytope(2), fixtures::c2k(4, "b")).holds);
  CHECK_THROWS_AS(pairwise_5_large(fixtures::c2k(2), fixtures::octahedron()), Error);
}

TEST_CASE("barycentric subdivision counts") {
  const auto tri = SimplicialComplex::from_simplices({"1", "2", "3"}, {{"1", "2", "3"}});
  const auto bt = barycentric_subdivision_2d(tri, {});
  CHECK(count(bt, 0) == 7);
  CHECK(count(bt, 1) == 12);
  CHECK(count(bt, 2) == 6);

  const auto edge = SimplicialComplex::from_simplices({"1", "2"}, {{"1", "2"}});
  const auto be = barycentric_subdivision_2d(edge, {});
  CHECK(count(be, 0) == 3);
  CHECK(count(be, 1) == 2);

  const auto bs = barycentric_subdivision_2d(tetrahedron_boundary(), {});
  CHECK(count(bs, 0) == 14);
  CHECK(count(bs, 1) == 36);
  CHECK(count(bs, 2) == 24);
  CHECK(is_flag(bs).flag);
  CHECK(bs.vertex_index("[1,2]").has_value());
}

TEST_CASE("barycentric subdivision rejects bad input") {
  const auto tet = SimplicialComplex::from_simplices({"1", "2", "3", "4"}, {{"1", "2", "3", "4"}});
  CHECK_THROWS_AS(barycentric_subdivision_2d(tet, {}), Error);
  CHECK_THROWS_AS(barycentric_subdivision_2d(tetrahedron_boundary(), {1, 1, 3}), Error);
  CHECK_THROWS_AS(barycentric_subdivision_2d(tetrahedron_boundary(), {1, 2, 4}), Error);
}

TEST_CASE("barycentric subdivisions of random 2-complexes") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = testing::random_2_complex(testing::uniform(3, 7), testing::uniform(0, 8), testing::uniform(0, 3));
    const BarycentricColours colours{1, 2, 3};
    const auto b = barycentric_subdivision_2d(k, colours);
    CHECK(is_flag(b).flag);
    CHECK(is_obes(b).holds);
    CHECK(empty_squares(b, std::make_pair(1, 2)).empty());
    CHECK(empty_squares(b, std::make_pair(2, 3)).empty());
  }
}

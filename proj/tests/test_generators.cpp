#include <doctest.h>

#include <algorithm>

#include "clcc/clcc.hpp"
#include "clcc/error.hpp"
#include "clcc/generators.hpp"
#include "clcc/homology.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace clcc;

namespace {

SimplicialComplex random_flag_graph(int k, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v)
      if (testing::coin(p)) edges.emplace_back(u, v);
  return testing::clique_complex(k, edges);
}

}  // namespace

TEST_CASE("cycles and cross-polytopes") {
  const auto c6 = gen_cycle(3);
  CHECK(c6.vertex_count() == 6);
  CHECK(fixtures::count(c6, 1) == 6);
  CHECK(c6.colour_of(*c6.vertex_index("v0")) == 1);
  CHECK(c6.colour_of(*c6.vertex_index("v1")) == 2);
  CHECK(gen_cycle(2, {1, 3}).colours() == 3);
  CHECK_THROWS_AS(gen_cycle(1), Error);
  CHECK_THROWS_AS(gen_cycle(3, {2, 2}), Error);

  for (int n = 1; n <= 4; ++n) {
    const auto o = gen_cross_polytope(n);
    CHECK(o.vertex_count() == 2 * n);
    CHECK(o.maximal_simplices().size() == (std::size_t{1} << n));
    CHECK(is_flag(o).flag);
  }
}

TEST_CASE("surface family") {
  for (int ka = 2; ka <= 5; ++ka)
    for (int kb = 2; kb <= 5; ++kb) {
      const auto [a, b] = gen_surface_pair(ka, kb);
      const Clcc x = build_clcc(a, b);
      const auto& c = x.complex();
      CHECK(c.count(0) == static_cast<std::size_t>(2 * ka * kb + 2 * ka + 2 * kb));
      CHECK(c.count(1) == static_cast<std::size_t>(8 * ka * kb));
      CHECK(c.count(2) == static_cast<std::size_t>(4 * ka * kb));
      const long long chi = euler_characteristic(c);
      CHECK(chi == 2 * ka + 2 * kb - 2 * ka * kb);
      CHECK(-chi == ka * (kb - 2) + kb * (ka - 2));
      CHECK(is_connected_bfs(c));
      for (auto t : classify_vertex_links(c)) CHECK(t == LinkTag::Circle);
      CHECK(betti(c.cells(), false) == std::vector<long long>{1, 2 - chi, 1});
      CHECK(fundamental_class(c.cells()));
    }
}

TEST_CASE("Salvetti complexes have one cell per simplex") {
  std::vector<SimplicialComplex> gammas{SimplicialComplex::from_simplices({"1"}, {}),
                                        SimplicialComplex::from_simplices({"1", "2"}, {}),
                                        SimplicialComplex::from_simplices({"1", "2"}, {{"1", "2"}}),
                                        tetrahedron_boundary().full_subcomplex({0, 1, 2})};
  for (int i = 0; i < 25; ++i) gammas.push_back(random_flag_graph(testing::uniform(1, 6), 0.5));
  for (const auto& g : gammas) {
    if (!check_flag(g).flag) continue;
    const auto [a, b] = gen_salvetti_pair(g);
    const Clcc x = build_clcc(a, b);
    std::vector<long long> expected{1};
    for (int d = 0; d <= g.dimension(); ++d) expected.push_back(static_cast<long long>(g.simplices(d).size()));
    // Higher cells of the CLCC carry no homology.
    expected.resize(static_cast<std::size_t>(x.complex().dimension() + 1), 0);
    CHECK(betti(x.complex().cells(), false) == expected);
    CHECK(is_connected_bfs(x.complex()));
  }
  CHECK_THROWS_AS(gen_salvetti_pair(SimplicialComplex::from_simplices({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}})),
                  Error);
}

TEST_CASE("right-angled Coxeter pairs give the cubical Davis complex") {
  std::vector<SimplicialComplex> gammas{SimplicialComplex::from_simplices({"1", "2"}, {}),
                                        SimplicialComplex::from_simplices({"1", "2"}, {{"1", "2"}})};
  for (int i = 0; i < 20; ++i) gammas.push_back(random_flag_graph(testing::uniform(1, 5), 0.5));
  for (const auto& g : gammas) {
    const auto [a, b] = gen_racg_pair(g);
    const Clcc x = build_clcc(a, b);
    const CubeComplex oracle = testing::unit_cube_oracle(g);
    const int n = g.vertex_count();
    auto name = [&](int v) {
      const auto& o = x.complex().origin({0, v});
      std::string s;
      for (int c = 1; c <= n; ++c) {
        if (o.b.at(c) >= 0) s += 'h';
        else s += x.gamma_a().id_of(o.a.at(c)).back() == '+' ? '1' : '0';
      }
      return s;
    };
    REQUIRE(x.complex().dimension() == oracle.dimension());
    for (int d = 0; d <= oracle.dimension(); ++d) {
      CHECK(x.complex().count(d) == oracle.count(d));
      std::set<std::vector<std::string>> mine, theirs;
      for (int i = 0; i < static_cast<int>(x.complex().count(d)); ++i) {
        std::vector<std::string> vs;
        for (int v : x.complex().vertices({d, i})) vs.push_back(name(v));
        std::sort(vs.begin(), vs.end());
        mine.insert(vs);
      }
      for (int i = 0; i < static_cast<int>(oracle.count(d)); ++i) {
        std::vector<std::string> vs;
        for (int v : oracle.vertices({d, i})) vs.push_back(oracle.id({0, v}));
        std::sort(vs.begin(), vs.end());
        theirs.insert(vs);
      }
      CHECK(mine == theirs);
    }
  }
}

TEST_CASE("barycentric pairs") {
  const auto t = tetrahedron_boundary();
  const auto [a, b] = gen_barycentric_pair(t, {1, 2, 3}, t, {2, 1, 3});
  CHECK(a.vertex_count() == 14);
  CHECK(fixtures::count(a, 2) == 24);
  const Clcc x = build_clcc(a, b);
  CHECK(x.complex().dimension() == 3);
  CHECK(x.complex().count(0) == 384);
  CHECK(betti(x.complex().cells(), false) == std::vector<long long>{1, 39, 39, 1});
  CHECK_THROWS_AS(gen_barycentric_pair(t, {1, 2, 3}, t, {3, 2, 1}), Error);
}

TEST_CASE("named complexes") {
  CHECK(betti(tetrahedron_boundary().cells(), false) == std::vector<long long>{1, 0, 1});
  const auto torus = seven_vertex_torus();
  CHECK(torus.vertex_count() == 7);
  CHECK(torus.simplices(1).size() == 21);
  CHECK(torus.simplices(2).size() == 14);
  for (int v = 0; v < 7; ++v) CHECK(torus.link({v}).simplices(1).size() == 6);
}

#include "clcc/generators.hpp"

#include <algorithm>

#include "clcc/error.hpp"

namespace clcc {

ColoredComplex gen_cycle(int k, std::pair<int, int> colours, int n, const std::string& prefix) {
  if (k < 2) throw Error("a cycle needs k >= 2");
  const auto [i, j] = colours;
  if (i == j) throw Error("the two cycle colours must differ");
  if (n == 0) n = std::max(i, j);
  std::vector<ColoredComplex::Vertex> vertices;
  std::vector<std::vector<std::string>> edges;
  const int len = 2 * k;
  for (int t = 0; t < len; ++t) {
    vertices.push_back({prefix + std::to_string(t), t % 2 == 0 ? i : j});
    edges.push_back({prefix + std::to_string(t), prefix + std::to_string((t + 1) % len)});
  }
  return ColoredComplex::close_downward(n, std::move(vertices), edges);
}

ColoredComplex gen_cross_polytope(int n, const std::string& prefix) {
  if (n < 1 || n > kMaxColours) throw Error("cross-polytope dimension out of range");
  if (n > 16) throw Error("cross-polytope too large to enumerate");
  std::vector<ColoredComplex::Vertex> vertices;
  for (int c = 1; c <= n; ++c) {
    vertices.push_back({prefix + std::to_string(c) + "+", c});
    vertices.push_back({prefix + std::to_string(c) + "-", c});
  }
  std::vector<std::vector<std::string>> facets;
  for (unsigned signs = 0; signs < (1u << n); ++signs) {
    std::vector<std::string> facet;
    for (int c = 1; c <= n; ++c) facet.push_back(prefix + std::to_string(c) + ((signs >> (c - 1)) & 1 ? "-" : "+"));
    facets.push_back(std::move(facet));
  }
  return ColoredComplex::close_downward(n, std::move(vertices), facets);
}

ColouredPair gen_surface_pair(int ka, int kb) {
  return {gen_cycle(ka, {1, 2}, 2, "a"), gen_cycle(kb, {1, 2}, 2, "b")};
}

ColouredPair gen_salvetti_pair(const SimplicialComplex& gamma) {
  const auto flag = check_flag(gamma);
  if (!flag.flag) throw Error("the Salvetti pair needs a flag complex");
  const int n = gamma.vertex_count();
  if (n < 1) throw Error("the Salvetti pair needs at least one vertex");
  std::vector<ColoredComplex::Vertex> vertices;
  for (int c = 1; c <= n; ++c) {
    vertices.push_back({"a" + std::to_string(c) + "+", c});
    vertices.push_back({"a" + std::to_string(c) + "-", c});
  }
  std::vector<std::vector<std::string>> simplices;
  for (int d = -1; d <= gamma.dimension(); ++d) {
    for (const auto& s : gamma.simplices(d)) {
      std::vector<std::string> top;
      for (int c = 1; c <= n; ++c) {
        const bool plus = std::binary_search(s.begin(), s.end(), c - 1);
        top.push_back("a" + std::to_string(c) + (plus ? "+" : "-"));
      }
      simplices.push_back(std::move(top));
    }
  }
  return {ColoredComplex::close_downward(n, std::move(vertices), simplices), gen_cross_polytope(n, "b")};
}

ColouredPair gen_racg_pair(const SimplicialComplex& gamma) {
  const auto flag = check_flag(gamma);
  if (!flag.flag) throw Error("the right-angled Coxeter pair needs a flag complex");
  const int n = gamma.vertex_count();
  if (n < 1) throw Error("the right-angled Coxeter pair needs at least one vertex");
  std::vector<ColoredComplex::Vertex> vertices;
  for (int v = 0; v < n; ++v) vertices.push_back({gamma.label(v), v + 1});
  std::vector<std::vector<std::string>> simplices;
  for (const auto& s : gamma.maximal_simplices()) simplices.push_back(gamma.simplex_labels(s));
  return {gen_cross_polytope(n, "a"), ColoredComplex::close_downward(n, std::move(vertices), simplices)};
}

ColouredPair gen_barycentric_pair(const SimplicialComplex& gamma, BarycentricColours gamma_colours,
                                  const SimplicialComplex& lambda, BarycentricColours lambda_colours) {
  if (gamma_colours.edge == lambda_colours.edge)
    throw Error("edge barycentres of the two sides must carry different colours");
  return {barycentric_subdivision_2d(gamma, gamma_colours), barycentric_subdivision_2d(lambda, lambda_colours)};
}

SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::from_simplices({"1", "2", "3", "4"},
                                           {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
}

SimplicialComplex seven_vertex_torus() {
  std::vector<std::string> labels;
  for (int i = 0; i < 7; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<std::string>> triangles;
  for (int i = 0; i < 7; ++i) {
    triangles.push_back({labels[i], labels[(i + 1) % 7], labels[(i + 3) % 7]});
    triangles.push_back({labels[i], labels[(i + 2) % 7], labels[(i + 3) % 7]});
  }
  return SimplicialComplex::from_simplices(labels, triangles);
}

}  // namespace clcc

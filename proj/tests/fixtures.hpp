#pragma once

#include "clcc/generators.hpp"
#include "clcc/simplicial.hpp"

namespace fixtures {

inline clcc::ColoredComplex c2k(int k, const std::string& prefix = "v") { return clcc::gen_cycle(k, {1, 2}, 2, prefix); }
inline clcc::ColoredComplex octahedron(const std::string& prefix = "a") { return clcc::gen_cross_polytope(3, prefix); }

/// Graph on v1, v2, v3 with the single edge v1 v2.
inline clcc::SimplicialComplex edge3() {
  return clcc::SimplicialComplex::from_simplices({"v1", "v2", "v3"}, {{"v1", "v2"}, {"v3"}});
}

inline clcc::SimplicialComplex twopt() { return clcc::SimplicialComplex::from_simplices({"v1", "v2"}, {}); }

/// Vertices coloured in order, given maximal simplices.
inline clcc::ColoredComplex coloured(int n, const std::vector<std::pair<std::string, int>>& vertices,
                                     const std::vector<std::vector<std::string>>& faces) {
  std::vector<clcc::ColoredComplex::Vertex> vs;
  for (const auto& [id, c] : vertices) vs.push_back({id, c});
  return clcc::ColoredComplex::close_downward(n, vs, faces);
}

inline std::size_t count(const clcc::ColoredComplex& k, int dim) { return k.uncoloured().simplices(dim).size(); }

}  // namespace fixtures

#pragma once

#include <string>
#include <utility>

#include "clcc/simplicial.hpp"

namespace clcc {

using ColouredPair = std::pair<ColoredComplex, ColoredComplex>;

/// Cycle of length 2k alternating colours i and j, vertices prefix0..prefix(2k-1).
/// n = 0 means max(i, j).
ColoredComplex gen_cycle(int k, std::pair<int, int> colours = {1, 2}, int n = 0, const std::string& prefix = "v");

/// Join of n copies of S⁰; vertices prefix<i>+ and prefix<i>- of colour i.
ColoredComplex gen_cross_polytope(int n, const std::string& prefix = "a");

/// (C_2kA, C_2kB) on colours 1, 2.
ColouredPair gen_surface_pair(int ka, int kb);

/// Vertex i of Γ (sorted label order, from 1) becomes colour i.  Γ̂ has one
/// n-simplex per simplex σ of Γ, with a<i>+ on the colours of σ and a<i>- elsewhere;
/// the B side is the full cross-polytope on b-vertices.  Throws when Γ is not flag.
ColouredPair gen_salvetti_pair(const SimplicialComplex& gamma);

/// A side: full cross-polytope on a-vertices; B side: Γ with vertex i
/// recoloured to colour i.  Throws when Γ is not flag.
ColouredPair gen_racg_pair(const SimplicialComplex& gamma);

/// Tripartite barycentric subdivisions of two 2-complexes.  The edge colours
/// must differ.
ColouredPair gen_barycentric_pair(const SimplicialComplex& gamma, BarycentricColours gamma_colours,
                                  const SimplicialComplex& lambda, BarycentricColours lambda_colours);

/// Boundary of the tetrahedron on vertices 1..4.
SimplicialComplex tetrahedron_boundary();
/// Seven-vertex torus on vertices 0..6.
SimplicialComplex seven_vertex_torus();

}  // namespace clcc

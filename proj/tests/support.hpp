#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "clcc/clcc.hpp"
#include "clcc/pocset.hpp"
#include "clcc/simplicial.hpp"

namespace testing {

/// Seed from CLCC_SEED, else a fixed default.
std::uint64_t seed();
std::mt19937_64& rng();
int uniform(int lo, int hi);  // inclusive
bool coin(double p);

// ---- random inputs

/// Random n-coloured complex: `vertices` vertices with random colours and a
/// handful of random simplices (one vertex per colour).
clcc::ColoredComplex random_coloured(int n, int vertices, int simplices, const std::string& prefix);
/// Clique complex of a random n-partite graph.
clcc::ColoredComplex random_flag_coloured(int n, int vertices, double edge_p, const std::string& prefix);
/// Random simplicial complex of dimension <= 2 with at most `triangles` triangles.
clcc::SimplicialComplex random_2_complex(int vertices, int triangles, int extra_edges);
/// Clique complex of a graph given by an edge list on vertices "v1".."vk".
clcc::SimplicialComplex clique_complex(int k, const std::vector<std::pair<int, int>>& edges);
/// Random pocset on `pairs` pairs.
clcc::Pocset random_pocset(int pairs, double relation_p);

// ---- oracles

/// Cubes of the CLCC enumerated inside the product of complete bipartite
/// graphs A_i x B_i: a product cube belongs to X when every corner does.
/// Each cube is its sorted list of corner names; corners are named by their
/// coordinate tuple, e.g. "A:x|B:y|A:z".
std::vector<std::set<std::vector<std::string>>> product_oracle(const clcc::ColoredComplex& a,
                                                               const clcc::ColoredComplex& b);
/// The same corner name for a CLCC vertex.
std::string corner_name(const clcc::Clcc& x, int vertex);

/// GF(2) rank by sparse column reduction on std::set columns.
std::size_t sparse_rank(const std::vector<std::vector<int>>& columns);
/// Betti numbers from sparse_rank on the host's boundary maps.
std::vector<long long> oracle_betti(const clcc::CellComplex& host, bool reduced);

/// Four-tuple scan for chordless 4-cycles, canonical (v smallest, u+ < u-).
std::set<std::array<int, 4>> brute_squares(const clcc::SimplicialComplex& k);
/// Subset scan for a clique that is not a simplex.
bool brute_flag(const clcc::SimplicialComplex& k);

/// Cubical subdivision of the subcomplex of [0,1]^n whose faces have free
/// directions spanning a simplex of Γ.  Points live in {0,1/2,1}^n and are
/// named by strings over "0", "h", "1".
clcc::CubeComplex unit_cube_oracle(const clcc::SimplicialComplex& gamma);

/// Tree on vertices 0..k with parent[i] < i + 1 for vertex i + 1.
clcc::CubeComplex tree_complex(const std::vector<int>& parent);
/// Product of paths with a and b edges.
clcc::CubeComplex grid_complex(int a, int b);

}  // namespace testing

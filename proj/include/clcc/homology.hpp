#pragma once

#include <string>
#include <vector>

#include "clcc/cell_complex.hpp"
#include "clcc/clcc.hpp"
#include "clcc/cube_complex.hpp"
#include "clcc/simplicial.hpp"

namespace clcc {

/// Z₂ chain: a set of cells of one dimension, as sorted cell indices.
/// Dimension -1 is the augmentation: cells is {0} or empty.
struct Chain {
  int dim = 0;
  std::vector<int> cells;

  bool zero() const { return cells.empty(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Sorts and cancels pairs, so any index list becomes a valid chain.
Chain make_chain(int dim, std::vector<int> cells);
Chain chain_sum(const Chain& a, const Chain& b);
/// Chain of every cell of dimension `dim`.
Chain all_cells(const CellComplex& host, int dim);

/// Throws on dimension -1 or on a cell missing from the host.
Chain boundary(const CellComplex& host, const Chain& c);
/// Zero boundary; chains of dimension -1 are cycles.
bool is_cycle(const CellComplex& host, const Chain& c);

/// GF(2) rank of the boundary map from dimension `dim` (dim >= 0; dimension
/// 0 maps to the augmentation).
std::size_t boundary_rank(const CellComplex& host, int dim);

/// Whether c lies in the image of the boundary map (c must be a cycle for
/// this to mean its class vanishes).
bool is_boundary(const CellComplex& host, const Chain& c);

/// b_0..b_top.  Reduced homology uses the augmented complex.
std::vector<long long> betti(const CellComplex& host, bool reduced);

/// Chain in the link of a cell.  For a k-cell e and an n-chain c this is an
/// (n-k-1)-chain; when k = n it is the augmentation bit of e in c.
struct Localized {
  SimplicialComplex link;
  Chain chain;
};

Localized localize(const SimplicialComplex& host, const Chain& c, const SimplicialComplex::Simplex& e);
Localized localize(const CubeComplex& host, const Chain& c, CubeRef e);

/// Σ ∗ Ω inside simplicial_join(left, right).
struct Joined {
  SimplicialComplex join;
  Chain chain;
};

Joined join_chains(const SimplicialComplex& left, const Chain& sigma, const SimplicialComplex& right,
                   const Chain& omega);

/// Whether the sum of all top cells is a cycle.  Throws when the host is not pure.
bool fundamental_class(const CellComplex& host);

/// Every top simplex in either support has a complementary simplex in the
/// other support; the empty simplex counts as available.
bool smartly_paired_chains(const ColoredComplex& a, const Chain& omega_a, const ColoredComplex& b,
                           const Chain& omega_b);

/// Sum of the cubes Q(a, b) over complementary-covering pairs of support
/// simplices, a chain of dimension d_A + d_B + 2 - n in x.complex().
/// Throws when the chains are not smartly paired or their hosts differ from x.
Chain clcc_cycle(const Clcc& x, const Chain& omega_a, const Chain& omega_b);

/// Cell ids of a chain and back.
std::vector<std::string> chain_ids(const CellComplex& host, const Chain& c);
Chain chain_from_ids(const CellComplex& host, int dim, const std::vector<std::string>& ids);

}  // namespace clcc

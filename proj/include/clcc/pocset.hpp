#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clcc/cube_complex.hpp"

namespace clcc {

/// Class of parallel edges: the closure of "opposite edges of a square".
struct Hyperplane {
  int id = 0;
  std::vector<int> edges;  // sorted edge indices
};

/// Classes numbered by their smallest edge.
std::vector<Hyperplane> hyperplanes(const CubeComplex& x);

/// Coordinate colour of every hyperplane of a CLCC, 0 when a class mixes
/// colours.  Throws when x carries no origin data.
struct Directions {
  std::vector<int> colour;  // indexed by hyperplane id
  bool valid = true;
};

Directions directions(const CubeComplex& x, const std::vector<Hyperplane>& planes);

/// Pairs of hyperplanes crossing in a common square, sorted.
std::vector<std::pair<int, int>> crossing_graph(const CubeComplex& x, const std::vector<Hyperplane>& planes);

/// Finite pocset on pairs {s, s*}.  Element 2i is "<id_i>+", 2i+1 is "<id_i>-";
/// the involution flips the low bit.  The order is stored transitively closed.
class Pocset {
 public:
  using Relation = std::pair<int, int>;  // (s, t) meaning s < t

  Pocset() = default;
  /// Closes the relations under transitivity and s < t => t* < s*.  Throws
  /// when the closure is not a strict order or relates s to s*.
  static Pocset make(std::vector<std::string> pair_ids, const std::vector<Relation>& relations);

  int pairs() const { return static_cast<int>(ids_.size()); }
  int elements() const { return 2 * pairs(); }
  static int star(int s) { return s ^ 1; }
  bool less(int s, int t) const { return less_[static_cast<std::size_t>(s * elements() + t)] != 0; }
  const std::string& pair_id(int i) const { return ids_.at(static_cast<std::size_t>(i)); }
  std::string name(int s) const { return pair_id(s / 2) + (s % 2 ? "-" : "+"); }
  std::optional<int> element(const std::string& name) const;
  /// Covering relations of the order, sorted.
  std::vector<Relation> cover_relations() const;
  /// All relations s < t, sorted.
  std::vector<Relation> relations() const;

 private:
  std::vector<std::string> ids_;
  std::vector<char> less_;
};

/// Ultrafilter as side bits: bit i set means the element "<id_i>-" is chosen.
using Ultrafilter = std::uint64_t;

/// Every ultrafilter, in increasing order.  At most 63 pairs.
std::vector<Ultrafilter> ultrafilters(const Pocset& s);
bool is_ultrafilter(const Pocset& s, Ultrafilter u);

struct SageevComplex {
  CubeComplex complex;
  std::vector<Ultrafilter> vertices;  // ultrafilter of each vertex
};

/// Vertices are the ultrafilters, edges flip one pair, and a cube is filled
/// wherever every vertex of its 1-skeleton is present.
SageevComplex sageev(const Pocset& s);

/// Half-spaces of a finite complex whose hyperplanes each cut the 1-skeleton
/// into exactly two pieces.  Pair i comes from hyperplane i, named "h<i>";
/// "+" is the side holding the smallest vertex index.
struct HalfspacePocset {
  Pocset pocset;
  std::vector<Hyperplane> planes;
  std::vector<std::vector<char>> plus_side;  // per hyperplane, vertex membership
};

HalfspacePocset halfspace_pocset(const CubeComplex& x);

/// sageev(halfspace_pocset(x)) against x through v -> {half-spaces containing v}.
struct DualityReport {
  bool holds = false;
  std::vector<int> vertex_map;  // x vertex -> vertex of the rebuilt complex
  std::string reason;
};

DualityReport roller_duality_check(const CubeComplex& x);

/// The half-space pocset of sageev(s) matches s under the pair each
/// hyperplane flips.
bool sageev_round_trip(const Pocset& s);

/// Involution- and order-preserving bijection p -> q (element map), if any.
std::optional<std::vector<int>> pocset_isomorphism(const Pocset& p, const Pocset& q);

}  // namespace clcc

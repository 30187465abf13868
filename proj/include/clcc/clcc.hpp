#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clcc/cube_complex.hpp"
#include "clcc/simplicial.hpp"

namespace clcc {

/// True iff the colour sets of `a` and `b` partition {1..n}.
bool complementary(const CoordSimplex& a, const CoordSimplex& b, int n);

/// Cube complex with coupled links built from two n-coloured complexes.
///
/// The d-cubes are the pairs Q(a, b) with coords(a) ∪ coords(b) = {1..n} and
/// |coords(a) ∩ coords(b)| = d; the vertices are the complementary pairs.
class Clcc {
 public:
  const ColoredComplex& gamma_a() const { return a_; }
  const ColoredComplex& gamma_b() const { return b_; }
  const CubeComplex& complex() const { return x_; }
  int colours() const { return a_.colours(); }

  std::optional<CubeRef> find(const CoordSimplex& a, const CoordSimplex& b) const;
  std::string cube_id(const CoordSimplex& a, const CoordSimplex& b) const;

  friend Clcc build_clcc(ColoredComplex a, ColoredComplex b);

 private:
  ColoredComplex a_;
  ColoredComplex b_;
  CubeComplex x_;
};

/// Throws when the colour counts differ or n exceeds kMaxColours.
Clcc build_clcc(ColoredComplex a, ColoredComplex b);

/// lk(a, Γ_A) * lk(b, Γ_B), with each link vertex renamed to the id of the
/// coface cube it stands for, so it compares literally with CubeComplex::link.
SimplicialComplex link_of_cube(const Clcc& x, CubeRef cube);

struct NpcReport {
  enum class Method { Flagness, VertexLinks };
  bool nonpositively_curved = false;
  Method method = Method::Flagness;
  std::optional<std::string> bad_vertex;          // cube id of a vertex with non-flag link
  std::vector<std::string> bad_clique;            // witness inside that link
};

/// Flag inputs certify non-positive curvature directly; otherwise every
/// vertex link of the built complex is checked for flagness.
NpcReport is_npc(const ColoredComplex& a, const ColoredComplex& b);

struct PairingReport {
  bool holds = true;
  char side = 0;                       // 'A' or 'B' for the offending simplex
  std::vector<std::string> simplex;    // its vertex ids
};

PairingReport smartly_paired(const ColoredComplex& a, const ColoredComplex& b);
PairingReport doubly_smartly_paired(const ColoredComplex& a, const ColoredComplex& b);

/// Removes maximal simplices lacking a complementary simplex until none is
/// left.  The CLCC is unchanged.  The empty simplex is never removed, so a
/// pair without any complementary simplices reduces to two vertex-free
/// complexes, the only output that is not smartly paired.
std::pair<ColoredComplex, ColoredComplex> prune_to_smart_pair(const ColoredComplex& a, const ColoredComplex& b);

struct DimensionReport {
  int dim = -1;
  bool pure = true;
};

DimensionReport dimension(const CubeComplex& x);

/// Graph on the vertices (ā, b̲) of X whose A-coordinate is maximal in Γ_A.
struct ConnGraph {
  struct Node {
    CoordSimplex a;
    CoordSimplex b;
    int vertex = 0;  // index of the vertex in the CLCC
  };
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> edges;
  bool connected() const;
};

ConnGraph conn_graph(const Clcc& x);

/// Connectedness through the maximal-simplex graph; refuses pairs that are
/// not smartly paired.
bool is_connected_criterion(const Clcc& x);
/// Breadth-first search over the 1-skeleton.  The empty complex is not connected.
bool is_connected_bfs(const CubeComplex& x);

long long euler_characteristic(const CubeComplex& x);

enum class LinkTag { Circle, TwoSphere, Other, Unknown };

std::string to_string(LinkTag tag);
LinkTag classify_link(const SimplicialComplex& link);
std::vector<LinkTag> classify_vertex_links(const CubeComplex& x);

/// Colour-preserving simplicial map given by vertex ids.
using VertexMap = std::map<std::string, std::string>;

/// Cubical map between complexes; every cube lands on a cube.
struct CubicalMap {
  std::vector<int> vertex_image;
  std::vector<std::vector<CubeRef>> cube_image;  // [dim][index]
  std::vector<std::size_t> target_counts;        // cubes per dimension of the target

  bool injective() const;
  bool surjective() const;
};

CubicalMap induced_map(const Clcc& source, const Clcc& target, const VertexMap& map_a, const VertexMap& map_b);

/// g after f.
CubicalMap compose(const CubicalMap& g, const CubicalMap& f);

/// For every vertex, the map induced on links is injective and its image is a
/// full subcomplex of the target link.
bool induces_full_link_embeddings(const Clcc& source, const Clcc& target, const CubicalMap& map);

}  // namespace clcc

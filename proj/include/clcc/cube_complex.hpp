#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clcc/cell_complex.hpp"
#include "clcc/simplicial.hpp"

namespace clcc {

/// (dimension, index) address of a cube.
struct CubeRef {
  int dim = 0;
  int index = 0;
  auto operator<=>(const CubeRef&) const = default;
};

/// Finite cube complex without self-gluings: a d-cube has 2d distinct facets
/// and 2^d distinct vertices, so a cube is determined by its vertex set.
///
/// Cubes built by `build_clcc` also record their origin pair Q(a, b).  For an
/// edge of a CLCC the facets are stored as (tail, head), the tail being the
/// endpoint with the extra A-coordinate.
class CubeComplex {
 public:
  struct Origin {
    CoordSimplex a;
    CoordSimplex b;
  };

  CubeComplex() = default;

  /// Generic complex from cubes given by vertex-id lists.  Every face of
  /// every listed cube must also be listed (vertices may be omitted; they are
  /// added).  A d-cube lists 2^d vertices.  Cube ids are "[v1,...]" with
  /// sorted vertex ids, vertex ids are kept as given.
  static CubeComplex from_vertex_sets(const std::vector<std::vector<std::string>>& cubes);

  /// Appends a cube; used by constructions that know facets directly.
  int add_cube(int dim, std::string id, std::vector<int> facets);
  void set_origins(int colours, std::vector<std::vector<Origin>> origins);

  int dimension() const { return cells_.dimension(); }
  std::size_t count(int dim) const { return cells_.count(dim); }
  const std::string& id(CubeRef c) const { return cells_.id(c.dim, c.index); }
  std::optional<int> find(int dim, std::string_view id) const { return cells_.find(dim, id); }
  std::span<const int> facets(CubeRef c) const { return cells_.facets(c.dim, c.index); }
  /// Sorted vertex indices of a cube.
  const std::vector<int>& vertices(CubeRef c) const;
  /// Endpoints of edge `e`.
  std::pair<int, int> endpoints(int edge) const;
  const std::vector<int>& neighbours(int vertex) const { return neighbours_.at(static_cast<std::size_t>(vertex)); }
  const std::vector<int>& edges_at(int vertex) const { return edges_at_.at(static_cast<std::size_t>(vertex)); }

  /// True when `face` is a face of (or equal to) `cube`.
  bool is_face(CubeRef face, CubeRef cube) const;
  /// Cubes strictly containing `c`, ordered by (dim, index).
  std::vector<CubeRef> cofaces(CubeRef c) const;

  /// Link of a cube read off the face poset: one vertex per (d+1)-dimensional
  /// coface, labelled by that coface's id, one simplex per higher coface.
  SimplicialComplex link(CubeRef c) const;

  /// Connected components of the 1-skeleton (component index per vertex).
  std::vector<int> components(int* count = nullptr) const;

  const CellComplex& cells() const { return cells_; }

  bool has_origin() const { return colours_ > 0; }
  int colours() const { return colours_; }
  const Origin& origin(CubeRef c) const;

 private:
  CellComplex cells_;
  std::vector<std::vector<std::vector<int>>> vertex_sets_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<std::vector<int>> edges_at_;
  std::vector<std::vector<CubeRef>> incident_;  // cubes containing each vertex
  int colours_ = 0;
  std::vector<std::vector<Origin>> origins_;
};

}  // namespace clcc

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clcc/cell_complex.hpp"

namespace clcc {

/// Bit (c - 1) is set when colour c is present.
using ColourMask = std::uint32_t;

/// Largest colour count representable by a ColourMask.
inline constexpr int kMaxColours = 30;

/// Finite abstract simplicial complex with string-labelled vertices.
///
/// Vertices are indexed in sorted label order.  A simplex is a sorted vector
/// of vertex indices; the empty simplex is always present.  Simplices of each
/// dimension are kept in lexicographic order and that order is the cell order
/// of `cells()`.
class SimplicialComplex {
 public:
  using Simplex = std::vector<int>;

  SimplicialComplex();

  /// Downward closure of `simplices` over the declared `labels`.  Every
  /// simplex entry must name a declared label; repeated labels inside one
  /// simplex are rejected.
  static SimplicialComplex from_simplices(std::vector<std::string> labels,
                                          const std::vector<std::vector<std::string>>& simplices);

  int dimension() const { return static_cast<int>(by_dim_.size()) - 2; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<int> vertex_index(std::string_view label) const;

  /// Simplices with `dim + 1` vertices, lexicographically sorted.
  const std::vector<Simplex>& simplices(int dim) const;
  std::size_t simplex_count() const;
  bool contains(const Simplex& s) const;
  std::optional<int> find(const Simplex& s) const;
  std::vector<Simplex> maximal_simplices() const;
  bool is_pure() const { return cells_.is_pure(); }

  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbours(int v) const { return neighbours_.at(static_cast<std::size_t>(v)); }

  /// General link: simplices disjoint from `s` whose union with `s` is a simplex.
  SimplicialComplex link(const Simplex& s) const;
  SimplicialComplex full_subcomplex(const std::vector<int>& vertices) const;

  /// Same complex with vertex v renamed to new_labels[v] (must stay injective).
  SimplicialComplex relabelled(const std::vector<std::string>& new_labels) const;

  std::vector<std::string> simplex_labels(const Simplex& s) const;
  Simplex simplex_from_labels(const std::vector<std::string>& labels) const;

  const CellComplex& cells() const { return cells_; }

  /// Label-level equality (same labels, same simplices).
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  void index();

  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> by_dim_;  // by_dim_[d + 1]
  std::vector<std::map<Simplex, int>> lookup_;
  std::vector<std::vector<int>> neighbours_;
  CellComplex cells_;
};

/// Simplicial join with vertex set the disjoint union of both vertex sets.
/// Labels are kept when the two label sets are disjoint; otherwise they are
/// prefixed with "0:" and "1:".
SimplicialComplex simplicial_join(const SimplicialComplex& left, const SimplicialComplex& right);

/// A clique of the 1-skeleton that does not span a simplex, minimal by size.
struct FlagReport {
  bool flag = true;
  std::vector<int> witness;  // vertex indices, empty when flag
};

FlagReport check_flag(const SimplicialComplex& k);

/// Chordless 4-cycle v - u_plus - w - u_minus, stored as vertex indices.
/// Canonical form: v is the smallest of the four and u_plus < u_minus.
struct Square {
  std::array<int, 4> cycle{};
  auto operator<=>(const Square&) const = default;
};

/// All empty squares, in lexicographic order of their canonical cycles.
/// `allowed` restricts the search to the full subcomplex on those vertices.
std::vector<Square> find_empty_squares(const SimplicialComplex& k,
                                       const std::vector<char>* allowed = nullptr);

// ---------------------------------------------------------------------------

/// Simplex of an n-coloured complex, addressed by colour.
///
/// Slot c - 1 holds the index of the vertex of colour c, or -1.  The vertex
/// indices refer to the owning ColoredComplex.
class CoordSimplex {
 public:
  CoordSimplex() = default;
  explicit CoordSimplex(int colours) : slots_(static_cast<std::size_t>(colours), -1) {}

  int colours() const { return static_cast<int>(slots_.size()); }
  bool has(int colour) const { return slots_.at(static_cast<std::size_t>(colour - 1)) >= 0; }
  int at(int colour) const { return slots_.at(static_cast<std::size_t>(colour - 1)); }
  ColourMask coords() const;
  int size() const;
  int dimension() const { return size() - 1; }
  bool empty() const { return size() == 0; }

  CoordSimplex with(int colour, int vertex) const;
  CoordSimplex without(int colour) const;
  /// Restriction to the colours in `mask`.
  CoordSimplex restricted(ColourMask mask) const;
  bool is_face_of(const CoordSimplex& other) const;
  /// Vertex indices in increasing order.
  std::vector<int> vertices() const;

  std::span<const int> slots() const { return slots_; }

  auto operator<=>(const CoordSimplex&) const = default;

 private:
  std::vector<int> slots_;
};

/// Union of two simplices of the same complex when no colour clashes.
std::optional<CoordSimplex> merge(const CoordSimplex& a, const CoordSimplex& b);

/// n-coloured simplicial complex: every simplex has at most one vertex per
/// colour.  Immutable after construction.
class ColoredComplex {
 public:
  struct Vertex {
    std::string id;
    int colour = 0;
    auto operator<=>(const Vertex&) const = default;
  };

  ColoredComplex() = default;

  /// Downward closure of `maximal` (any simplex list is accepted; entries
  /// that are faces of others are harmless).  Throws on a duplicate colour
  /// inside a simplex, an unknown vertex id, a duplicated vertex id or a
  /// colour outside 1..n.
  static ColoredComplex close_downward(int n, std::vector<Vertex> vertices,
                                       const std::vector<std::vector<std::string>>& maximal);

  /// Same as above with simplices given directly.  Vertex indices in the
  /// simplices refer to `vertices` after sorting by id, so callers normally
  /// pass vertices already sorted.
  static ColoredComplex from_coord_simplices(int n, std::vector<Vertex> vertices,
                                             const std::vector<CoordSimplex>& simplices);

  int colours() const { return n_; }
  ColourMask full_mask() const { return (ColourMask{1} << n_) - 1; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int colour_of(int v) const { return vertices_.at(static_cast<std::size_t>(v)).colour; }
  const std::string& id_of(int v) const { return vertices_.at(static_cast<std::size_t>(v)).id; }
  std::optional<int> vertex_index(std::string_view id) const;

  /// All simplices including the empty one, in CoordSimplex order.
  const std::vector<CoordSimplex>& simplices() const { return simplices_; }
  bool contains(const CoordSimplex& s) const;
  /// Simplices whose colour set is exactly `mask`.
  const std::vector<CoordSimplex>& with_coords(ColourMask mask) const;
  bool has_coords(ColourMask mask) const { return !with_coords(mask).empty(); }
  /// Simplices grouped by colour set.
  const std::map<ColourMask, std::vector<CoordSimplex>>& by_coords() const { return by_mask_; }
  std::vector<CoordSimplex> maximal_simplices() const;
  int dimension() const { return uncoloured_.dimension(); }
  bool is_pure() const { return uncoloured_.is_pure(); }

  CoordSimplex empty_simplex() const { return CoordSimplex(n_); }
  CoordSimplex simplex_from_ids(const std::vector<std::string>& ids) const;
  std::vector<std::string> ids(const CoordSimplex& s) const;
  /// Canonical text key, e.g. "{1:x,3:z}".
  std::string key(const CoordSimplex& s) const;

  CoordSimplex from_plain(const SimplicialComplex::Simplex& s) const;
  SimplicialComplex::Simplex to_plain(const CoordSimplex& s) const { return s.vertices(); }

  /// Underlying uncoloured complex; vertex indices coincide.
  const SimplicialComplex& uncoloured() const { return uncoloured_; }

  /// Same vertices, simplices replaced by the downward closure of `simplices`.
  ColoredComplex restricted_to(const std::vector<CoordSimplex>& simplices) const;

  friend bool operator==(const ColoredComplex& a, const ColoredComplex& b) {
    return a.n_ == b.n_ && a.vertices_ == b.vertices_ && a.simplices_ == b.simplices_;
  }

 private:
  void index();

  int n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<CoordSimplex> simplices_;
  std::map<ColourMask, std::vector<CoordSimplex>> by_mask_;
  SimplicialComplex uncoloured_;
};

/// Empty square with vertex ids and colours, in the order v, u_plus, w, u_minus.
struct SquareWitness {
  std::array<std::string, 4> ids;
  std::array<int, 4> colours{};
  int distinct_colours() const;
  auto operator<=>(const SquareWitness&) const = default;
};

struct ColoredFlagReport {
  bool flag = true;
  std::vector<std::string> witness;
};

ColoredFlagReport is_flag(const ColoredComplex& k);

/// Link of `s`; keeps the ambient colouring.  Throws when `s` is not a simplex of `k`.
ColoredComplex link_simplex(const ColoredComplex& k, const CoordSimplex& s);

/// Full subcomplex on the given vertex ids.  Throws on an unknown id.
ColoredComplex full_subcomplex(const ColoredComplex& k, const std::vector<std::string>& ids);

/// Empty squares, optionally restricted to two colour classes.
std::vector<SquareWitness> empty_squares(const ColoredComplex& k,
                                         std::optional<std::pair<int, int>> colour_filter = std::nullopt);

struct LargenessReport {
  bool holds = true;
  std::optional<SquareWitness> witness;
};

LargenessReport is_5_large(const ColoredComplex& k);

/// Only bicolour empty squares: every empty square uses exactly two colours.
LargenessReport is_obes(const ColoredComplex& k);

struct PairwiseReport {
  bool holds = true;
  std::optional<std::pair<int, int>> colours;
  std::optional<SquareWitness> witness_a;
  std::optional<SquareWitness> witness_b;
};

PairwiseReport pairwise_5_large(const ColoredComplex& a, const ColoredComplex& b);

/// Colour assignment for the three barycentre classes of a 2-complex.
struct BarycentricColours {
  int vertex = 1;
  int edge = 2;
  int face = 3;
};

/// Barycentric subdivision of a complex of dimension <= 2, coloured by
/// barycentre type.  Barycentre ids are the sorted vertex labels of the
/// simplex in brackets, e.g. "[x,y]".
ColoredComplex barycentric_subdivision_2d(const SimplicialComplex& k, BarycentricColours colours);

}  // namespace clcc

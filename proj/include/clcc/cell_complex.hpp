#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clcc {

/// Graded cells with facet incidences, shared by simplicial and cube complexes.
///
/// Dimension -1 always holds exactly one cell, the empty cell, so that the
/// augmented chain complex (reduced homology) needs no special casing: every
/// vertex has the empty cell as its only facet.  Cells are addressed by
/// (dimension, index); indices are dense and stable.
class CellComplex {
 public:
  CellComplex();

  /// Appends a cell of dimension `dim` (>= 0) and returns its index.  Facets
  /// must already exist in dimension `dim - 1`.
  int add_cell(int dim, std::string id, std::vector<int> facets);

  /// Top dimension; -1 when only the empty cell exists.
  int dimension() const { return static_cast<int>(facets_.size()) - 2; }
  std::size_t count(int dim) const;
  std::size_t total_cells() const;

  std::span<const int> facets(int dim, int index) const;
  const std::string& id(int dim, int index) const;
  std::optional<int> find(int dim, std::string_view id) const;

  /// Indices of the (dim + 1)-cells having `index` as a facet.
  const std::vector<int>& cofacets(int dim, int index) const;

  /// Alternating sum of cell counts over dimensions >= 0.
  long long euler_characteristic() const;

  /// True when every cell is a face of some cell of top dimension.
  bool is_pure() const;

 private:
  std::size_t level(int dim) const { return static_cast<std::size_t>(dim + 1); }

  std::vector<std::vector<std::vector<int>>> facets_;
  std::vector<std::vector<std::vector<int>>> cofacets_;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::unordered_map<std::string, int>> lookup_;
};

}  // namespace clcc

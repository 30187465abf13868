#include "clcc/cell_complex.hpp"

#include <algorithm>

#include "clcc/error.hpp"

namespace clcc {

CellComplex::CellComplex() {
  facets_.push_back({{}});
  cofacets_.push_back({{}});
  ids_.push_back({"{}"});
  lookup_.push_back({{"{}", 0}});
}

int CellComplex::add_cell(int dim, std::string id, std::vector<int> facets) {
  if (dim < 0) throw Error("cells of negative dimension cannot be added");
  if (dim > dimension() + 1) throw Error("cell added before its facet dimension exists");
  if (dim == 0) facets = {0};
  const std::size_t lvl = level(dim);
  if (lvl == facets_.size()) {
    facets_.emplace_back();
    cofacets_.emplace_back();
    ids_.emplace_back();
    lookup_.emplace_back();
  }
  const int index = static_cast<int>(facets_[lvl].size());
  for (int f : facets) {
    if (f < 0 || static_cast<std::size_t>(f) >= facets_[lvl - 1].size())
      throw Error("facet index out of range for cell '" + id + "'");
    cofacets_[lvl - 1][static_cast<std::size_t>(f)].push_back(index);
  }
  if (!lookup_[lvl].emplace(id, index).second) throw Error("duplicate cell id '" + id + "'");
  facets_[lvl].push_back(std::move(facets));
  cofacets_[lvl].emplace_back();
  ids_[lvl].push_back(std::move(id));
  return index;
}

std::size_t CellComplex::count(int dim) const {
  if (dim < -1 || level(dim) >= facets_.size()) return 0;
  return facets_[level(dim)].size();
}

std::size_t CellComplex::total_cells() const {
  std::size_t total = 0;
  for (int d = 0; d <= dimension(); ++d) total += count(d);
  return total;
}

std::span<const int> CellComplex::facets(int dim, int index) const {
  return facets_.at(level(dim)).at(static_cast<std::size_t>(index));
}

const std::string& CellComplex::id(int dim, int index) const {
  return ids_.at(level(dim)).at(static_cast<std::size_t>(index));
}

std::optional<int> CellComplex::find(int dim, std::string_view id) const {
  if (dim < -1 || level(dim) >= lookup_.size()) return std::nullopt;
  const auto& table = lookup_[level(dim)];
  auto it = table.find(std::string(id));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& CellComplex::cofacets(int dim, int index) const {
  return cofacets_.at(level(dim)).at(static_cast<std::size_t>(index));
}

long long CellComplex::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= dimension(); ++d) {
    const auto c = static_cast<long long>(count(d));
    chi += (d % 2 == 0) ? c : -c;
  }
  return chi;
}

bool CellComplex::is_pure() const {
  const int top = dimension();
  if (top < 0) return true;
  // Mark downward from the top cells; every cell must be reached.
  std::vector<std::vector<char>> reached(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) reached[static_cast<std::size_t>(d)].assign(count(d), 0);
  std::fill(reached[static_cast<std::size_t>(top)].begin(), reached[static_cast<std::size_t>(top)].end(), 1);
  for (int d = top; d >= 1; --d) {
    for (std::size_t i = 0; i < count(d); ++i) {
      if (!reached[static_cast<std::size_t>(d)][i]) continue;
      for (int f : facets(d, static_cast<int>(i))) reached[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(f)] = 1;
    }
  }
  for (const auto& row : reached)
    if (std::find(row.begin(), row.end(), 0) != row.end()) return false;
  return true;
}

}  // namespace clcc

#include "clcc/cube_complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>

#include "clcc/error.hpp"

namespace clcc {

CubeComplex CubeComplex::from_vertex_sets(const std::vector<std::vector<std::string>>& cubes) {
  std::set<std::string> vertex_ids;
  std::map<int, std::set<std::vector<std::string>>> by_dim;
  for (auto cube : cubes) {
    std::sort(cube.begin(), cube.end());
    if (cube.empty() || std::adjacent_find(cube.begin(), cube.end()) != cube.end())
      throw Error("a cube must list distinct vertices");
    if (!std::has_single_bit(cube.size())) throw Error("a cube must have a power-of-two number of vertices");
    vertex_ids.insert(cube.begin(), cube.end());
    by_dim[std::countr_zero(cube.size())].insert(std::move(cube));
  }
  for (const auto& v : vertex_ids) by_dim[0].insert({v});

  CubeComplex out;
  std::map<std::string, int> vertex_index;
  for (const auto& v : by_dim[0]) {
    vertex_index.emplace(v[0], static_cast<int>(vertex_index.size()));
    out.add_cube(0, v[0], {});
  }
  const int top = by_dim.rbegin()->first;
  std::vector<std::map<std::vector<int>, int>> lookup(static_cast<std::size_t>(top + 1));
  for (int v = 0; v < static_cast<int>(vertex_index.size()); ++v) lookup[0].emplace(std::vector<int>{v}, v);
  for (int d = 1; d <= top; ++d) {
    for (const auto& cube : by_dim[d]) {
      std::vector<int> vs;
      for (const auto& id : cube) vs.push_back(vertex_index.at(id));
      std::vector<int> facets;
      for (const auto& [face, index] : lookup[static_cast<std::size_t>(d - 1)])
        if (std::includes(vs.begin(), vs.end(), face.begin(), face.end())) facets.push_back(index);
      if (static_cast<int>(facets.size()) != 2 * d) {
        std::string name = "[";
        for (std::size_t i = 0; i < cube.size(); ++i) name += (i ? "," : "") + cube[i];
        throw Error("cube " + name + "] has " + std::to_string(facets.size()) + " listed facets, expected " +
                    std::to_string(2 * d));
      }
      std::string name = "[";
      for (std::size_t i = 0; i < cube.size(); ++i) name += (i ? "," : "") + cube[i];
      name += "]";
      const int index = out.add_cube(d, std::move(name), std::move(facets));
      lookup[static_cast<std::size_t>(d)].emplace(vs, index);
    }
  }
  return out;
}

int CubeComplex::add_cube(int dim, std::string id, std::vector<int> facets) {
  if (dim >= 1 && static_cast<int>(facets.size()) != 2 * dim)
    throw Error("a " + std::to_string(dim) + "-cube needs " + std::to_string(2 * dim) + " facets");
  std::vector<int> vs;
  if (dim == 0) {
    vs = {static_cast<int>(count(0))};
  } else {
    for (int f : facets) {
      const auto& fv = vertex_sets_.at(static_cast<std::size_t>(dim - 1)).at(static_cast<std::size_t>(f));
      vs.insert(vs.end(), fv.begin(), fv.end());
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() != (std::size_t{1} << dim)) throw Error("cube '" + id + "' does not have 2^d distinct vertices");
  }
  const int index = cells_.add_cell(dim, std::move(id), facets);
  if (vertex_sets_.size() <= static_cast<std::size_t>(dim)) vertex_sets_.resize(static_cast<std::size_t>(dim + 1));
  vertex_sets_[static_cast<std::size_t>(dim)].push_back(vs);
  if (dim == 0) {
    neighbours_.emplace_back();
    edges_at_.emplace_back();
    incident_.emplace_back();
  }
  if (dim == 1) {
    neighbours_[static_cast<std::size_t>(vs[0])].push_back(vs[1]);
    neighbours_[static_cast<std::size_t>(vs[1])].push_back(vs[0]);
    edges_at_[static_cast<std::size_t>(vs[0])].push_back(index);
    edges_at_[static_cast<std::size_t>(vs[1])].push_back(index);
  }
  for (int v : vs) incident_[static_cast<std::size_t>(v)].push_back({dim, index});
  return index;
}

void CubeComplex::set_origins(int colours, std::vector<std::vector<Origin>> origins) {
  colours_ = colours;
  origins_ = std::move(origins);
}

const std::vector<int>& CubeComplex::vertices(CubeRef c) const {
  return vertex_sets_.at(static_cast<std::size_t>(c.dim)).at(static_cast<std::size_t>(c.index));
}

std::pair<int, int> CubeComplex::endpoints(int edge) const {
  auto f = facets({1, edge});
  return {f[0], f[1]};
}

bool CubeComplex::is_face(CubeRef face, CubeRef cube) const {
  if (face.dim > cube.dim) return false;
  const auto& small = vertices(face);
  const auto& big = vertices(cube);
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<CubeRef> CubeComplex::cofaces(CubeRef c) const {
  std::vector<CubeRef> out;
  const int anchor = vertices(c).front();
  for (const auto& candidate : incident_.at(static_cast<std::size_t>(anchor)))
    if (candidate.dim > c.dim && is_face(c, candidate)) out.push_back(candidate);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex CubeComplex::link(CubeRef c) const {
  const auto up = cofaces(c);
  std::vector<CubeRef> next;
  std::vector<std::string> labels;
  for (const auto& u : up) {
    if (u.dim == c.dim + 1) {
      next.push_back(u);
      labels.push_back(id(u));
    }
  }
  std::vector<std::vector<std::string>> simplices;
  for (const auto& u : up) {
    std::vector<std::string> simplex;
    for (const auto& v : next)
      if (is_face(v, u)) simplex.push_back(id(v));
    simplices.push_back(std::move(simplex));
  }
  return SimplicialComplex::from_simplices(std::move(labels), simplices);
}

std::vector<int> CubeComplex::components(int* count_out) const {
  const std::size_t n = count(0);
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::queue<int> queue;
    queue.push(static_cast<int>(start));
    comp[start] = next;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int w : neighbours(v)) {
        if (comp[static_cast<std::size_t>(w)] >= 0) continue;
        comp[static_cast<std::size_t>(w)] = next;
        queue.push(w);
      }
    }
    ++next;
  }
  if (count_out) *count_out = next;
  return comp;
}

const CubeComplex::Origin& CubeComplex::origin(CubeRef c) const {
  if (!has_origin()) throw Error("cube complex carries no CLCC origin data");
  return origins_.at(static_cast<std::size_t>(c.dim)).at(static_cast<std::size_t>(c.index));
}

}  // namespace clcc

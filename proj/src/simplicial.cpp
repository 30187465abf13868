#include "clcc/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "clcc/error.hpp"

namespace clcc {

namespace {

std::string bracket(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ']';
  return out;
}

// Adds every face of every simplex in `seed` (downward closure), level by level.
template <class S, class FacetFn>
std::set<S> close_levels(const std::vector<S>& seed, int max_size, FacetFn facets_of, auto size_of) {
  std::vector<std::set<S>> levels(static_cast<std::size_t>(max_size + 1));
  for (const auto& s : seed) levels[static_cast<std::size_t>(size_of(s))].insert(s);
  for (int k = max_size; k >= 1; --k) {
    for (const auto& s : levels[static_cast<std::size_t>(k)])
      for (auto& f : facets_of(s)) levels[static_cast<std::size_t>(k - 1)].insert(std::move(f));
  }
  std::set<S> all;
  for (auto& level : levels) all.insert(level.begin(), level.end());
  return all;
}

}  // namespace

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex() { index(); }

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> labels,
                                                    const std::vector<std::vector<std::string>>& simplices) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw Error("duplicate vertex label '" + *std::adjacent_find(labels.begin(), labels.end()) + "'");
  SimplicialComplex out;
  out.labels_ = std::move(labels);

  std::vector<Simplex> seed;
  int max_size = 0;
  for (const auto& names : simplices) {
    Simplex s = out.simplex_from_labels(names);
    max_size = std::max(max_size, static_cast<int>(s.size()));
    seed.push_back(std::move(s));
  }
  seed.emplace_back();
  for (int v = 0; v < out.vertex_count(); ++v) seed.push_back({v});
  max_size = std::max(max_size, out.vertex_count() > 0 ? 1 : 0);

  auto all = close_levels<Simplex>(
      seed, max_size,
      [](const Simplex& s) {
        std::vector<Simplex> faces;
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex f = s;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          faces.push_back(std::move(f));
        }
        return faces;
      },
      [](const Simplex& s) { return static_cast<int>(s.size()); });

  out.by_dim_.clear();
  for (const auto& s : all) {
    const std::size_t lvl = s.size();
    if (out.by_dim_.size() <= lvl) out.by_dim_.resize(lvl + 1);
    out.by_dim_[lvl].push_back(s);
  }
  out.index();
  return out;
}

void SimplicialComplex::index() {
  if (by_dim_.empty()) by_dim_.push_back({Simplex{}});
  lookup_.assign(by_dim_.size(), {});
  cells_ = CellComplex();
  for (std::size_t lvl = 0; lvl < by_dim_.size(); ++lvl) {
    std::sort(by_dim_[lvl].begin(), by_dim_[lvl].end());
    for (std::size_t i = 0; i < by_dim_[lvl].size(); ++i) lookup_[lvl].emplace(by_dim_[lvl][i], static_cast<int>(i));
  }
  for (std::size_t lvl = 1; lvl < by_dim_.size(); ++lvl) {
    for (const auto& s : by_dim_[lvl]) {
      std::vector<int> facets;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        facets.push_back(lookup_[lvl - 1].at(f));
      }
      cells_.add_cell(static_cast<int>(lvl) - 1, bracket(simplex_labels(s)), std::move(facets));
    }
  }
  neighbours_.assign(labels_.size(), {});
  if (by_dim_.size() > 2) {
    for (const auto& e : by_dim_[2]) {
      neighbours_[static_cast<std::size_t>(e[0])].push_back(e[1]);
      neighbours_[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
  }
  for (auto& n : neighbours_) std::sort(n.begin(), n.end());
}

std::optional<int> SimplicialComplex::vertex_index(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

const std::vector<SimplicialComplex::Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> none;
  const auto lvl = static_cast<std::size_t>(dim + 1);
  if (dim < -1 || lvl >= by_dim_.size()) return none;
  return by_dim_[lvl];
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t total = 0;
  for (const auto& level : by_dim_) total += level.size();
  return total;
}

bool SimplicialComplex::contains(const Simplex& s) const { return find(s).has_value(); }

std::optional<int> SimplicialComplex::find(const Simplex& s) const {
  if (s.size() >= lookup_.size()) return std::nullopt;
  auto it = lookup_[s.size()].find(s);
  if (it == lookup_[s.size()].end()) return std::nullopt;
  return it->second;
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = -1; d <= dimension(); ++d) {
    const auto& level = simplices(d);
    for (std::size_t i = 0; i < level.size(); ++i)
      if (cells_.cofacets(d, static_cast<int>(i)).empty()) out.push_back(level[i]);
  }
  std::sort(out.begin(), out.end(), [this](const Simplex& a, const Simplex& b) {
    return simplex_labels(a) < simplex_labels(b);
  });
  return out;
}

bool SimplicialComplex::adjacent(int u, int v) const {
  const auto& n = neighbours(u);
  return std::binary_search(n.begin(), n.end(), v);
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
  if (!contains(s)) throw Error("link requested for a simplex not in the complex");
  std::set<int> used;
  std::vector<std::vector<std::string>> faces;
  for (int d = static_cast<int>(s.size()) - 1; d <= dimension(); ++d) {
    for (const auto& t : simplices(d)) {
      if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
      Simplex rest;
      std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
      used.insert(rest.begin(), rest.end());
      faces.push_back(simplex_labels(rest));
    }
  }
  std::vector<std::string> names;
  for (int v : used) names.push_back(label(v));
  return from_simplices(std::move(names), faces);
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<int>& vertices) const {
  std::vector<char> keep(labels_.size(), 0);
  std::vector<std::string> names;
  for (int v : vertices) {
    if (v < 0 || v >= vertex_count()) throw Error("full subcomplex on an unknown vertex");
    if (!keep[static_cast<std::size_t>(v)]) names.push_back(label(v));
    keep[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<std::vector<std::string>> faces;
  for (int d = 0; d <= dimension(); ++d)
    for (const auto& s : simplices(d))
      if (std::all_of(s.begin(), s.end(), [&](int v) { return keep[static_cast<std::size_t>(v)]; }))
        faces.push_back(simplex_labels(s));
  return from_simplices(std::move(names), faces);
}

SimplicialComplex SimplicialComplex::relabelled(const std::vector<std::string>& new_labels) const {
  if (new_labels.size() != labels_.size()) throw Error("relabelling must name every vertex");
  std::vector<std::vector<std::string>> faces;
  for (const auto& s : maximal_simplices()) {
    std::vector<std::string> names;
    for (int v : s) names.push_back(new_labels[static_cast<std::size_t>(v)]);
    faces.push_back(std::move(names));
  }
  return from_simplices(new_labels, faces);
}

std::vector<std::string> SimplicialComplex::simplex_labels(const Simplex& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (int v : s) out.push_back(label(v));
  return out;
}

SimplicialComplex::Simplex SimplicialComplex::simplex_from_labels(const std::vector<std::string>& names) const {
  Simplex s;
  for (const auto& name : names) {
    auto v = vertex_index(name);
    if (!v) throw Error("unknown vertex '" + name + "'");
    s.push_back(*v);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("vertex repeated inside a simplex");
  return s;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.labels_ == b.labels_ && a.by_dim_ == b.by_dim_;
}

SimplicialComplex simplicial_join(const SimplicialComplex& left, const SimplicialComplex& right) {
  std::vector<std::string> l = left.labels();
  std::vector<std::string> r = right.labels();
  std::vector<std::string> common;
  std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(common));
  if (!common.empty()) {
    for (auto& s : l) s = "0:" + s;
    for (auto& s : r) s = "1:" + s;
  }
  std::vector<std::string> labels = l;
  labels.insert(labels.end(), r.begin(), r.end());
  std::vector<std::vector<std::string>> faces;
  for (const auto& s : left.maximal_simplices()) {
    for (const auto& t : right.maximal_simplices()) {
      std::vector<std::string> face;
      for (int v : s) face.push_back(l[static_cast<std::size_t>(v)]);
      for (int v : t) face.push_back(r[static_cast<std::size_t>(v)]);
      faces.push_back(std::move(face));
    }
  }
  return SimplicialComplex::from_simplices(std::move(labels), faces);
}

FlagReport check_flag(const SimplicialComplex& k) {
  // Cliques of size m+1 all of whose m-subsets are simplices; the first such
  // clique that is not itself a simplex is a minimal non-spanning clique.
  for (int d = 1; d <= k.dimension(); ++d) {
    for (const auto& s : k.simplices(d)) {
      for (int v : k.neighbours(s.back())) {
        if (v <= s.back()) continue;
        if (!std::all_of(s.begin(), s.end(), [&](int u) { return k.adjacent(u, v); })) continue;
        SimplicialComplex::Simplex candidate = s;
        candidate.push_back(v);
        if (k.contains(candidate)) continue;
        bool all_facets = true;
        for (std::size_t i = 0; i + 1 < candidate.size() && all_facets; ++i) {
          auto f = candidate;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          all_facets = k.contains(f);
        }
        if (all_facets) return {false, candidate};
      }
    }
  }
  return {};
}

std::vector<Square> find_empty_squares(const SimplicialComplex& k, const std::vector<char>* allowed) {
  const int n = k.vertex_count();
  auto ok = [&](int v) { return allowed == nullptr || (*allowed)[static_cast<std::size_t>(v)]; };
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v)
    for (int u : k.neighbours(v)) adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;

  std::vector<Square> out;
  std::vector<int> common;
  for (int v = 0; v < n; ++v) {
    if (!ok(v)) continue;
    for (int w = v + 1; w < n; ++w) {
      if (!ok(w) || adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
      common.clear();
      const auto& nv = k.neighbours(v);
      const auto& nw = k.neighbours(w);
      std::set_intersection(nv.begin(), nv.end(), nw.begin(), nw.end(), std::back_inserter(common));
      std::erase_if(common, [&](int u) { return u < v || !ok(u); });
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (!adj[static_cast<std::size_t>(common[i])][static_cast<std::size_t>(common[j])])
            out.push_back(Square{{v, common[i], w, common[j]}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// CoordSimplex

ColourMask CoordSimplex::coords() const {
  ColourMask mask = 0;
  for (std::size_t i = 0; i < slots_.size(); ++i)
    if (slots_[i] >= 0) mask |= ColourMask{1} << i;
  return mask;
}

int CoordSimplex::size() const {
  return static_cast<int>(std::count_if(slots_.begin(), slots_.end(), [](int v) { return v >= 0; }));
}

CoordSimplex CoordSimplex::with(int colour, int vertex) const {
  CoordSimplex out = *this;
  out.slots_.at(static_cast<std::size_t>(colour - 1)) = vertex;
  return out;
}

CoordSimplex CoordSimplex::without(int colour) const { return with(colour, -1); }

CoordSimplex CoordSimplex::restricted(ColourMask mask) const {
  CoordSimplex out = *this;
  for (std::size_t i = 0; i < out.slots_.size(); ++i)
    if (!(mask & (ColourMask{1} << i))) out.slots_[i] = -1;
  return out;
}

bool CoordSimplex::is_face_of(const CoordSimplex& other) const {
  if (other.slots_.size() != slots_.size()) return false;
  for (std::size_t i = 0; i < slots_.size(); ++i)
    if (slots_[i] >= 0 && slots_[i] != other.slots_[i]) return false;
  return true;
}

std::vector<int> CoordSimplex::vertices() const {
  std::vector<int> out;
  for (int v : slots_)
    if (v >= 0) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CoordSimplex> merge(const CoordSimplex& a, const CoordSimplex& b) {
  if (a.colours() != b.colours()) return std::nullopt;
  CoordSimplex out = a;
  for (int c = 1; c <= a.colours(); ++c) {
    if (!b.has(c)) continue;
    if (a.has(c) && a.at(c) != b.at(c)) return std::nullopt;
    out = out.with(c, b.at(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ColoredComplex

ColoredComplex ColoredComplex::close_downward(int n, std::vector<Vertex> vertices,
                                              const std::vector<std::vector<std::string>>& maximal) {
  if (n < 1 || n > kMaxColours) throw Error("colour count must lie in 1.." + std::to_string(kMaxColours));
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].colour < 1 || vertices[i].colour > n)
      throw Error("vertex '" + vertices[i].id + "' has colour " + std::to_string(vertices[i].colour) +
                  " outside 1.." + std::to_string(n));
    if (i > 0 && vertices[i].id == vertices[i - 1].id) throw Error("duplicate vertex id '" + vertices[i].id + "'");
  }
  auto index_of = [&](const std::string& id) -> int {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), id,
                               [](const Vertex& v, const std::string& key) { return v.id < key; });
    if (it == vertices.end() || it->id != id) throw Error("unknown vertex id '" + id + "'");
    return static_cast<int>(it - vertices.begin());
  };
  std::vector<CoordSimplex> simplices;
  for (const auto& ids : maximal) {
    CoordSimplex s(n);
    for (const auto& id : ids) {
      const int v = index_of(id);
      const int c = vertices[static_cast<std::size_t>(v)].colour;
      if (s.has(c)) {
        if (s.at(c) == v) throw Error("vertex '" + id + "' repeated inside a simplex");
        throw Error("simplex has two vertices of colour " + std::to_string(c) + " ('" + id + "' and '" +
                    vertices[static_cast<std::size_t>(s.at(c))].id + "')");
      }
      s = s.with(c, v);
    }
    simplices.push_back(std::move(s));
  }
  return from_coord_simplices(n, std::move(vertices), simplices);
}

ColoredComplex ColoredComplex::from_coord_simplices(int n, std::vector<Vertex> vertices,
                                                    const std::vector<CoordSimplex>& simplices) {
  ColoredComplex out;
  out.n_ = n;
  out.vertices_ = std::move(vertices);
  std::sort(out.vertices_.begin(), out.vertices_.end());
  std::vector<CoordSimplex> seed = simplices;
  seed.emplace_back(n);
  for (int v = 0; v < out.vertex_count(); ++v) seed.push_back(CoordSimplex(n).with(out.colour_of(v), v));
  for (const auto& s : seed)
    if (s.colours() != n) throw Error("simplex colour count does not match the complex");
  auto all = close_levels<CoordSimplex>(
      seed, n,
      [](const CoordSimplex& s) {
        std::vector<CoordSimplex> faces;
        for (int c = 1; c <= s.colours(); ++c)
          if (s.has(c)) faces.push_back(s.without(c));
        return faces;
      },
      [](const CoordSimplex& s) { return s.size(); });
  out.simplices_.assign(all.begin(), all.end());
  out.index();
  return out;
}

void ColoredComplex::index() {
  by_mask_.clear();
  for (const auto& s : simplices_) by_mask_[s.coords()].push_back(s);
  std::vector<std::string> labels;
  for (const auto& v : vertices_) labels.push_back(v.id);
  std::vector<std::vector<std::string>> faces;
  for (const auto& s : simplices_) faces.push_back(ids(s));
  uncoloured_ = SimplicialComplex::from_simplices(std::move(labels), faces);
}

std::optional<int> ColoredComplex::vertex_index(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                             [](const Vertex& v, std::string_view key) { return v.id < key; });
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

bool ColoredComplex::contains(const CoordSimplex& s) const {
  return s.colours() == n_ && std::binary_search(simplices_.begin(), simplices_.end(), s);
}

const std::vector<CoordSimplex>& ColoredComplex::with_coords(ColourMask mask) const {
  static const std::vector<CoordSimplex> none;
  auto it = by_mask_.find(mask);
  return it == by_mask_.end() ? none : it->second;
}

std::vector<CoordSimplex> ColoredComplex::maximal_simplices() const {
  std::vector<CoordSimplex> out;
  for (const auto& s : uncoloured_.maximal_simplices()) out.push_back(from_plain(s));
  return out;
}

CoordSimplex ColoredComplex::simplex_from_ids(const std::vector<std::string>& names) const {
  CoordSimplex s(n_);
  for (const auto& id : names) {
    auto v = vertex_index(id);
    if (!v) throw Error("unknown vertex id '" + id + "'");
    const int c = colour_of(*v);
    if (s.has(c)) throw Error("simplex has two vertices of colour " + std::to_string(c));
    s = s.with(c, *v);
  }
  return s;
}

std::vector<std::string> ColoredComplex::ids(const CoordSimplex& s) const {
  std::vector<std::string> out;
  for (int v : s.vertices()) out.push_back(id_of(v));
  return out;
}

std::string ColoredComplex::key(const CoordSimplex& s) const {
  std::string out = "{";
  bool first = true;
  for (int c = 1; c <= s.colours(); ++c) {
    if (!s.has(c)) continue;
    if (!first) out += ',';
    first = false;
    out += std::to_string(c) + ":" + id_of(s.at(c));
  }
  out += '}';
  return out;
}

CoordSimplex ColoredComplex::from_plain(const SimplicialComplex::Simplex& s) const {
  CoordSimplex out(n_);
  for (int v : s) out = out.with(colour_of(v), v);
  return out;
}

ColoredComplex ColoredComplex::restricted_to(const std::vector<CoordSimplex>& simplices) const {
  return from_coord_simplices(n_, vertices_, simplices);
}

// ---------------------------------------------------------------------------
// Predicates

int SquareWitness::distinct_colours() const {
  std::set<int> seen(colours.begin(), colours.end());
  return static_cast<int>(seen.size());
}

ColoredFlagReport is_flag(const ColoredComplex& k) {
  auto report = check_flag(k.uncoloured());
  ColoredFlagReport out;
  out.flag = report.flag;
  for (int v : report.witness) out.witness.push_back(k.id_of(v));
  return out;
}

ColoredComplex link_simplex(const ColoredComplex& k, const CoordSimplex& s) {
  if (!k.contains(s)) throw Error("link requested for a simplex not in the complex");
  std::set<int> used;
  std::vector<std::vector<std::string>> faces;
  for (const auto& t : k.simplices()) {
    if (!s.is_face_of(t)) continue;
    CoordSimplex rest = t.restricted(k.full_mask() & ~s.coords());
    for (int v : rest.vertices()) used.insert(v);
    faces.push_back(k.ids(rest));
  }
  std::vector<ColoredComplex::Vertex> vertices;
  for (int v : used) vertices.push_back(k.vertices()[static_cast<std::size_t>(v)]);
  return ColoredComplex::close_downward(k.colours(), std::move(vertices), faces);
}

ColoredComplex full_subcomplex(const ColoredComplex& k, const std::vector<std::string>& ids) {
  std::vector<char> keep(static_cast<std::size_t>(k.vertex_count()), 0);
  for (const auto& id : ids) {
    auto v = k.vertex_index(id);
    if (!v) throw Error("unknown vertex id '" + id + "'");
    keep[static_cast<std::size_t>(*v)] = 1;
  }
  std::vector<ColoredComplex::Vertex> vertices;
  for (int v = 0; v < k.vertex_count(); ++v)
    if (keep[static_cast<std::size_t>(v)]) vertices.push_back(k.vertices()[static_cast<std::size_t>(v)]);
  std::vector<std::vector<std::string>> faces;
  for (const auto& s : k.simplices()) {
    auto vs = s.vertices();
    if (std::all_of(vs.begin(), vs.end(), [&](int v) { return keep[static_cast<std::size_t>(v)]; }))
      faces.push_back(k.ids(s));
  }
  return ColoredComplex::close_downward(k.colours(), std::move(vertices), faces);
}

std::vector<SquareWitness> empty_squares(const ColoredComplex& k, std::optional<std::pair<int, int>> colour_filter) {
  std::vector<char> allowed;
  if (colour_filter) {
    allowed.resize(static_cast<std::size_t>(k.vertex_count()));
    for (int v = 0; v < k.vertex_count(); ++v)
      allowed[static_cast<std::size_t>(v)] =
          k.colour_of(v) == colour_filter->first || k.colour_of(v) == colour_filter->second;
  }
  std::vector<SquareWitness> out;
  for (const auto& sq : find_empty_squares(k.uncoloured(), colour_filter ? &allowed : nullptr)) {
    SquareWitness w;
    for (std::size_t i = 0; i < 4; ++i) {
      w.ids[i] = k.id_of(sq.cycle[i]);
      w.colours[i] = k.colour_of(sq.cycle[i]);
    }
    out.push_back(std::move(w));
  }
  return out;
}

LargenessReport is_5_large(const ColoredComplex& k) {
  auto squares = empty_squares(k);
  if (squares.empty()) return {};
  return {false, squares.front()};
}

LargenessReport is_obes(const ColoredComplex& k) {
  for (auto& sq : empty_squares(k))
    if (sq.distinct_colours() != 2) return {false, std::move(sq)};
  return {};
}

PairwiseReport pairwise_5_large(const ColoredComplex& a, const ColoredComplex& b) {
  if (a.colours() != b.colours()) throw Error("pairwise 5-largeness needs equal colour counts");
  for (int i = 1; i <= a.colours(); ++i) {
    for (int j = i + 1; j <= a.colours(); ++j) {
      auto sa = empty_squares(a, std::pair{i, j});
      if (sa.empty()) continue;
      auto sb = empty_squares(b, std::pair{i, j});
      if (sb.empty()) continue;
      return {false, std::pair{i, j}, sa.front(), sb.front()};
    }
  }
  return {};
}

ColoredComplex barycentric_subdivision_2d(const SimplicialComplex& k, BarycentricColours colours) {
  if (k.dimension() > 2) throw Error("barycentric subdivision supports complexes of dimension at most 2");
  std::array<int, 3> by_dim{colours.vertex, colours.edge, colours.face};
  auto sorted = by_dim;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) throw Error("barycentre colours must be a bijection onto {1,2,3}");

  auto name = [&](const SimplicialComplex::Simplex& s) { return bracket(k.simplex_labels(s)); };
  std::vector<ColoredComplex::Vertex> vertices;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) vertices.push_back({name(s), by_dim[static_cast<std::size_t>(d)]});

  // Chains of proper inclusions: every full flag of faces of a maximal simplex.
  std::vector<std::vector<std::string>> chains;
  for (const auto& top : k.maximal_simplices()) {
    if (top.empty()) continue;
    std::vector<int> order = top;
    do {
      std::vector<std::string> chain;
      for (std::size_t len = 1; len <= order.size(); ++len) {
        SimplicialComplex::Simplex face(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(len));
        std::sort(face.begin(), face.end());
        chain.push_back(name(face));
      }
      chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return ColoredComplex::close_downward(3, std::move(vertices), chains);
}

}  // namespace clcc

#include "clcc/pocset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "clcc/error.hpp"

namespace clcc {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> parent;
};

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int v : a)
    if (std::find(b.begin(), b.end(), v) != b.end()) return false;
  return true;
}

// The two opposite-edge pairs of a square.
std::array<std::pair<int, int>, 2> opposite_pairs(const CubeComplex& x, int square) {
  auto f = x.facets({2, square});
  std::array<std::pair<int, int>, 2> out{};
  int found = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (disjoint(x.vertices({1, f[static_cast<std::size_t>(i)]}), x.vertices({1, f[static_cast<std::size_t>(j)]})) &&
          found < 2)
        out[static_cast<std::size_t>(found++)] = {f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]};
  if (found != 2) throw Error("square '" + x.id({2, square}) + "' is not a 4-cycle");
  return out;
}

}  // namespace

std::vector<Hyperplane> hyperplanes(const CubeComplex& x) {
  const std::size_t edges = x.count(1);
  UnionFind uf(edges);
  for (int s = 0; s < static_cast<int>(x.count(2)); ++s)
    for (auto [e, f] : opposite_pairs(x, s)) uf.unite(e, f);
  std::map<int, std::vector<int>> classes;
  for (int e = 0; e < static_cast<int>(edges); ++e) classes[uf.find(e)].push_back(e);
  std::vector<Hyperplane> out;
  for (auto& [root, members] : classes) out.push_back({static_cast<int>(out.size()), std::move(members)});
  return out;
}

Directions directions(const CubeComplex& x, const std::vector<Hyperplane>& planes) {
  if (!x.has_origin()) throw Error("directions need a complex built from a coloured pair");
  Directions out;
  for (const auto& h : planes) {
    int colour = -1;
    for (int e : h.edges) {
      const auto& o = x.origin({1, e});
      const int c = std::countr_zero(o.a.coords() & o.b.coords()) + 1;
      if (colour == -1) colour = c;
      else if (colour != c) colour = 0;
    }
    if (colour <= 0) {
      colour = 0;
      out.valid = false;
    }
    out.colour.push_back(colour);
  }
  return out;
}

std::vector<std::pair<int, int>> crossing_graph(const CubeComplex& x, const std::vector<Hyperplane>& planes) {
  std::vector<int> class_of(x.count(1), -1);
  for (const auto& h : planes)
    for (int e : h.edges) class_of[static_cast<std::size_t>(e)] = h.id;
  std::set<std::pair<int, int>> edges;
  for (int s = 0; s < static_cast<int>(x.count(2)); ++s) {
    auto pairs = opposite_pairs(x, s);
    int a = class_of[static_cast<std::size_t>(pairs[0].first)];
    int b = class_of[static_cast<std::size_t>(pairs[1].first)];
    if (a == b) continue;
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  return {edges.begin(), edges.end()};
}

// ---------------------------------------------------------------------------
// Pocsets

Pocset Pocset::make(std::vector<std::string> pair_ids, const std::vector<Relation>& relations) {
  Pocset p;
  {
    std::set<std::string> seen;
    for (const auto& id : pair_ids)
      if (!seen.insert(id).second) throw Error("duplicate pocset pair id '" + id + "'");
  }
  p.ids_ = std::move(pair_ids);
  const int e = p.elements();
  p.less_.assign(static_cast<std::size_t>(e * e), 0);
  auto at = [&](int s, int t) -> char& { return p.less_[static_cast<std::size_t>(s * e + t)]; };
  for (auto [s, t] : relations) {
    if (s < 0 || t < 0 || s >= e || t >= e) throw Error("pocset relation names an unknown element");
    at(s, t) = 1;
    at(star(t), star(s)) = 1;
  }
  for (int k = 0; k < e; ++k)
    for (int i = 0; i < e; ++i)
      if (at(i, k))
        for (int j = 0; j < e; ++j)
          if (at(k, j)) at(i, j) = 1;
  for (int s = 0; s < e; ++s) {
    if (at(s, s)) throw Error("pocset order has a cycle through " + p.name(s));
    if (at(s, star(s)) || at(star(s), s)) throw Error("pocset relates " + p.name(s) + " to its complement");
  }
  return p;
}

std::optional<int> Pocset::element(const std::string& name) const {
  if (name.size() < 2) return std::nullopt;
  const char side = name.back();
  if (side != '+' && side != '-') return std::nullopt;
  const std::string id = name.substr(0, name.size() - 1);
  for (int i = 0; i < pairs(); ++i)
    if (ids_[static_cast<std::size_t>(i)] == id) return 2 * i + (side == '-' ? 1 : 0);
  return std::nullopt;
}

std::vector<Pocset::Relation> Pocset::relations() const {
  std::vector<Relation> out;
  for (int s = 0; s < elements(); ++s)
    for (int t = 0; t < elements(); ++t)
      if (less(s, t)) out.emplace_back(s, t);
  return out;
}

std::vector<Pocset::Relation> Pocset::cover_relations() const {
  std::vector<Relation> out;
  for (auto [s, t] : relations()) {
    bool cover = true;
    for (int u = 0; u < elements() && cover; ++u)
      if (less(s, u) && less(u, t)) cover = false;
    if (cover) out.emplace_back(s, t);
  }
  return out;
}

namespace {

int chosen(Ultrafilter u, int pair) { return 2 * pair + static_cast<int>((u >> pair) & 1); }

}  // namespace

bool is_ultrafilter(const Pocset& s, Ultrafilter u) {
  for (int i = 0; i < s.pairs(); ++i)
    for (int j = 0; j < s.pairs(); ++j)
      if (s.less(chosen(u, i), Pocset::star(chosen(u, j)))) return false;
  return true;
}

std::vector<Ultrafilter> ultrafilters(const Pocset& s) {
  const int m = s.pairs();
  if (m > 63) throw Error("too many pocset pairs for ultrafilter enumeration");
  std::vector<Ultrafilter> out;
  std::function<void(int, Ultrafilter)> extend = [&](int i, Ultrafilter u) {
    if (i == m) {
      out.push_back(u);
      return;
    }
    for (int side = 0; side < 2; ++side) {
      const Ultrafilter next = u | (Ultrafilter{static_cast<unsigned>(side)} << i);
      const int e = chosen(next, i);
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const int f = chosen(next, j);
        if (s.less(e, Pocset::star(f)) || s.less(f, Pocset::star(e))) ok = false;
      }
      if (ok) extend(i + 1, next);
    }
  };
  extend(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SageevComplex sageev(const Pocset& s) {
  SageevComplex out;
  out.vertices = ultrafilters(s);
  const int m = s.pairs();
  std::unordered_map<Ultrafilter, int> index;
  std::vector<std::string> names;
  for (auto u : out.vertices) {
    std::string name = "{";
    for (int i = 0; i < m; ++i) name += (i ? "," : "") + s.name(chosen(u, i));
    name += "}";
    index.emplace(u, static_cast<int>(names.size()));
    names.push_back(std::move(name));
  }
  // Cubes as (base, flipped pairs), base having every flipped bit clear.
  std::vector<std::vector<std::pair<Ultrafilter, Ultrafilter>>> cubes(1);
  for (auto u : out.vertices) {
    cubes[0].emplace_back(u, 0);
    std::vector<int> up;
    for (int i = 0; i < m; ++i)
      if (!((u >> i) & 1) && index.count(u | (Ultrafilter{1} << i))) up.push_back(i);
    const unsigned subsets = 1u << up.size();
    for (unsigned sub = 1; sub < subsets; ++sub) {
      Ultrafilter flips = 0;
      for (std::size_t k = 0; k < up.size(); ++k)
        if ((sub >> k) & 1) flips |= Ultrafilter{1} << up[k];
      bool filled = true;
      for (Ultrafilter q = flips;; q = (q - 1) & flips) {
        if (!index.count(u | q)) {
          filled = false;
          break;
        }
        if (q == 0) break;
      }
      if (!filled) continue;
      const auto d = static_cast<std::size_t>(std::popcount(flips));
      if (cubes.size() <= d) cubes.resize(d + 1);
      cubes[d].emplace_back(u, flips);
    }
  }
  std::vector<std::map<std::pair<Ultrafilter, Ultrafilter>, int>> lookup(cubes.size());
  for (std::size_t d = 0; d < cubes.size(); ++d) {
    std::sort(cubes[d].begin(), cubes[d].end());
    for (const auto& [base, flips] : cubes[d]) {
      std::vector<int> facets;
      std::vector<std::string> corner_names;
      for (Ultrafilter q = flips;; q = (q - 1) & flips) {
        corner_names.push_back(names[static_cast<std::size_t>(index.at(base | q))]);
        if (q == 0) break;
      }
      std::sort(corner_names.begin(), corner_names.end());
      std::string id;
      if (d == 0) {
        id = corner_names[0];
      } else {
        id = "[";
        for (std::size_t k = 0; k < corner_names.size(); ++k) id += (k ? "," : "") + corner_names[k];
        id += "]";
        for (int i = 0; i < m; ++i) {
          const Ultrafilter bit = Ultrafilter{1} << i;
          if (!(flips & bit)) continue;
          facets.push_back(lookup[d - 1].at({base, flips & ~bit}));
          facets.push_back(lookup[d - 1].at({base | bit, flips & ~bit}));
        }
      }
      lookup[d].emplace(std::make_pair(base, flips), out.complex.add_cube(static_cast<int>(d), id, facets));
    }
  }
  return out;
}

HalfspacePocset halfspace_pocset(const CubeComplex& x) {
  HalfspacePocset out;
  out.planes = hyperplanes(x);
  const std::size_t n = x.count(0);
  std::vector<std::string> ids;
  for (const auto& h : out.planes) {
    std::vector<char> cut(x.count(1), 0);
    for (int e : h.edges) cut[static_cast<std::size_t>(e)] = 1;
    std::vector<int> comp(n, -1);
    int pieces = 0;
    for (std::size_t start = 0; start < n; ++start) {
      if (comp[start] >= 0) continue;
      std::vector<int> stack{static_cast<int>(start)};
      comp[start] = pieces;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int e : x.edges_at(v)) {
          if (cut[static_cast<std::size_t>(e)]) continue;
          auto [p, q] = x.endpoints(e);
          const int w = p == v ? q : p;
          if (comp[static_cast<std::size_t>(w)] >= 0) continue;
          comp[static_cast<std::size_t>(w)] = pieces;
          stack.push_back(w);
        }
      }
      ++pieces;
    }
    if (pieces != 2)
      throw Error("hyperplane h" + std::to_string(h.id) + " cuts the 1-skeleton into " + std::to_string(pieces) +
                  " pieces, expected 2");
    std::vector<char> plus(n, 0);
    for (std::size_t v = 0; v < n; ++v) plus[v] = comp[v] == 0;
    out.plus_side.push_back(std::move(plus));
    ids.push_back("h" + std::to_string(h.id));
  }
  const int m = static_cast<int>(out.planes.size());
  auto member = [&](int element, std::size_t v) {
    const bool plus = out.plus_side[static_cast<std::size_t>(element / 2)][v] != 0;
    return element % 2 ? !plus : plus;
  };
  std::vector<Pocset::Relation> relations;
  for (int s = 0; s < 2 * m; ++s) {
    for (int t = 0; t < 2 * m; ++t) {
      if (s == t) continue;
      bool subset = true, proper = false;
      for (std::size_t v = 0; v < n && subset; ++v) {
        if (member(s, v) && !member(t, v)) subset = false;
        if (!member(s, v) && member(t, v)) proper = true;
      }
      if (subset && proper) relations.emplace_back(s, t);
    }
  }
  out.pocset = Pocset::make(std::move(ids), relations);
  return out;
}

DualityReport roller_duality_check(const CubeComplex& x) {
  DualityReport report;
  HalfspacePocset hs;
  try {
    hs = halfspace_pocset(x);
  } catch (const Error& e) {
    report.reason = e.what();
    return report;
  }
  const SageevComplex rebuilt = sageev(hs.pocset);
  const auto& y = rebuilt.complex;
  std::unordered_map<Ultrafilter, int> index;
  for (std::size_t i = 0; i < rebuilt.vertices.size(); ++i) index.emplace(rebuilt.vertices[i], static_cast<int>(i));
  for (std::size_t v = 0; v < x.count(0); ++v) {
    Ultrafilter u = 0;
    for (std::size_t h = 0; h < hs.plus_side.size(); ++h)
      if (!hs.plus_side[h][v]) u |= Ultrafilter{1} << h;
    auto it = index.find(u);
    if (it == index.end()) {
      report.reason = "vertex '" + x.id({0, static_cast<int>(v)}) + "' does not give an ultrafilter";
      return report;
    }
    report.vertex_map.push_back(it->second);
  }
  {
    std::vector<int> sorted = report.vertex_map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.size() != y.count(0)) {
      report.reason = "vertex map is not a bijection";
      return report;
    }
  }
  if (x.dimension() != y.dimension()) {
    report.reason = "dimensions differ";
    return report;
  }
  for (int d = 1; d <= x.dimension(); ++d) {
    if (x.count(d) != y.count(d)) {
      report.reason = std::to_string(d) + "-cube counts differ";
      return report;
    }
    std::set<std::vector<int>> target;
    for (int i = 0; i < static_cast<int>(y.count(d)); ++i) target.insert(y.vertices({d, i}));
    for (int i = 0; i < static_cast<int>(x.count(d)); ++i) {
      std::vector<int> image;
      for (int v : x.vertices({d, i})) image.push_back(report.vertex_map[static_cast<std::size_t>(v)]);
      std::sort(image.begin(), image.end());
      if (!target.count(image)) {
        report.reason = "cube '" + x.id({d, i}) + "' has no counterpart";
        return report;
      }
    }
  }
  report.holds = true;
  return report;
}

bool sageev_round_trip(const Pocset& s) {
  const SageevComplex built = sageev(s);
  HalfspacePocset hs;
  try {
    hs = halfspace_pocset(built.complex);
  } catch (const Error&) {
    return false;
  }
  const int m = s.pairs();
  if (hs.pocset.pairs() != m) return false;
  // Pair flipped by each hyperplane, and the element on its "+" side.
  std::vector<int> plus_element(static_cast<std::size_t>(m), -1);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  const Ultrafilter u0 = built.vertices.empty() ? 0 : built.vertices[0];
  for (const auto& h : hs.planes) {
    int pair = -1;
    for (int e : h.edges) {
      auto [p, q] = built.complex.endpoints(e);
      const Ultrafilter diff = built.vertices[static_cast<std::size_t>(p)] ^ built.vertices[static_cast<std::size_t>(q)];
      if (std::popcount(diff) != 1) return false;
      const int flipped = std::countr_zero(diff);
      if (pair == -1) pair = flipped;
      else if (pair != flipped) return false;
    }
    if (pair < 0 || used[static_cast<std::size_t>(pair)]) return false;
    used[static_cast<std::size_t>(pair)] = 1;
    plus_element[static_cast<std::size_t>(h.id)] = chosen(u0, pair);
    for (std::size_t v = 0; v < built.vertices.size(); ++v) {
      const bool plus = hs.plus_side[static_cast<std::size_t>(h.id)][v] != 0;
      const bool same = chosen(built.vertices[v], pair) == chosen(u0, pair);
      if (plus != same) return false;
    }
  }
  auto image = [&](int e) {
    const int p = plus_element[static_cast<std::size_t>(e / 2)];
    return e % 2 ? Pocset::star(p) : p;
  };
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b)
      if (hs.pocset.less(a, b) != s.less(image(a), image(b))) return false;
  return true;
}

std::optional<std::vector<int>> pocset_isomorphism(const Pocset& p, const Pocset& q) {
  if (p.pairs() != q.pairs()) return std::nullopt;
  const int e = p.elements();
  auto profile = [](const Pocset& s, int x) {
    int below = 0, above = 0;
    for (int y = 0; y < s.elements(); ++y) {
      below += s.less(y, x);
      above += s.less(x, y);
    }
    return std::make_pair(below, above);
  };
  std::vector<int> map(static_cast<std::size_t>(e), -1);
  std::vector<char> taken(static_cast<std::size_t>(q.pairs()), 0);
  std::function<bool(int)> assign = [&](int i) {
    if (i == p.pairs()) return true;
    for (int j = 0; j < q.pairs(); ++j) {
      if (taken[static_cast<std::size_t>(j)]) continue;
      for (int side = 0; side < 2; ++side) {
        const int a = 2 * i, b = 2 * j + side;
        if (profile(p, a) != profile(q, b) || profile(p, a + 1) != profile(q, Pocset::star(b))) continue;
        map[static_cast<std::size_t>(a)] = b;
        map[static_cast<std::size_t>(a + 1)] = Pocset::star(b);
        bool ok = true;
        for (int x = 0; x < 2 * i + 2 && ok; ++x)
          for (int y = 2 * i; y < 2 * i + 2 && ok; ++y)
            if (p.less(x, y) != q.less(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]) ||
                p.less(y, x) != q.less(map[static_cast<std::size_t>(y)], map[static_cast<std::size_t>(x)]))
              ok = false;
        if (ok) {
          taken[static_cast<std::size_t>(j)] = 1;
          if (assign(i + 1)) return true;
          taken[static_cast<std::size_t>(j)] = 0;
        }
      }
    }
    map[static_cast<std::size_t>(2 * i)] = map[static_cast<std::size_t>(2 * i + 1)] = -1;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

}  // namespace clcc

#include "clcc/clcc.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <unordered_map>

#include "clcc/error.hpp"

namespace clcc {

bool complementary(const CoordSimplex& a, const CoordSimplex& b, int n) {
  const ColourMask full = (ColourMask{1} << n) - 1;
  return (a.coords() | b.coords()) == full && (a.coords() & b.coords()) == 0;
}

std::optional<CubeRef> Clcc::find(const CoordSimplex& a, const CoordSimplex& b) const {
  if (a.colours() != colours() || b.colours() != colours()) return std::nullopt;
  if (!a_.contains(a) || !b_.contains(b)) return std::nullopt;
  if ((a.coords() | b.coords()) != a_.full_mask()) return std::nullopt;
  const int d = std::popcount(a.coords() & b.coords());
  auto index = x_.find(d, cube_id(a, b));
  if (!index) return std::nullopt;
  return CubeRef{d, *index};
}

std::string Clcc::cube_id(const CoordSimplex& a, const CoordSimplex& b) const {
  return a_.key(a) + "|" + b_.key(b);
}

Clcc build_clcc(ColoredComplex a, ColoredComplex b) {
  if (a.colours() != b.colours())
    throw Error("colour counts differ: " + std::to_string(a.colours()) + " and " + std::to_string(b.colours()));
  const int n = a.colours();
  const ColourMask full = a.full_mask();

  using Pair = std::pair<CoordSimplex, CoordSimplex>;
  std::vector<std::vector<Pair>> by_dim(static_cast<std::size_t>(n + 1));
  for (const auto& [ma, list_a] : a.by_coords()) {
    for (const auto& [mb, list_b] : b.by_coords()) {
      if ((ma | mb) != full) continue;
      auto& bucket = by_dim[static_cast<std::size_t>(std::popcount(ma & mb))];
      for (const auto& sa : list_a)
        for (const auto& sb : list_b) bucket.emplace_back(sa, sb);
    }
  }

  Clcc out;
  out.a_ = std::move(a);
  out.b_ = std::move(b);
  std::vector<std::vector<CubeComplex::Origin>> origins;
  for (int d = 0; d <= n; ++d) {
    auto& cubes = by_dim[static_cast<std::size_t>(d)];
    if (cubes.empty()) break;
    std::sort(cubes.begin(), cubes.end());
    origins.emplace_back();
    for (const auto& [sa, sb] : cubes) {
      std::vector<int> facets;
      const ColourMask overlap = sa.coords() & sb.coords();
      for (int c = 1; c <= n; ++c) {
        if (!(overlap & (ColourMask{1} << (c - 1)))) continue;
        facets.push_back(*out.x_.find(d - 1, out.cube_id(sa, sb.without(c))));
        facets.push_back(*out.x_.find(d - 1, out.cube_id(sa.without(c), sb)));
      }
      out.x_.add_cube(d, out.cube_id(sa, sb), std::move(facets));
      origins.back().push_back({sa, sb});
    }
  }
  out.x_.set_origins(n, std::move(origins));
  return out;
}

SimplicialComplex link_of_cube(const Clcc& x, CubeRef cube) {
  const auto& [a, b] = x.complex().origin(cube);
  const ColoredComplex la = link_simplex(x.gamma_a(), a);
  const ColoredComplex lb = link_simplex(x.gamma_b(), b);
  std::vector<std::string> names_a, names_b;
  for (const auto& v : la.vertices())
    names_a.push_back(x.cube_id(a.with(v.colour, *x.gamma_a().vertex_index(v.id)), b));
  for (const auto& v : lb.vertices())
    names_b.push_back(x.cube_id(a, b.with(v.colour, *x.gamma_b().vertex_index(v.id))));
  return simplicial_join(la.uncoloured().relabelled(names_a), lb.uncoloured().relabelled(names_b));
}

NpcReport is_npc(const ColoredComplex& a, const ColoredComplex& b) {
  NpcReport report;
  if (is_flag(a).flag && is_flag(b).flag) {
    report.nonpositively_curved = true;
    return report;
  }
  report.method = NpcReport::Method::VertexLinks;
  const Clcc x = build_clcc(a, b);
  const auto& cx = x.complex();
  for (int v = 0; v < static_cast<int>(cx.count(0)); ++v) {
    const SimplicialComplex link = cx.link({0, v});
    const FlagReport flag = check_flag(link);
    if (!flag.flag) {
      report.bad_vertex = cx.id({0, v});
      for (int w : flag.witness) report.bad_clique.push_back(link.label(w));
      return report;
    }
  }
  report.nonpositively_curved = true;
  return report;
}

namespace {

std::optional<CoordSimplex> missing_complement(const ColoredComplex& k, const ColoredComplex& other,
                                               bool codim_one) {
  for (const auto& s : k.maximal_simplices()) {
    if (!other.has_coords(k.full_mask() & ~s.coords())) return s;
    if (!codim_one) continue;
    for (int c = 1; c <= k.colours(); ++c) {
      if (!s.has(c)) continue;
      const CoordSimplex f = s.without(c);
      if (!other.has_coords(k.full_mask() & ~f.coords())) return f;
    }
  }
  return std::nullopt;
}

PairingReport pairing(const ColoredComplex& a, const ColoredComplex& b, bool codim_one) {
  if (a.colours() != b.colours()) throw Error("colour counts differ");
  PairingReport report;
  if (auto s = missing_complement(a, b, codim_one)) {
    report = {false, 'A', a.ids(*s)};
  } else if (auto t = missing_complement(b, a, codim_one)) {
    report = {false, 'B', b.ids(*t)};
  }
  return report;
}

// Rebuilds `k` from the listed simplices, dropping vertices that no longer occur.
ColoredComplex rebuild(const ColoredComplex& k, const std::vector<CoordSimplex>& keep) {
  std::set<int> used;
  std::vector<std::vector<std::string>> faces;
  for (const auto& s : keep) {
    for (int v : s.vertices()) used.insert(v);
    faces.push_back(k.ids(s));
  }
  std::vector<ColoredComplex::Vertex> vertices;
  for (int v : used) vertices.push_back(k.vertices()[static_cast<std::size_t>(v)]);
  return ColoredComplex::close_downward(k.colours(), std::move(vertices), faces);
}

}  // namespace

PairingReport smartly_paired(const ColoredComplex& a, const ColoredComplex& b) { return pairing(a, b, false); }

PairingReport doubly_smartly_paired(const ColoredComplex& a, const ColoredComplex& b) {
  return pairing(a, b, true);
}

std::pair<ColoredComplex, ColoredComplex> prune_to_smart_pair(const ColoredComplex& a, const ColoredComplex& b) {
  if (a.colours() != b.colours()) throw Error("colour counts differ");
  ColoredComplex pa = a, pb = b;
  auto prune_side = [](const ColoredComplex& k, const ColoredComplex& other, bool& changed) {
    std::set<CoordSimplex> drop;
    for (const auto& s : k.maximal_simplices())
      if (!s.empty() && !other.has_coords(k.full_mask() & ~s.coords())) drop.insert(s);
    if (drop.empty()) return k;
    changed = true;
    std::vector<CoordSimplex> keep;
    for (const auto& s : k.simplices())
      if (!drop.count(s)) keep.push_back(s);
    return rebuild(k, keep);
  };
  for (bool changed = true; changed;) {
    changed = false;
    ColoredComplex na = prune_side(pa, pb, changed);
    ColoredComplex nb = prune_side(pb, pa, changed);
    pa = std::move(na);
    pb = std::move(nb);
  }
  return {pa, pb};
}

DimensionReport dimension(const CubeComplex& x) { return {x.dimension(), x.cells().is_pure()}; }

bool ConnGraph::connected() const {
  if (nodes.empty()) return false;
  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<char> seen(nodes.size(), 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      ++reached;
      queue.push(v);
    }
  }
  return reached == nodes.size();
}

ConnGraph conn_graph(const Clcc& x) {
  ConnGraph g;
  const auto& ga = x.gamma_a();
  const auto& gb = x.gamma_b();
  const auto maximal = ga.maximal_simplices();
  const std::set<CoordSimplex> maximal_set(maximal.begin(), maximal.end());
  const auto& cx = x.complex();
  for (int v = 0; v < static_cast<int>(cx.count(0)); ++v) {
    const auto& o = cx.origin({0, v});
    if (maximal_set.count(o.a)) g.nodes.push_back({o.a, o.b, v});
  }
  const int n = x.colours();
  for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(g.nodes.size()); ++j) {
      const auto& p = g.nodes[static_cast<std::size_t>(i)];
      const auto& q = g.nodes[static_cast<std::size_t>(j)];
      ColourMask common = 0;
      for (int c = 1; c <= n; ++c)
        if (p.a.has(c) && q.a.has(c) && p.a.at(c) == q.a.at(c)) common |= ColourMask{1} << (c - 1);
      auto joined = merge(p.b, q.b);
      if (!joined) continue;
      for (const auto& t : gb.with_coords(ga.full_mask() & ~common)) {
        if (joined->is_face_of(t)) {
          g.edges.emplace_back(i, j);
          break;
        }
      }
    }
  }
  return g;
}

bool is_connected_criterion(const Clcc& x) {
  const PairingReport pairing = smartly_paired(x.gamma_a(), x.gamma_b());
  if (!pairing.holds) throw Error("the connectedness criterion needs a smartly paired input; prune it first");
  return conn_graph(x).connected();
}

bool is_connected_bfs(const CubeComplex& x) {
  if (x.count(0) == 0) return false;
  int parts = 0;
  x.components(&parts);
  return parts == 1;
}

long long euler_characteristic(const CubeComplex& x) { return x.cells().euler_characteristic(); }

std::string to_string(LinkTag tag) {
  switch (tag) {
    case LinkTag::Circle: return "circle";
    case LinkTag::TwoSphere: return "2-sphere";
    case LinkTag::Other: return "other";
    case LinkTag::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool connected(const SimplicialComplex& k) {
  if (k.vertex_count() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(k.vertex_count()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : k.neighbours(u)) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == k.vertex_count();
}

}  // namespace

LinkTag classify_link(const SimplicialComplex& link) {
  const int dim = link.dimension();
  if (dim >= 3) return LinkTag::Unknown;
  if (dim == 1) {
    for (int v = 0; v < link.vertex_count(); ++v)
      if (link.neighbours(v).size() != 2) return LinkTag::Other;
    return connected(link) ? LinkTag::Circle : LinkTag::Other;
  }
  if (dim == 2) {
    const auto& cells = link.cells();
    for (int e = 0; e < static_cast<int>(cells.count(1)); ++e)
      if (cells.cofacets(1, e).size() != 2) return LinkTag::Other;
    for (int v = 0; v < link.vertex_count(); ++v)
      if (classify_link(link.link({v})) != LinkTag::Circle) return LinkTag::Other;
    if (!connected(link) || cells.euler_characteristic() != 2) return LinkTag::Other;
    return LinkTag::TwoSphere;
  }
  return LinkTag::Other;
}

std::vector<LinkTag> classify_vertex_links(const CubeComplex& x) {
  std::vector<LinkTag> out;
  for (int v = 0; v < static_cast<int>(x.count(0)); ++v) out.push_back(classify_link(x.link({0, v})));
  return out;
}

bool CubicalMap::injective() const {
  for (const auto& level : cube_image) {
    std::set<CubeRef> seen(level.begin(), level.end());
    if (seen.size() != level.size()) return false;
  }
  return true;
}

bool CubicalMap::surjective() const {
  for (std::size_t d = 0; d < target_counts.size(); ++d) {
    if (target_counts[d] == 0) continue;
    if (d >= cube_image.size()) return false;
    std::set<CubeRef> seen(cube_image[d].begin(), cube_image[d].end());
    if (seen.size() != target_counts[d]) return false;
  }
  return true;
}

namespace {

std::vector<int> vertex_map(const ColoredComplex& from, const ColoredComplex& to, const VertexMap& map,
                            char side) {
  std::vector<int> out;
  for (const auto& v : from.vertices()) {
    auto it = map.find(v.id);
    if (it == map.end()) throw Error(std::string("map for side ") + side + " misses vertex '" + v.id + "'");
    auto w = to.vertex_index(it->second);
    if (!w) throw Error(std::string("map for side ") + side + " sends '" + v.id + "' to unknown vertex '" +
                        it->second + "'");
    if (to.colour_of(*w) != v.colour)
      throw Error(std::string("map for side ") + side + " changes the colour of '" + v.id + "'");
    out.push_back(*w);
  }
  return out;
}

CoordSimplex apply(const CoordSimplex& s, const std::vector<int>& image) {
  CoordSimplex out(s.colours());
  for (int c = 1; c <= s.colours(); ++c)
    if (s.has(c)) out = out.with(c, image[static_cast<std::size_t>(s.at(c))]);
  return out;
}

}  // namespace

CubicalMap induced_map(const Clcc& source, const Clcc& target, const VertexMap& map_a, const VertexMap& map_b) {
  if (source.colours() != target.colours()) throw Error("colour counts differ");
  const auto fa = vertex_map(source.gamma_a(), target.gamma_a(), map_a, 'A');
  const auto fb = vertex_map(source.gamma_b(), target.gamma_b(), map_b, 'B');
  for (const auto& s : source.gamma_a().simplices())
    if (!target.gamma_a().contains(apply(s, fa)))
      throw Error("map for side A is not simplicial on {" + [&] {
        std::string t;
        for (const auto& id : source.gamma_a().ids(s)) t += (t.empty() ? "" : ",") + id;
        return t;
      }() + "}");
  for (const auto& s : source.gamma_b().simplices())
    if (!target.gamma_b().contains(apply(s, fb)))
      throw Error("map for side B is not simplicial on {" + [&] {
        std::string t;
        for (const auto& id : source.gamma_b().ids(s)) t += (t.empty() ? "" : ",") + id;
        return t;
      }() + "}");

  CubicalMap out;
  const auto& sx = source.complex();
  const auto& tx = target.complex();
  for (int d = 0; d <= sx.dimension(); ++d) {
    out.cube_image.emplace_back();
    for (int i = 0; i < static_cast<int>(sx.count(d)); ++i) {
      const auto& o = sx.origin({d, i});
      auto image = target.find(apply(o.a, fa), apply(o.b, fb));
      if (!image) throw Error("cube '" + sx.id({d, i}) + "' has no image");
      out.cube_image.back().push_back(*image);
    }
  }
  if (!out.cube_image.empty())
    for (const auto& c : out.cube_image[0]) out.vertex_image.push_back(c.index);
  for (int d = 0; d <= tx.dimension(); ++d) out.target_counts.push_back(tx.count(d));
  return out;
}

CubicalMap compose(const CubicalMap& g, const CubicalMap& f) {
  CubicalMap out;
  for (const auto& level : f.cube_image) {
    out.cube_image.emplace_back();
    for (const auto& c : level)
      out.cube_image.back().push_back(
          g.cube_image.at(static_cast<std::size_t>(c.dim)).at(static_cast<std::size_t>(c.index)));
  }
  for (int v : f.vertex_image) out.vertex_image.push_back(g.vertex_image.at(static_cast<std::size_t>(v)));
  out.target_counts = g.target_counts;
  return out;
}

bool induces_full_link_embeddings(const Clcc& source, const Clcc& target, const CubicalMap& map) {
  const auto& sx = source.complex();
  const auto& tx = target.complex();
  for (int v = 0; v < static_cast<int>(sx.count(0)); ++v) {
    const SimplicialComplex ls = sx.link({0, v});
    const SimplicialComplex lt = tx.link({0, map.vertex_image.at(static_cast<std::size_t>(v))});
    // Link vertices are edges, labelled by edge ids.
    std::vector<int> image;
    for (int u = 0; u < ls.vertex_count(); ++u) {
      const int edge = *sx.find(1, ls.label(u));
      const CubeRef e = map.cube_image.at(1).at(static_cast<std::size_t>(edge));
      auto w = lt.vertex_index(tx.id(e));
      if (!w) return false;
      image.push_back(*w);
    }
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    std::unordered_map<int, int> preimage;
    for (int u = 0; u < static_cast<int>(image.size()); ++u) preimage[image[static_cast<std::size_t>(u)]] = u;
    for (int d = 0; d <= ls.dimension(); ++d) {
      for (const auto& s : ls.simplices(d)) {
        SimplicialComplex::Simplex t;
        for (int u : s) t.push_back(image[static_cast<std::size_t>(u)]);
        std::sort(t.begin(), t.end());
        if (!lt.contains(t)) return false;
      }
    }
    for (int d = 0; d <= lt.dimension(); ++d) {
      for (const auto& t : lt.simplices(d)) {
        SimplicialComplex::Simplex s;
        bool inside = true;
        for (int w : t) {
          auto it = preimage.find(w);
          if (it == preimage.end()) {
            inside = false;
            break;
          }
          s.push_back(it->second);
        }
        if (!inside) continue;
        std::sort(s.begin(), s.end());
        if (!ls.contains(s)) return false;
      }
    }
  }
  return true;
}

}  // namespace clcc

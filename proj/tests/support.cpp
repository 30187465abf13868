#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace testing {

std::uint64_t seed() {
  if (const char* env = std::getenv("CLCC_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240613;
}

std::mt19937_64& rng() {
  static std::mt19937_64 engine(seed());
  return engine;
}

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

bool coin(double p) { return std::bernoulli_distribution(p)(rng()); }

clcc::ColoredComplex random_coloured(int n, int vertices, int simplices, const std::string& prefix) {
  std::vector<clcc::ColoredComplex::Vertex> vs;
  for (int i = 0; i < vertices; ++i) vs.push_back({prefix + std::to_string(i), uniform(1, n)});
  std::vector<std::vector<std::string>> faces;
  for (int s = 0; s < simplices && vertices > 0; ++s) {
    std::vector<std::string> face;
    std::set<int> colours;
    const int size = uniform(1, n);
    for (int t = 0; t < 3 * size && static_cast<int>(face.size()) < size; ++t) {
      const auto& v = vs[static_cast<std::size_t>(uniform(0, vertices - 1))];
      if (colours.insert(v.colour).second) face.push_back(v.id);
    }
    faces.push_back(face);
  }
  return clcc::ColoredComplex::close_downward(n, vs, faces);
}

clcc::ColoredComplex random_flag_coloured(int n, int vertices, double edge_p, const std::string& prefix) {
  std::vector<clcc::ColoredComplex::Vertex> vs;
  for (int i = 0; i < vertices; ++i) vs.push_back({prefix + std::to_string(i), uniform(1, n)});
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(vertices), std::vector<char>(static_cast<std::size_t>(vertices), 0));
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j)
      if (vs[static_cast<std::size_t>(i)].colour != vs[static_cast<std::size_t>(j)].colour && coin(edge_p))
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
  // All cliques (they are automatically colourful since edges join distinct colours).
  std::vector<std::vector<std::string>> faces;
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& clique, int from) {
    std::vector<std::string> face;
    for (int v : clique) face.push_back(vs[static_cast<std::size_t>(v)].id);
    faces.push_back(face);
    for (int w = from; w < vertices; ++w) {
      bool ok = true;
      for (int v : clique) ok = ok && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
      if (!ok) continue;
      clique.push_back(w);
      grow(clique, w + 1);
      clique.pop_back();
    }
  };
  std::vector<int> clique;
  grow(clique, 0);
  return clcc::ColoredComplex::close_downward(n, vs, faces);
}

clcc::SimplicialComplex random_2_complex(int vertices, int triangles, int extra_edges) {
  std::vector<std::string> labels;
  for (int i = 0; i < vertices; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<std::vector<std::string>> faces;
  for (int t = 0; vertices >= 3 && t < triangles; ++t) {
    std::set<int> pick;
    while (pick.size() < 3) pick.insert(uniform(0, vertices - 1));
    std::vector<std::string> face;
    for (int v : pick) face.push_back(labels[static_cast<std::size_t>(v)]);
    faces.push_back(face);
  }
  for (int e = 0; e < extra_edges; ++e) {
    const int u = uniform(0, vertices - 1), v = uniform(0, vertices - 1);
    if (u != v) faces.push_back({labels[static_cast<std::size_t>(u)], labels[static_cast<std::size_t>(v)]});
  }
  return clcc::SimplicialComplex::from_simplices(labels, faces);
}

clcc::SimplicialComplex clique_complex(int k, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back("v" + std::to_string(i));
  auto adjacent = [&](int u, int v) {
    for (auto [p, q] : edges)
      if ((p == u && q == v) || (p == v && q == u)) return true;
    return false;
  };
  std::vector<std::vector<std::string>> faces;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) members.push_back(i + 1);
    bool clique = true;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) clique = clique && adjacent(members[i], members[j]);
    if (!clique) continue;
    std::vector<std::string> face;
    for (int m : members) face.push_back("v" + std::to_string(m));
    faces.push_back(face);
  }
  return clcc::SimplicialComplex::from_simplices(labels, faces);
}

clcc::Pocset random_pocset(int pairs, double relation_p) {
  std::vector<std::string> ids;
  for (int i = 0; i < pairs; ++i) ids.push_back("s" + std::to_string(i));
  for (;;) {
    std::vector<clcc::Pocset::Relation> rel;
    for (int s = 0; s < 2 * pairs; ++s)
      for (int t = 0; t < 2 * pairs; ++t)
        if (s / 2 != t / 2 && coin(relation_p)) rel.emplace_back(s, t);
    try {
      return clcc::Pocset::make(ids, rel);
    } catch (const std::exception&) {
      relation_p *= 0.9;
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<std::set<std::vector<std::string>>> product_oracle(const clcc::ColoredComplex& a,
                                                               const clcc::ColoredComplex& b) {
  const int n = a.colours();
  std::vector<std::vector<std::string>> as(static_cast<std::size_t>(n)), bs(static_cast<std::size_t>(n));
  for (const auto& v : a.vertices()) as[static_cast<std::size_t>(v.colour - 1)].push_back(v.id);
  for (const auto& v : b.vertices()) bs[static_cast<std::size_t>(v.colour - 1)].push_back(v.id);

  // Factor i cells: vertex "A:x", vertex "B:y" or edge {"A:x","B:y"}.
  std::vector<std::vector<std::vector<std::string>>> factor(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& f = factor[static_cast<std::size_t>(i)];
    for (const auto& x : as[static_cast<std::size_t>(i)]) f.push_back({"A:" + x});
    for (const auto& y : bs[static_cast<std::size_t>(i)]) f.push_back({"B:" + y});
    for (const auto& x : as[static_cast<std::size_t>(i)])
      for (const auto& y : bs[static_cast<std::size_t>(i)]) f.push_back({"A:" + x, "B:" + y});
  }
  auto in_x = [&](const std::vector<std::string>& tuple) {
    std::vector<std::string> ia, ib;
    for (const auto& t : tuple) (t[0] == 'A' ? ia : ib).push_back(t.substr(2));
    return a.contains(a.simplex_from_ids(ia)) && b.contains(b.simplex_from_ids(ib));
  };
  std::vector<std::set<std::vector<std::string>>> out(static_cast<std::size_t>(n + 1));
  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  std::function<void(int)> walk = [&](int i) {
    if (i == n) {
      std::vector<std::vector<std::string>> corners{{}};
      int dim = 0;
      for (int c = 0; c < n; ++c) {
        const auto& cell = factor[static_cast<std::size_t>(c)][choice[static_cast<std::size_t>(c)]];
        dim += cell.size() == 2;
        std::vector<std::vector<std::string>> next;
        for (const auto& partial : corners)
          for (const auto& p : cell) {
            auto q = partial;
            q.push_back(p);
            next.push_back(q);
          }
        corners = std::move(next);
      }
      std::vector<std::string> names;
      for (const auto& corner : corners) {
        if (!in_x(corner)) return;
        std::string name;
        for (std::size_t c = 0; c < corner.size(); ++c) name += (c ? "|" : "") + corner[c];
        names.push_back(name);
      }
      std::sort(names.begin(), names.end());
      out[static_cast<std::size_t>(dim)].insert(names);
      return;
    }
    for (std::size_t k = 0; k < factor[static_cast<std::size_t>(i)].size(); ++k) {
      choice[static_cast<std::size_t>(i)] = k;
      walk(i + 1);
    }
  };
  if (std::all_of(factor.begin(), factor.end(), [](const auto& f) { return !f.empty(); })) walk(0);
  while (out.size() > 1 && out.back().empty()) out.pop_back();
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

std::string corner_name(const clcc::Clcc& x, int vertex) {
  const auto& o = x.complex().origin({0, vertex});
  std::string name;
  for (int c = 1; c <= x.colours(); ++c) {
    if (c > 1) name += "|";
    if (o.a.has(c)) name += "A:" + x.gamma_a().id_of(o.a.at(c));
    else name += "B:" + x.gamma_b().id_of(o.b.at(c));
  }
  return name;
}

std::size_t sparse_rank(const std::vector<std::vector<int>>& columns) {
  std::map<int, std::set<int>> by_low;  // pivot = largest row index
  std::size_t rank = 0;
  for (const auto& col : columns) {
    std::set<int> c;
    for (int r : col) {
      if (!c.erase(r)) c.insert(r);
    }
    while (!c.empty()) {
      auto it = by_low.find(*c.rbegin());
      if (it == by_low.end()) break;
      for (int r : it->second)
        if (!c.erase(r)) c.insert(r);
    }
    if (!c.empty()) {
      by_low.emplace(*c.rbegin(), c);
      ++rank;
    }
  }
  return rank;
}

std::vector<long long> oracle_betti(const clcc::CellComplex& host, bool reduced) {
  const int top = host.dimension();
  std::vector<long long> r(static_cast<std::size_t>(top + 2), 0);
  for (int k = 0; k <= top; ++k) {
    if (k == 0 && !reduced) continue;
    std::vector<std::vector<int>> cols;
    for (int i = 0; i < static_cast<int>(host.count(k)); ++i) {
      auto f = host.facets(k, i);
      cols.emplace_back(f.begin(), f.end());
    }
    r[static_cast<std::size_t>(k)] = static_cast<long long>(sparse_rank(cols));
  }
  std::vector<long long> out;
  for (int k = 0; k <= top; ++k)
    out.push_back(static_cast<long long>(host.count(k)) - r[static_cast<std::size_t>(k)] - r[static_cast<std::size_t>(k + 1)]);
  return out;
}

std::set<std::array<int, 4>> brute_squares(const clcc::SimplicialComplex& k) {
  std::set<std::array<int, 4>> out;
  const int n = k.vertex_count();
  for (int v = 0; v < n; ++v)
    for (int p = 0; p < n; ++p)
      for (int w = 0; w < n; ++w)
        for (int m = 0; m < n; ++m) {
          std::set<int> distinct{v, p, w, m};
          if (distinct.size() != 4) continue;
          if (!(v < p && v < w && v < m && p < m)) continue;
          if (k.adjacent(v, p) && k.adjacent(p, w) && k.adjacent(w, m) && k.adjacent(m, v) && !k.adjacent(v, w) &&
              !k.adjacent(p, m))
            out.insert({v, p, w, m});
        }
  return out;
}

bool brute_flag(const clcc::SimplicialComplex& k) {
  const int n = k.vertex_count();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.push_back(i);
    bool clique = true;
    for (std::size_t i = 0; i < s.size() && clique; ++i)
      for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = k.adjacent(s[i], s[j]);
    if (clique && !k.contains(s)) return false;
  }
  return true;
}

clcc::CubeComplex unit_cube_oracle(const clcc::SimplicialComplex& gamma) {
  const int n = gamma.vertex_count();
  // Per coordinate: 0, 1, h (=1/2), [0,h], [h,1].
  static const std::vector<std::vector<char>> cells{{'0'}, {'1'}, {'h'}, {'0', 'h'}, {'h', '1'}};
  std::vector<std::vector<std::string>> cubes;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::function<void(int)> walk = [&](int i) {
    if (i == n) {
      std::vector<int> free;
      for (int c = 0; c < n; ++c)
        if (pick[static_cast<std::size_t>(c)] >= 2) free.push_back(c);
      if (!gamma.contains(free)) return;
      std::vector<std::string> corners{""};
      for (int c = 0; c < n; ++c) {
        std::vector<std::string> next;
        for (const auto& s : corners)
          for (char ch : cells[static_cast<std::size_t>(pick[static_cast<std::size_t>(c)])]) next.push_back(s + ch);
        corners = std::move(next);
      }
      cubes.push_back(corners);
      return;
    }
    for (int k = 0; k < 5; ++k) {
      pick[static_cast<std::size_t>(i)] = k;
      walk(i + 1);
    }
  };
  walk(0);
  return clcc::CubeComplex::from_vertex_sets(cubes);
}

clcc::CubeComplex tree_complex(const std::vector<int>& parent) {
  std::vector<std::vector<std::string>> cubes{{"t0"}};
  for (std::size_t i = 0; i < parent.size(); ++i)
    cubes.push_back({"t" + std::to_string(parent[i]), "t" + std::to_string(i + 1)});
  return clcc::CubeComplex::from_vertex_sets(cubes);
}

clcc::CubeComplex grid_complex(int a, int b) {
  auto name = [](int i, int j) { return "g" + std::to_string(i) + "_" + std::to_string(j); };
  std::vector<std::vector<std::string>> cubes;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      cubes.push_back({name(i, j)});
      if (i < a) cubes.push_back({name(i, j), name(i + 1, j)});
      if (j < b) cubes.push_back({name(i, j), name(i, j + 1)});
      if (i < a && j < b) cubes.push_back({name(i, j), name(i + 1, j), name(i, j + 1), name(i + 1, j + 1)});
    }
  return clcc::CubeComplex::from_vertex_sets(cubes);
}

}  // namespace testing

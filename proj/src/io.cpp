#include "clcc/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>

#include "clcc/error.hpp"

namespace clcc {

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw Error(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

int integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(what + " must be an integer");
  return j.get<int>();
}

std::string text(const json& j, const std::string& what) {
  if (!j.is_string()) throw Error(what + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> texts(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(text(e, what + " entry"));
  return out;
}

std::vector<std::vector<std::string>> sorted_faces(std::vector<std::vector<std::string>> faces) {
  for (auto& f : faces) std::sort(f.begin(), f.end());
  std::sort(faces.begin(), faces.end());
  return faces;
}

json simplex_map(const ColoredComplex& k, const CoordSimplex& s) {
  json out = json::object();
  for (int c = 1; c <= s.colours(); ++c)
    if (s.has(c)) out[std::to_string(c)] = k.id_of(s.at(c));
  return out;
}

}  // namespace

json to_json(const ColoredComplex& k) {
  json vertices = json::array();
  for (const auto& v : k.vertices()) vertices.push_back({{"id", v.id}, {"color", v.colour}});
  std::vector<std::vector<std::string>> faces;
  for (const auto& s : k.maximal_simplices())
    if (!s.empty()) faces.push_back(k.ids(s));
  return {{"n", k.colours()}, {"vertices", vertices}, {"maximal_simplices", sorted_faces(std::move(faces))}};
}

ColoredComplex coloured_from_json(const json& j) {
  const int n = integer(field(j, "n", "coloured complex"), "\"n\"");
  const json& vs = field(j, "vertices", "coloured complex");
  if (!vs.is_array()) throw Error("\"vertices\" must be an array");
  std::vector<ColoredComplex::Vertex> vertices;
  for (const auto& v : vs)
    vertices.push_back({text(field(v, "id", "vertex"), "vertex id"), integer(field(v, "color", "vertex"), "vertex color")});
  const json& ms = field(j, "maximal_simplices", "coloured complex");
  if (!ms.is_array()) throw Error("\"maximal_simplices\" must be an array");
  std::vector<std::vector<std::string>> faces;
  for (const auto& m : ms) faces.push_back(texts(m, "maximal simplex"));
  return ColoredComplex::close_downward(n, std::move(vertices), faces);
}

json to_json(const ColouredPair& pair) { return {{"a", to_json(pair.first)}, {"b", to_json(pair.second)}}; }

ColouredPair pair_from_json(const json& j) {
  return {coloured_from_json(field(j, "a", "pair")), coloured_from_json(field(j, "b", "pair"))};
}

json to_json(const SimplicialComplex& k) {
  std::vector<std::vector<std::string>> faces;
  for (const auto& s : k.maximal_simplices())
    if (!s.empty()) faces.push_back(k.simplex_labels(s));
  return {{"vertices", k.labels()}, {"maximal_simplices", sorted_faces(std::move(faces))}};
}

SimplicialComplex simplicial_from_json(const json& j) {
  auto labels = texts(field(j, "vertices", "simplicial complex"), "vertex list");
  const json& ms = field(j, "maximal_simplices", "simplicial complex");
  if (!ms.is_array()) throw Error("\"maximal_simplices\" must be an array");
  std::vector<std::vector<std::string>> faces;
  for (const auto& m : ms) faces.push_back(texts(m, "maximal simplex"));
  return SimplicialComplex::from_simplices(std::move(labels), faces);
}

json to_json(const Clcc& x) {
  json cubes = json::array();
  const auto& cx = x.complex();
  for (int d = 0; d <= cx.dimension(); ++d) {
    for (int i = 0; i < static_cast<int>(cx.count(d)); ++i) {
      const auto& o = cx.origin({d, i});
      cubes.push_back({{"a", simplex_map(x.gamma_a(), o.a)}, {"b", simplex_map(x.gamma_b(), o.b)}, {"dim", d}});
    }
  }
  return {{"n", x.colours()}, {"cubes", cubes}};
}

Clcc clcc_from_json(const json& j) {
  const int n = integer(field(j, "n", "CLCC"), "\"n\"");
  if (n < 1 || n > kMaxColours) throw Error("\"n\" out of range");
  const json& cubes = field(j, "cubes", "CLCC");
  if (!cubes.is_array()) throw Error("\"cubes\" must be an array");
  struct Side {
    std::map<std::string, int> colour;
    std::vector<std::vector<std::string>> faces;
  };
  Side sides[2];
  std::set<std::string> listed;
  for (const auto& cube : cubes) {
    std::string key;
    for (int s = 0; s < 2; ++s) {
      const json& m = field(cube, s == 0 ? "a" : "b", "cube");
      if (!m.is_object()) throw Error("cube coordinates must be an object of colour to id");
      std::vector<std::string> face;
      key += "{";
      for (auto it = m.begin(); it != m.end(); ++it) {
        int c = 0;
        try {
          c = std::stoi(it.key());
        } catch (...) {
          throw Error("cube coordinate key '" + it.key() + "' is not a colour");
        }
        const std::string id = text(it.value(), "cube coordinate");
        auto [pos, fresh] = sides[s].colour.emplace(id, c);
        if (!fresh && pos->second != c) throw Error("vertex '" + id + "' appears with two colours");
        face.push_back(id);
        key += it.key() + ":" + id + ",";
      }
      key += "}";
      sides[s].faces.push_back(std::move(face));
    }
    const int dim = integer(field(cube, "dim", "cube"), "cube dim");
    if (!listed.insert(std::to_string(dim) + key).second) throw Error("cube listed twice");
  }
  ColoredComplex k[2];
  for (int s = 0; s < 2; ++s) {
    std::vector<ColoredComplex::Vertex> vertices;
    for (const auto& [id, c] : sides[s].colour) vertices.push_back({id, c});
    k[s] = ColoredComplex::close_downward(n, std::move(vertices), sides[s].faces);
  }
  Clcc x = build_clcc(k[0], k[1]);
  std::size_t total = 0;
  for (int d = 0; d <= x.complex().dimension(); ++d) total += x.complex().count(d);
  if (total != cubes.size()) throw Error("cube list is not the full CLCC of its coordinate simplices");
  for (const auto& cube : cubes) {
    std::vector<std::string> ia, ib;
    for (auto it = cube["a"].begin(); it != cube["a"].end(); ++it) ia.push_back(it.value().get<std::string>());
    for (auto it = cube["b"].begin(); it != cube["b"].end(); ++it) ib.push_back(it.value().get<std::string>());
    auto found = x.find(k[0].simplex_from_ids(ia), k[1].simplex_from_ids(ib));
    if (!found || found->dim != cube["dim"].get<int>())
      throw Error("cube list is not the full CLCC of its coordinate simplices");
  }
  return x;
}

json cube_complex_to_json(const CubeComplex& x) {
  json cubes = json::array();
  for (int d = 0; d <= x.dimension(); ++d) {
    std::vector<std::vector<std::string>> level;
    for (int i = 0; i < static_cast<int>(x.count(d)); ++i) {
      std::vector<std::string> ids;
      for (int v : x.vertices({d, i})) ids.push_back(x.id({0, v}));
      std::sort(ids.begin(), ids.end());
      level.push_back(std::move(ids));
    }
    std::sort(level.begin(), level.end());
    for (auto& ids : level) cubes.push_back({{"dim", d}, {"vertices", ids}});
  }
  return {{"cubes", cubes}};
}

CubeComplex cube_complex_from_json(const json& j) {
  const json& cubes = field(j, "cubes", "cube complex");
  if (!cubes.is_array()) throw Error("\"cubes\" must be an array");
  std::vector<std::vector<std::string>> sets;
  for (const auto& cube : cubes) {
    auto vs = texts(field(cube, "vertices", "cube"), "cube vertices");
    if (cube.contains("dim") && (std::size_t{1} << integer(cube["dim"], "cube dim")) != vs.size())
      throw Error("cube dim does not match its vertex count");
    sets.push_back(std::move(vs));
  }
  return CubeComplex::from_vertex_sets(sets);
}

json to_json(const CellComplex& host, const Chain& c) { return {{"dim", c.dim}, {"cells", chain_ids(host, c)}}; }

Chain chain_from_json(const CellComplex& host, const json& j) {
  return chain_from_ids(host, integer(field(j, "dim", "chain"), "chain dim"),
                        texts(field(j, "cells", "chain"), "chain cells"));
}

json to_json(const Pocset& s) {
  json pairs = json::array();
  for (int i = 0; i < s.pairs(); ++i) pairs.push_back({{"id", s.pair_id(i)}});
  std::vector<std::vector<std::string>> less;
  for (auto [a, b] : s.cover_relations()) less.push_back({s.name(a), s.name(b)});
  std::sort(less.begin(), less.end());
  return {{"pairs", pairs}, {"less", less}};
}

Pocset pocset_from_json(const json& j) {
  const json& pairs = field(j, "pairs", "pocset");
  if (!pairs.is_array()) throw Error("\"pairs\" must be an array");
  std::vector<std::string> ids;
  for (const auto& p : pairs) ids.push_back(text(field(p, "id", "pocset pair"), "pair id"));
  const Pocset bare = Pocset::make(ids, {});
  auto element = [&](std::string name) {
    // Accept the typographic minus sign as well.
    const std::string minus = "−";
    if (name.size() > minus.size() && name.compare(name.size() - minus.size(), minus.size(), minus) == 0)
      name = name.substr(0, name.size() - minus.size()) + "-";
    auto e = bare.element(name);
    if (!e) throw Error("unknown pocset element '" + name + "'");
    return *e;
  };
  std::vector<Pocset::Relation> relations;
  if (j.contains("less")) {
    if (!j["less"].is_array()) throw Error("\"less\" must be an array");
    for (const auto& r : j["less"]) {
      auto names = texts(r, "order relation");
      if (names.size() != 2) throw Error("an order relation has two entries");
      relations.emplace_back(element(names[0]), element(names[1]));
    }
  }
  return Pocset::make(std::move(ids), relations);
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

std::string digest(const json& j) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace clcc

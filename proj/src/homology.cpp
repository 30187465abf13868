#include "clcc/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "clcc/error.hpp"

namespace clcc {

Chain make_chain(int dim, std::vector<int> cells) {
  std::sort(cells.begin(), cells.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(cells[i]);
    i = j;
  }
  return {dim, std::move(out)};
}

Chain chain_sum(const Chain& a, const Chain& b) {
  if (a.dim != b.dim) throw Error("cannot add chains of different dimensions");
  Chain out{a.dim, {}};
  std::set_symmetric_difference(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                                std::back_inserter(out.cells));
  return out;
}

Chain all_cells(const CellComplex& host, int dim) {
  Chain out{dim, {}};
  for (int i = 0; i < static_cast<int>(host.count(dim)); ++i) out.cells.push_back(i);
  return out;
}

namespace {

void check_cells(const CellComplex& host, const Chain& c) {
  if (c.dim < -1) throw Error("chain dimension below -1");
  for (int i : c.cells)
    if (i < 0 || static_cast<std::size_t>(i) >= host.count(c.dim))
      throw Error("chain cell " + std::to_string(i) + " not in dimension " + std::to_string(c.dim));
}

}  // namespace

Chain boundary(const CellComplex& host, const Chain& c) {
  if (c.dim == -1) throw Error("the boundary of a dimension -1 chain is undefined");
  check_cells(host, c);
  std::vector<int> faces;
  for (int i : c.cells) {
    auto f = host.facets(c.dim, i);
    faces.insert(faces.end(), f.begin(), f.end());
  }
  return make_chain(c.dim - 1, std::move(faces));
}

bool is_cycle(const CellComplex& host, const Chain& c) {
  if (c.dim == -1) {
    check_cells(host, c);
    return true;
  }
  return boundary(host, c).zero();
}

namespace {

// Bit-packed rows over GF(2), eliminated in input order; each reduced row
// is stored under its lowest set bit.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : words_((columns + 63) / 64) {}

  bool insert(std::vector<std::uint64_t> row) {
    for (;;) {
      const auto low = lowest(row);
      if (low < 0) return false;
      auto it = pivots_.find(low);
      if (it == pivots_.end()) {
        pivots_.emplace(low, std::move(row));
        return true;
      }
      const auto& p = it->second;
      for (std::size_t w = static_cast<std::size_t>(low) / 64; w < words_; ++w) row[w] ^= p[w];
    }
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t words() const { return words_; }

 private:
  long long lowest(const std::vector<std::uint64_t>& row) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (row[w]) return static_cast<long long>(w * 64 + static_cast<std::size_t>(std::countr_zero(row[w])));
    return -1;
  }

  std::size_t words_;
  std::unordered_map<long long, std::vector<std::uint64_t>> pivots_;
};

}  // namespace

std::size_t boundary_rank(const CellComplex& host, int dim) {
  if (dim < 0) throw Error("boundary rank needs dimension >= 0");
  if (dim > host.dimension()) return 0;
  RowEchelon echelon(host.count(dim - 1));
  for (int i = 0; i < static_cast<int>(host.count(dim)); ++i) {
    std::vector<std::uint64_t> row(echelon.words(), 0);
    for (int f : host.facets(dim, i)) row[static_cast<std::size_t>(f) / 64] ^= std::uint64_t{1} << (f % 64);
    echelon.insert(std::move(row));
  }
  return echelon.rank();
}

bool is_boundary(const CellComplex& host, const Chain& c) {
  check_cells(host, c);
  if (c.zero()) return true;
  if (c.dim + 1 > host.dimension()) return false;
  RowEchelon echelon(host.count(c.dim));
  for (int i = 0; i < static_cast<int>(host.count(c.dim + 1)); ++i) {
    std::vector<std::uint64_t> row(echelon.words(), 0);
    for (int f : host.facets(c.dim + 1, i)) row[static_cast<std::size_t>(f) / 64] ^= std::uint64_t{1} << (f % 64);
    echelon.insert(std::move(row));
  }
  std::vector<std::uint64_t> target(echelon.words(), 0);
  for (int f : c.cells) target[static_cast<std::size_t>(f) / 64] ^= std::uint64_t{1} << (f % 64);
  return !echelon.insert(std::move(target));
}

std::vector<long long> betti(const CellComplex& host, bool reduced) {
  const int top = host.dimension();
  std::vector<long long> ranks(static_cast<std::size_t>(top + 2), 0);  // ranks[k] = rank d_k
  for (int k = 0; k <= top; ++k) ranks[static_cast<std::size_t>(k)] = static_cast<long long>(boundary_rank(host, k));
  if (!reduced && top >= 0) ranks[0] = 0;
  std::vector<long long> out;
  for (int k = 0; k <= top; ++k) {
    const auto cells = static_cast<long long>(host.count(k));
    out.push_back(cells - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)]);
  }
  return out;
}

Localized localize(const SimplicialComplex& host, const Chain& c, const SimplicialComplex::Simplex& e) {
  check_cells(host.cells(), c);
  if (!host.contains(e)) throw Error("localization at a simplex not in the complex");
  const int k = static_cast<int>(e.size()) - 1;
  if (k > c.dim) throw Error("localization cell has larger dimension than the chain");
  Localized out{host.link(e), {c.dim - k - 1, {}}};
  std::vector<int> cells;
  for (int i : c.cells) {
    const auto& s = host.simplices(c.dim)[static_cast<std::size_t>(i)];
    if (!std::includes(s.begin(), s.end(), e.begin(), e.end())) continue;
    std::vector<std::string> rest;
    for (int v : s)
      if (!std::binary_search(e.begin(), e.end(), v)) rest.push_back(host.label(v));
    cells.push_back(*out.link.find(out.link.simplex_from_labels(rest)));
  }
  out.chain = make_chain(c.dim - k - 1, std::move(cells));
  return out;
}

Localized localize(const CubeComplex& host, const Chain& c, CubeRef e) {
  check_cells(host.cells(), c);
  if (e.dim < 0 || static_cast<std::size_t>(e.index) >= host.count(e.dim))
    throw Error("localization at a cube not in the complex");
  if (e.dim > c.dim) throw Error("localization cell has larger dimension than the chain");
  Localized out{host.link(e), {c.dim - e.dim - 1, {}}};
  std::vector<CubeRef> next;
  for (const auto& u : host.cofaces(e))
    if (u.dim == e.dim + 1) next.push_back(u);
  std::vector<int> cells;
  for (int i : c.cells) {
    const CubeRef cube{c.dim, i};
    if (!host.is_face(e, cube)) continue;
    std::vector<std::string> labels;
    for (const auto& u : next)
      if (host.is_face(u, cube)) labels.push_back(host.id(u));
    cells.push_back(*out.link.find(out.link.simplex_from_labels(labels)));
  }
  out.chain = make_chain(out.chain.dim, std::move(cells));
  return out;
}

Joined join_chains(const SimplicialComplex& left, const Chain& sigma, const SimplicialComplex& right,
                   const Chain& omega) {
  check_cells(left.cells(), sigma);
  check_cells(right.cells(), omega);
  Joined out{simplicial_join(left, right), {sigma.dim + omega.dim + 1, {}}};
  std::vector<std::string> l = left.labels();
  std::vector<std::string> r = right.labels();
  std::vector<std::string> common;
  std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(common));
  if (!common.empty()) {
    for (auto& s : l) s = "0:" + s;
    for (auto& s : r) s = "1:" + s;
  }
  std::vector<int> cells;
  for (int i : sigma.cells) {
    for (int j : omega.cells) {
      std::vector<std::string> labels;
      for (int v : left.simplices(sigma.dim)[static_cast<std::size_t>(i)]) labels.push_back(l[static_cast<std::size_t>(v)]);
      for (int v : right.simplices(omega.dim)[static_cast<std::size_t>(j)]) labels.push_back(r[static_cast<std::size_t>(v)]);
      cells.push_back(*out.join.find(out.join.simplex_from_labels(labels)));
    }
  }
  out.chain = make_chain(out.chain.dim, std::move(cells));
  return out;
}

bool fundamental_class(const CellComplex& host) {
  if (!host.is_pure()) throw Error("fundamental class requested for a complex that is not pure");
  return is_cycle(host, all_cells(host, host.dimension()));
}

namespace {

bool covered(const ColoredComplex& k, const Chain& omega, const ColoredComplex& other, const Chain& other_omega) {
  std::vector<ColourMask> masks;
  for (int j : other_omega.cells)
    masks.push_back(other.from_plain(other.uncoloured().simplices(other_omega.dim)[static_cast<std::size_t>(j)]).coords());
  std::sort(masks.begin(), masks.end());
  for (int i : omega.cells) {
    const CoordSimplex s = k.from_plain(k.uncoloured().simplices(omega.dim)[static_cast<std::size_t>(i)]);
    const ColourMask need = k.full_mask() & ~s.coords();
    if (need == 0) continue;
    if (!std::binary_search(masks.begin(), masks.end(), need)) return false;
  }
  return true;
}

}  // namespace

bool smartly_paired_chains(const ColoredComplex& a, const Chain& omega_a, const ColoredComplex& b,
                           const Chain& omega_b) {
  if (a.colours() != b.colours()) throw Error("colour counts differ");
  check_cells(a.uncoloured().cells(), omega_a);
  check_cells(b.uncoloured().cells(), omega_b);
  return covered(a, omega_a, b, omega_b) && covered(b, omega_b, a, omega_a);
}

Chain clcc_cycle(const Clcc& x, const Chain& omega_a, const Chain& omega_b) {
  const auto& ga = x.gamma_a();
  const auto& gb = x.gamma_b();
  if (!smartly_paired_chains(ga, omega_a, gb, omega_b))
    throw Error("the chains are not smartly paired");
  const int dim = omega_a.dim + omega_b.dim + 2 - x.colours();
  if (dim < 0) throw Error("the chains give a cube dimension below 0");
  std::vector<int> cells;
  for (int i : omega_a.cells) {
    const CoordSimplex a = ga.from_plain(ga.uncoloured().simplices(omega_a.dim)[static_cast<std::size_t>(i)]);
    for (int j : omega_b.cells) {
      const CoordSimplex b = gb.from_plain(gb.uncoloured().simplices(omega_b.dim)[static_cast<std::size_t>(j)]);
      if ((a.coords() | b.coords()) != ga.full_mask()) continue;
      cells.push_back(x.find(a, b)->index);
    }
  }
  return make_chain(dim, std::move(cells));
}

std::vector<std::string> chain_ids(const CellComplex& host, const Chain& c) {
  check_cells(host, c);
  std::vector<std::string> out;
  for (int i : c.cells) out.push_back(host.id(c.dim, i));
  std::sort(out.begin(), out.end());
  return out;
}

Chain chain_from_ids(const CellComplex& host, int dim, const std::vector<std::string>& ids) {
  if (dim < -1 || dim > host.dimension()) throw Error("chain dimension " + std::to_string(dim) + " out of range");
  std::vector<int> cells;
  for (const auto& id : ids) {
    auto i = host.find(dim, id);
    if (!i) throw Error("unknown " + std::to_string(dim) + "-cell '" + id + "'");
    cells.push_back(*i);
  }
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) throw Error("chain lists a cell twice");
  return {dim, std::move(cells)};
}

}  // namespace clcc

#include "clcc/hyperbolicity.hpp"

#include "clcc/clcc.hpp"
#include "clcc/error.hpp"
#include "clcc/generators.hpp"
#include "clcc/io.hpp"

namespace clcc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Hyperbolic: return "Hyperbolic";
    case Verdict::NotHyperbolic: return "NotHyperbolic";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

json Certificate::to_json() const {
  return {{"verdict", clcc::to_string(verdict)},
          {"rule", rule.empty() ? json(nullptr) : json(rule)},
          {"witness", witness},
          {"attempted", attempted},
          {"digest", digest}};
}

namespace {

json square_json(const SquareWitness& w) {
  return {{"ids", w.ids}, {"colours", w.colours}};
}

json pairwise_json(const ColoredComplex& a, const ColoredComplex& b) {
  json out = json::array();
  const int n = a.colours();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool clean_a = empty_squares(a, std::make_pair(i, j)).empty();
      const bool clean_b = empty_squares(b, std::make_pair(i, j)).empty();
      out.push_back({{"colours", {i, j}}, {"clean_side", clean_a ? (clean_b ? "both" : "A") : (clean_b ? "B" : "none")}});
    }
  }
  return out;
}

}  // namespace

bool is_full_cross_polytope(const ColoredComplex& k) {
  const int n = k.colours();
  if (k.vertex_count() != 2 * n) return false;
  std::vector<int> per(static_cast<std::size_t>(n + 1), 0);
  for (const auto& v : k.vertices()) ++per[static_cast<std::size_t>(v.colour)];
  for (int c = 1; c <= n; ++c)
    if (per[static_cast<std::size_t>(c)] != 2) return false;
  return k.has_coords(k.full_mask()) && k.with_coords(k.full_mask()).size() == (std::size_t{1} << n);
}

Certificate certify(const ColoredComplex& a, const ColoredComplex& b) {
  if (a.colours() != b.colours()) throw Error("colour counts differ");
  Certificate cert;
  cert.digest = digest(to_json(ColouredPair{a, b}));
  if (!is_flag(a).flag || !is_flag(b).flag) {
    cert.witness = {{"reason", "NPC hypothesis unverified by flagness"}};
    return cert;
  }

  cert.attempted.push_back("5-large");
  const auto large_a = is_5_large(a);
  const auto large_b = is_5_large(b);
  if (large_a.holds || large_b.holds) {
    cert.verdict = Verdict::Hyperbolic;
    cert.rule = "5-large";
    cert.witness = {{"side", large_a.holds ? "A" : "B"}};
    if (pairwise_5_large(a, b).holds && is_obes(a).holds && is_obes(b).holds)
      cert.witness["also_applies"] = {"pairwise-5-large+obes"};
    return cert;
  }

  cert.attempted.push_back("pairwise-5-large+obes");
  const auto pairwise = pairwise_5_large(a, b);
  const auto obes_a = is_obes(a);
  const auto obes_b = is_obes(b);
  if (pairwise.holds && obes_a.holds && obes_b.holds) {
    cert.verdict = Verdict::Hyperbolic;
    cert.rule = "pairwise-5-large+obes";
    cert.witness = {{"obes", {{"A", true}, {"B", true}}}, {"pairwise", pairwise_json(a, b)}};
    return cert;
  }

  cert.attempted.push_back("cross-polytope+square");
  for (int side = 0; side < 2; ++side) {
    const auto& full = side == 0 ? a : b;
    const auto& other_large = side == 0 ? large_b : large_a;
    if (is_full_cross_polytope(full) && !other_large.holds) {
      cert.verdict = Verdict::NotHyperbolic;
      cert.rule = "cross-polytope+square";
      cert.witness = {{"cross_polytope_side", side == 0 ? "A" : "B"}, {"square", square_json(*other_large.witness)}};
      return cert;
    }
  }

  cert.attempted.push_back("vertex-links-5-large");
  const Clcc x = build_clcc(a, b);
  const auto& cx = x.complex();
  if (cx.count(0) > 0) {
    bool all = true;
    for (int v = 0; v < static_cast<int>(cx.count(0)) && all; ++v)
      if (!find_empty_squares(cx.link({0, v})).empty()) all = false;
    if (all) {
      cert.verdict = Verdict::Hyperbolic;
      cert.rule = "vertex-links-5-large";
      cert.witness = {{"vertices", cx.count(0)}};
      return cert;
    }
  }

  json reasons = json::object();
  reasons["square_A"] = square_json(*large_a.witness);
  reasons["square_B"] = square_json(*large_b.witness);
  if (!pairwise.holds) reasons["pairwise_colours"] = {pairwise.colours->first, pairwise.colours->second};
  if (!obes_a.holds) reasons["tricolour_square_A"] = square_json(*obes_a.witness);
  if (!obes_b.holds) reasons["tricolour_square_B"] = square_json(*obes_b.witness);
  cert.witness = reasons;
  return cert;
}

Certificate moussong(const SimplicialComplex& gamma) {
  if (!check_flag(gamma).flag) throw Error("the Moussong criterion needs a flag complex");
  Certificate cert;
  cert.attempted = {"moussong"};
  cert.rule = "moussong";
  cert.digest = digest(to_json(gamma));
  const auto squares = find_empty_squares(gamma);
  if (squares.empty()) {
    cert.verdict = Verdict::Hyperbolic;
    cert.witness = json::object();
  } else {
    cert.verdict = Verdict::NotHyperbolic;
    std::vector<std::string> ids;
    for (int v : squares.front().cycle) ids.push_back(gamma.label(v));
    cert.witness = {{"square", ids}};
  }
  return cert;
}

Certificate certify_barycentric(const SimplicialComplex& gamma, BarycentricColours gamma_colours,
                                const SimplicialComplex& lambda, BarycentricColours lambda_colours) {
  const auto [a, b] = gen_barycentric_pair(gamma, gamma_colours, lambda, lambda_colours);
  Certificate cert;
  cert.attempted = {"barycentric"};
  cert.digest = digest(to_json(ColouredPair{a, b}));
  const auto obes_a = is_obes(a);
  const auto obes_b = is_obes(b);
  const auto pairwise = pairwise_5_large(a, b);
  if (!obes_a.holds || !obes_b.holds || !pairwise.holds)
    throw Error("internal error: barycentric pair failed its o.b.e.s./pairwise 5-large verification");
  cert.verdict = Verdict::Hyperbolic;
  cert.rule = "barycentric";
  cert.witness = {{"obes", {{"A", true}, {"B", true}}}, {"pairwise", pairwise_json(a, b)}};
  return cert;
}

}  // namespace clcc

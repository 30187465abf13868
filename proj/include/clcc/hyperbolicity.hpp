#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clcc/simplicial.hpp"

namespace clcc {

enum class Verdict { Hyperbolic, NotHyperbolic, Unknown };

std::string to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  std::string rule;                      // empty for Unknown
  nlohmann::json witness;                // evidence, or the reason for Unknown
  std::vector<std::string> attempted;    // rules tried, in order
  std::string digest;                    // of the input pair

  nlohmann::json to_json() const;
};

/// Rules, first match wins:
///   "5-large"                  either side has no empty square;
///   "pairwise-5-large+obes"    pairwise 5-large and both sides o.b.e.s.;
///   "cross-polytope+square"    one side is the full cross-polytope and the other
///                              has an empty square (NotHyperbolic);
///   "vertex-links-5-large"     every vertex link of the CLCC is 5-large.
/// Non-flag input gives Unknown.  Throws when the colour counts differ.
Certificate certify(const ColoredComplex& a, const ColoredComplex& b);

/// Exact for right-angled Coxeter groups: hyperbolic iff Γ has no empty
/// square.  Throws when Γ is not flag.
Certificate moussong(const SimplicialComplex& gamma);

/// Builds both subdivisions, verifies o.b.e.s. and pairwise 5-large on the
/// result and returns Hyperbolic.  Throws on invalid colourings or dim > 2;
/// a failed verification throws as an internal error.
Certificate certify_barycentric(const SimplicialComplex& gamma, BarycentricColours gamma_colours,
                                const SimplicialComplex& lambda, BarycentricColours lambda_colours);

/// True when k is the join of n two-point colour classes.
bool is_full_cross_polytope(const ColoredComplex& k);

}  // namespace clcc

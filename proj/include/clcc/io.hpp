#pragma once

#include <string>

#include <json.hpp>

#include "clcc/clcc.hpp"
#include "clcc/generators.hpp"
#include "clcc/homology.hpp"
#include "clcc/pocset.hpp"

namespace clcc {

using json = nlohmann::json;

/// {"n", "vertices": [{"id", "color"}], "maximal_simplices": [[id]]}, ids and
/// simplices sorted.  A complex with no vertices lists no maximal simplices.
json to_json(const ColoredComplex& k);
ColoredComplex coloured_from_json(const json& j);

/// {"a": complex, "b": complex}
json to_json(const ColouredPair& pair);
ColouredPair pair_from_json(const json& j);

/// {"vertices": [label], "maximal_simplices": [[label]]}
json to_json(const SimplicialComplex& k);
SimplicialComplex simplicial_from_json(const json& j);

/// {"n", "cubes": [{"a": {colour: id}, "b": {...}, "dim"}]} in cube order.
json to_json(const Clcc& x);
/// Rebuilds the pair from the coordinate simplices in use and checks that its
/// CLCC is exactly the listed cube set.
Clcc clcc_from_json(const json& j);

/// {"cubes": [{"dim", "vertices": [id]}]}, every cube listed.
json cube_complex_to_json(const CubeComplex& x);
CubeComplex cube_complex_from_json(const json& j);

/// {"dim", "cells": [id]}
json to_json(const CellComplex& host, const Chain& c);
Chain chain_from_json(const CellComplex& host, const json& j);

/// {"pairs": [{"id"}], "less": [[s, t]]} with elements "<id>+" / "<id>-";
/// export lists covering relations only.
json to_json(const Pocset& s);
Pocset pocset_from_json(const json& j);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical(const json& j);
/// "fnv1a64:<hex>" of the compact dump (keys are sorted there too).
std::string digest(const json& j);

}  // namespace clcc

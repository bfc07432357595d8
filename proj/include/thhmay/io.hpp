#pragma once

// JSON readers and writers for algebras, bimodules and simplicial sets.
// Malformed documents raise Error(Parse); structural violations raise the
// validation error of the corresponding constructor.

#include <filesystem>

#include "json.hpp"
#include "thhmay/algebra.hpp"
#include "thhmay/simplicial.hpp"

namespace thhmay {

// { p, basis: [{name, degree, weight?}], unit, products: [{left, right,
//   result: [{basis, coeff}]}], truncation? }
// Only left <= right (basis order) may be listed; the transposed products
// follow from graded commutativity. Products with the unit may be omitted.
FilteredAlgebra algebra_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const FilteredAlgebra& a);

// { basis: [{name, degree, weight?}], action: [{left: algebra element,
//   right: module element, result: [{basis, coeff}]}] }
// The unit acts as the identity unless listed.
FilteredBimodule module_from_json(const FilteredAlgebra& base, const nlohmann::json& doc);
nlohmann::json to_json(const FilteredBimodule& m);

// { levels: [[names]], faces: [level][i][simplex] -> index,
//   degeneracies: [level][i][simplex] -> index, basepoint?, nondegenerate_dim? }
// faces may omit level 0; degeneracies may omit the top level.
SimplicialFiniteSet simplicial_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const SimplicialFiniteSet& x);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace thhmay

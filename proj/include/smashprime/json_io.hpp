#pragma once

#include <string>

#include <json.hpp>

#include "smashprime/module_algebra.hpp"
#include "smashprime/twist.hpp"

namespace smashprime {

// Scalars serialize as exact strings: "num/den" (den omitted when 1) over Q,
// decimal residues over F_p. All structure tensors are sparse lists; omitted
// entries are zero.

FieldSpec field_from_json(const nlohmann::json& j);
nlohmann::json field_to_json(FieldSpec f);

Algebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const Algebra& a);

HopfAlgebra hopf_from_json(const nlohmann::json& j);
nlohmann::json hopf_to_json(const HopfAlgebra& h);

/// The "hopf"/"algebra" slots accept a full object or a catalog name string.
HModuleAlgebra module_algebra_from_json(const nlohmann::json& j);
nlohmann::json module_algebra_to_json(const HModuleAlgebra& ma);

/// {"J": [{"i":..,"j":..,"c":".."}]}; key "R" for R-matrices.
TensorElement tensor2_from_json(const nlohmann::json& j, std::size_t dim, FieldSpec f,
                                const std::string& key);
nlohmann::json tensor2_to_json(const TensorElement& t, std::size_t dim, const std::string& key);

nlohmann::json load_json_file(const std::string& path);

}  // namespace smashprime

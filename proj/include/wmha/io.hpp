#pragma once

#include <json.hpp>

#include "wmha/wmha.hpp"

namespace wmha {

/// Structure-constant JSON for table algebras:
/// {"basis":[...], "mult":{"i,j":[["k","re","im"],...]},
///  "star":{"i":[["k","re","im"],...]}?, "unit":[["k","re","im"],...]?}
/// Unknown keys rejected; basis tokens must not contain commas.
BasedAlgebra parse_algebra(const nlohmann::json& j);

/// Table coproduct / weak Hopf data on top of the algebra format:
/// "delta":{"i":[["j","k","re","im"],...]} plus optional
/// "eps":{"i":["re","im"]} and "antipode":{"i":[["k","re","im"],...]}.
/// Requires a unital algebra (Delta lands in A tensor A).
Structure parse_table_structure(const nlohmann::json& j, bool as_weak_hopf);

}  // namespace wmha

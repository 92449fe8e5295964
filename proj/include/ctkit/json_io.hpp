#pragma once

#include <string>

#include <json.hpp>

#include "ctkit/dimension_functions.hpp"
#include "ctkit/elliott.hpp"
#include "ctkit/interval_topology.hpp"
#include "ctkit/presentation.hpp"
#include "ctkit/stability.hpp"

namespace ctkit {

using Json = nlohmann::json;

// Rationals travel as strings "p/q" in lowest terms (plain "p" when q = 1).
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& location);

Json to_json(const OpenSet& s);
OpenSet openset_from_json(const Json& j, const std::string& location);

Json to_json(const StepFunction& f);
StepFunction step_function_from_json(const Json& j);

Json to_json(const NestedLayers& layers);
NestedLayers layers_from_json(const Json& j);

Json to_json(const Presentation& pres);
Json to_json(const BlockModel& model);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& location);

Json to_json(const MatrixPath& path);
MatrixPath path_from_json(const Json& j);

Json to_json(const RepairReport& report);

Json to_json(const ExtRational& x);
ExtRational ext_rational_from_json(const Json& j, const std::string& location);

Json to_json(const InvariantProfile& inv);
InvariantProfile profile_from_json(const Json& j);

ScalarFunction scalar_function_from_json(const Json& j);
Json to_json(const ScalarFunction& f);

Json to_json(const AIReport& report);

}  // namespace ctkit

#pragma once

// JSON encodings for the data objects. Every to_json has a matching parser;
// parsers throw InvalidInput on structurally wrong documents.

#include <json.hpp>

#include "quiverlab/quiver.hpp"
#include "quiverlab/rcgraph.hpp"
#include "quiverlab/splitlab.hpp"

namespace quiverlab::json {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& w);
Json to_json(const SignedPermutation& w);
Json to_json(const PartialPermutation& rho);
Json to_json(const RankConditions& r);
Json to_json(const LaceArray& s);
Json to_json(const LacingDiagram& W);
Json to_json(const PipeDream& D);
Json to_json(const MVPoly& p);
Json to_json(const SchurExpansion& e);
// Also used for SplitA, which has the same representation.
Json to_json(const QuiverCoeffs& c);
Json to_json(const SplitBCD& s);
Json to_json(const CoeffTable& t);
Json to_json(const QExpansion& q);
Json to_json(const ComponentReport& rep);
Json to_json(const StabilityReport& rep);
Json to_json(const Theorem2Report& rep);

Permutation permutation_from(const Json& j);
SignedPermutation signed_permutation_from(const Json& j);
Partition partition_from(const Json& j);
PartialPermutation partial_permutation_from(const Json& j);
RankConditions rank_conditions_from(const Json& j);
LacingDiagram lacing_diagram_from(const Json& j);
PipeDream pipe_dream_from(const Json& j);
MVPoly poly_from(const Json& j);
SchurExpansion schur_expansion_from(const Json& j);
QuiverCoeffs quiver_coeffs_from(const Json& j);
SplitBCD split_bcd_from(const Json& j);
CoeffTable coeff_table_from(const Json& j);
QExpansion q_expansion_from(const Json& j);

// Parses text; malformed documents raise QuiverError of kind "malformed_json".
Json parse(const std::string& text);

// {"error": kind, "message": what}
Json error_json(const QuiverError& e);

}  // namespace quiverlab::json

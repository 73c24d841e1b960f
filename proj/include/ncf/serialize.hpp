#ifndef NCF_SERIALIZE_HPP
#define NCF_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "ncf/als.hpp"
#include "ncf/assignment.hpp"
#include "ncf/mateval.hpp"
#include "ncf/newton.hpp"

namespace ncf {

/* ALS wire format (u = e_1 implicit, rationals bit-exact as strings):
 * {
 *   "dim": n,
 *   "letters": ["x", "y"],
 *   "A0": [["1","0"],["0","1"]],
 *   "A":  {"x": [[...]], "y": [[...]]},
 *   "v":  ["0","1"]
 * }
 */
nlohmann::json alsToJson(const Als& f);
Als alsFromJson(const nlohmann::json& j);

/// Assignment format: { "m": 3, "assign": { "z": [[...]] } }. Entries
/// may be rational strings (exact) or plain numbers.
MatAssignmentQ exactAssignmentFromJson(const nlohmann::json& j, const Alphabet& alpha);
MatAssignmentD doubleAssignmentFromJson(const nlohmann::json& j, const Alphabet& alpha);

/// A plain 2D array or an {"m":..,"matrix":[[..]]} object, float mode.
MatD doubleMatrixFromJson(const nlohmann::json& j);

nlohmann::json matToJson(const MatQ& m);
nlohmann::json matToJson(const MatD& m);

nlohmann::json witnessToJson(const ProbeWitness& w, const Alphabet& alpha);

/// CSV with header k,norm_B,norm_err,norm_commutator; absent optional
/// columns stay empty.
std::string traceToCsv(const NewtonTrace& trace);

} // namespace ncf

#endif

#pragma once

#include <nlohmann/json.hpp>

#include "quatopt/convexity.hpp"
#include "quatopt/optimize.hpp"

namespace quatopt {

// Shared wire formats. A quaternion is the 4-array [a, b, c, d]; a vector is
// an array of quaternions; a matrix is an array of rows of quaternions; a
// quadratic objective is {"R": matrix, "p": vector, "c": number}. Decoders
// raise ParseError with context on any malformed document.

nlohmann::json encode(const Quaternion& q);
nlohmann::json encode(const QVector& v);
nlohmann::json encode(const QMatrix& M);
nlohmann::json encode(const QuadraticObjective& obj);
nlohmann::json encode(const Certificate& cert);
nlohmann::json encode(const SolveResult& result);

Quaternion decode_quaternion(const nlohmann::json& j);
QVector decode_qvector(const nlohmann::json& j);
QMatrix decode_qmatrix(const nlohmann::json& j);
QuadraticObjective decode_objective(const nlohmann::json& j);
// Accepts either a bare objective document or {"objective": ..., "A": ...,
// "b": ...}; constraints are optional.
ConstrainedQP decode_problem(const nlohmann::json& j);

nlohmann::json parse_document(const std::string& text);
nlohmann::json load_json_file(const std::string& path);

}  // namespace quatopt

#include "quatopt/serialization.hpp"

#include <fstream>
#include <sstream>

namespace quatopt {

using nlohmann::json;

json encode(const Quaternion& q) { return json::array({q.a(), q.b(), q.c(), q.d()}); }

json encode(const QVector& v) {
  json out = json::array();
  for (const Quaternion& e : v) out.push_back(encode(e));
  return out;
}

json encode(const QMatrix& M) {
  json out = json::array();
  for (std::size_t s = 0; s < M.rows(); ++s) {
    json row = json::array();
    for (std::size_t t = 0; t < M.cols(); ++t) row.push_back(encode(M.at(s, t)));
    out.push_back(std::move(row));
  }
  return out;
}

json encode(const QuadraticObjective& obj) {
  return json{{"R", encode(obj.R())}, {"p", encode(obj.p())}, {"c", obj.c()}};
}

json encode(const Certificate& cert) {
  json out{{"verdict", to_string(cert.verdict)}, {"criterion", to_string(cert.criterion)}};
  if (cert.witness) {
    out["witness"] = json{{"p", encode(cert.witness->p)},
                          {"q", encode(cert.witness->q)},
                          {"violation", cert.witness->violation}};
  }
  if (cert.sigma) out["sigma"] = *cert.sigma;
  return out;
}

json encode(const SolveResult& result) {
  json residuals{{"gradient", result.gradient_residual}};
  if (result.constraint_residual)
    residuals["constraint"] = *result.constraint_residual;
  return json{{"q_opt", encode(result.q_opt)},
              {"objective_value", result.objective_value},
              {"iterations", result.iterations},
              {"residuals", std::move(residuals)}};
}

Quaternion decode_quaternion(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("quaternion must be a 4-array [a, b, c, d]");
  for (const auto& e : j)
    if (!e.is_number()) throw ParseError("quaternion components must be numbers");
  try {
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
  } catch (const NonFiniteValue& e) {
    throw ParseError(e.what());
  }
}

QVector decode_qvector(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("vector must be a non-empty array");
  QVector v(j.size());
  for (std::size_t s = 0; s < j.size(); ++s) v[s] = decode_quaternion(j[s]);
  return v;
}

QMatrix decode_qmatrix(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  QMatrix M(rows, cols);
  for (std::size_t s = 0; s < rows; ++s) {
    if (!j[s].is_array() || j[s].size() != cols) throw ParseError("matrix rows have ragged sizes");
    for (std::size_t t = 0; t < cols; ++t) M.at(s, t) = decode_quaternion(j[s][t]);
  }
  return M;
}

QuadraticObjective decode_objective(const json& j) {
  if (!j.is_object() || !j.contains("R") || !j.contains("p"))
    throw ParseError("objective must be an object with R and p");
  double c = 0.0;
  if (j.contains("c")) {
    if (!j["c"].is_number()) throw ParseError("objective c must be a number");
    c = j["c"].get<double>();
  }
  try {
    return QuadraticObjective(decode_qmatrix(j["R"]), decode_qvector(j["p"]), c);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid objective: ") + e.what());
  }
}

ConstrainedQP decode_problem(const json& j) {
  if (!j.is_object()) throw ParseError("problem must be a JSON object");
  const json& obj_json = j.contains("objective") ? j["objective"] : j;
  ConstrainedQP prob{decode_objective(obj_json), {}, {}};
  if (j.contains("A") != j.contains("b"))
    throw ParseError("constraints need both A and b");
  if (j.contains("A")) {
    prob.A = decode_qmatrix(j["A"]);
    prob.b = decode_qvector(j["b"]);
    if (prob.A->cols() != prob.objective.dim() || prob.A->rows() != prob.b->size())
      throw ParseError("constraint shapes disagree with the objective");
  }
  return prob;
}

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

}  // namespace quatopt

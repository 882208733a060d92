#pragma once

#include <json.hpp>

#include "ehlcp/analysis.hpp"
#include "ehlcp/matclass.hpp"
#include "ehlcp/wprops.hpp"

namespace ehlcp {

using Json = nlohmann::ordered_json;

// Scalars serialize as integers when integral (and in range), else "p/q"
// strings; matrices as row-major arrays of arrays.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json tuple_to_json(const MatrixTuple& c, const std::vector<Vec>* d = nullptr);
MatrixTuple tuple_from_json(const Json& j);

// {"n":..., "k":..., "C":[...], "d":[...], "q":[...]}
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json solution_tuple_to_json(const SolutionTuple& x);
SolutionTuple solution_tuple_from_json(const Json& j);

Json piece_to_json(const Piece& p);
Json solution_set_to_json(const SolutionSet& s);

Json verdict_to_json(const std::string& property, const Verdict& v);
Json class_verdict_to_json(const ClassVerdict& v);
Json class_report_to_json(const MatrixClassReport& r);

Json analysis_to_json(const AnalysisReport& r);
Json degree_to_json(const DegreeResult& r);

/// Parses either an Instance (object with "q") or a bare MatrixTuple,
/// optionally with bound vectors "d". Returned as a maximally-filled
/// instance: when "q" is absent, q is zero (flagged by the bool).
struct ParsedInput {
  Instance instance;
  bool has_q = false;
  bool has_d = false;
};
ParsedInput parse_input(const std::string& path_or_text);
ParsedInput parse_input_json(const Json& j);

}  // namespace ehlcp

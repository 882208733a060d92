#include "ehlcp/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ehlcp {

Json rational_to_json(const Rational& r) {
  if (is_integer(r)) {
    const BigInt& num = numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
      return Json(num.convert_to<std::int64_t>());
  }
  return Json(to_string(r));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational: expected integer or 'p/q' string, got " + j.dump());
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rational_to_json(r));
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector: expected array");
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected nonempty array of rows");
  const int rows = int(j.size());
  const int cols = int(j.front().size());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j[size_t(i)];
    if (!row.is_array() || int(row.size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(row[size_t(c)]);
  }
  return m;
}

Json tuple_to_json(const MatrixTuple& c, const std::vector<Vec>* d) {
  Json j;
  j["n"] = c.n;
  j["k"] = c.k;
  Json mats = Json::array();
  for (const auto& m : c.mats) mats.push_back(matrix_to_json(m));
  j["C"] = std::move(mats);
  if (d) {
    Json dv = Json::array();
    for (const auto& v : *d) dv.push_back(vec_to_json(v));
    j["d"] = std::move(dv);
  }
  return j;
}

MatrixTuple tuple_from_json(const Json& j) {
  if (!j.contains("C")) throw std::invalid_argument("tuple: missing \"C\"");
  std::vector<Matrix> mats;
  for (const auto& m : j.at("C")) mats.push_back(matrix_from_json(m));
  MatrixTuple t(std::move(mats));
  if (j.contains("n") && j.at("n").get<int>() != t.n)
    throw std::invalid_argument("tuple: \"n\" disagrees with matrix shape");
  if (j.contains("k") && j.at("k").get<int>() != t.k)
    throw std::invalid_argument("tuple: \"k\" disagrees with matrix count");
  return t;
}

Json instance_to_json(const Instance& inst) {
  Json j = tuple_to_json(inst.tuple, &inst.d);
  j["q"] = vec_to_json(inst.q);
  return j;
}

Instance instance_from_json(const Json& j) {
  MatrixTuple t = tuple_from_json(j);
  std::vector<Vec> d;
  if (j.contains("d"))
    for (const auto& v : j.at("d")) d.push_back(vec_from_json(v));
  if (!j.contains("q")) throw std::invalid_argument("instance: missing \"q\"");
  Vec q = vec_from_json(j.at("q"));
  return Instance(std::move(t), std::move(d), std::move(q));
}

Json solution_tuple_to_json(const SolutionTuple& x) {
  Json a = Json::array();
  for (const auto& v : x.xs) a.push_back(vec_to_json(v));
  return a;
}

SolutionTuple solution_tuple_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("solution tuple: expected array of vectors");
  SolutionTuple x;
  for (const auto& v : j) x.xs.push_back(vec_from_json(v));
  return x;
}

namespace {

Json constraint_to_json(const LinearConstraint& c) {
  Json j;
  j["coeffs"] = vec_to_json(c.coeffs);
  j["rhs"] = rational_to_json(c.rhs);
  return j;
}

}  // namespace

Json piece_to_json(const Piece& p) {
  Json j;
  j["branch"] = p.branch.level;
  Json eq = Json::array(), le = Json::array();
  for (const auto& c : p.cons.eq) eq.push_back(constraint_to_json(c));
  for (const auto& c : p.cons.le) le.push_back(constraint_to_json(c));
  j["equalities"] = std::move(eq);
  j["inequalities"] = std::move(le);
  j["sample"] = solution_tuple_to_json(p.sample);
  return j;
}

Json solution_set_to_json(const SolutionSet& s) {
  Json j;
  j["count"] = s.pieces.size();
  Json pieces = Json::array();
  for (const auto& p : s.pieces) pieces.push_back(piece_to_json(p));
  j["pieces"] = std::move(pieces);
  return j;
}

Json verdict_to_json(const std::string& property, const Verdict& v) {
  Json j;
  j["property"] = property;
  j["status"] = to_string(v.status);
  Json cert;
  if (v.status == Status::Yes && v.sign != 0) cert["sign"] = v.sign;
  if (v.witness) cert["witness"] = solution_tuple_to_json(*v.witness);
  if (v.reps) {
    Json r;
    r["first"] = {{"cols", v.reps->first.cols}, {"det", rational_to_json(v.reps->det_first)}};
    if (v.reps->second)
      r["second"] = {{"cols", v.reps->second->cols}, {"det", rational_to_json(v.reps->det_second)}};
    cert["representatives"] = std::move(r);
  }
  if (v.w0) {
    cert["perturbation"] = tuple_to_json(v.w0->perturbation);
    Json grid = Json::array();
    for (const auto& e : v.w0->eps_grid) grid.push_back(rational_to_json(e));
    cert["eps_grid"] = std::move(grid);
  }
  if (v.diag) {
    Json dg = Json::array();
    for (const auto& d : v.diag->diags) dg.push_back(vec_to_json(d));
    cert["diagonals"] = std::move(dg);
  }
  j["certificate"] = cert.is_null() ? Json() : std::move(cert);
  return j;
}

Json class_verdict_to_json(const ClassVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  if (v.witness) j["witness"] = vec_to_json(*v.witness);
  return j;
}

Json class_report_to_json(const MatrixClassReport& r) {
  Json j;
  j["is_Z"] = r.is_z;
  j["is_P"] = class_verdict_to_json(r.p);
  j["is_SSM"] = class_verdict_to_json(r.ssm);
  j["is_M"] = class_verdict_to_json(r.m);
  return j;
}

Json analysis_to_json(const AnalysisReport& r) {
  Json j;
  j["bounded"] = r.bounded;
  j["unique"] = r.unique;
  j["connected"] = r.connected;
  j["pieces"] = r.pieces;
  Json edges = Json::array();
  for (const auto& [a, b] : r.graph.edges) edges.push_back(Json::array({a, b}));
  j["graph"] = std::move(edges);
  if (r.empty)
    j["note"] = "empty solution set: bounded/connected hold vacuously, unique is false";
  return j;
}

Json degree_to_json(const DegreeResult& r) {
  Json j;
  switch (r.kind) {
    case DegreeResult::Kind::Value: j["kind"] = "value"; break;
    case DegreeResult::Kind::UndefinedNotR0W: j["kind"] = "undefined_not_r0_w"; break;
    case DegreeResult::Kind::GenericityExhausted: j["kind"] = "genericity_exhausted"; break;
  }
  if (r.kind == DegreeResult::Kind::Value) {
    j["value"] = r.value;
    j["generic_point"] = vec_to_json(r.generic_point);
    Json counted = Json::array();
    for (const auto& [cell, sgn] : r.counted) counted.push_back({{"cell", cell}, {"sign", sgn}});
    j["solutions_counted"] = std::move(counted);
  }
  return j;
}

ParsedInput parse_input_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("input: expected a JSON object");
  ParsedInput out;
  out.has_q = j.contains("q");
  out.has_d = j.contains("d") && !j.at("d").empty();
  if (out.has_q) {
    out.instance = instance_from_json(j);
    return out;
  }
  MatrixTuple t = tuple_from_json(j);
  std::vector<Vec> d;
  if (j.contains("d"))
    for (const auto& v : j.at("d")) d.push_back(vec_from_json(v));
  if (int(d.size()) != t.k - 1) {
    if (!d.empty()) throw std::invalid_argument("input: expected k-1 bound vectors in \"d\"");
    d.assign(size_t(t.k - 1), Vec(size_t(t.n), Rational(1)));
    out.has_d = false;
  }
  const int n = t.n;
  out.instance = Instance(std::move(t), std::move(d), Vec(size_t(n)));
  return out;
}

ParsedInput parse_input(const std::string& path_or_text) {
  std::string text = path_or_text;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("input: empty");
  if (text[first] != '{') {
    std::ifstream in(path_or_text);
    if (!in) throw std::invalid_argument("input: cannot open file '" + path_or_text + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("input: malformed JSON: ") + e.what());
  }
  return parse_input_json(j);
}

}  // namespace ehlcp

#include "wickrot/document.hpp"

#include <json.hpp>

namespace wickrot {

namespace {

using Json = nlohmann::ordered_json;

struct Scalar {
  Rational value;
  bool exact = true;
};

Scalar parse_scalar(const Json& j, const std::string& where) {
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw ParseError(where + ": '" + j.get<std::string>() + "' is not a rational literal");
    return {*r, true};
  }
  if (j.is_number_integer() || j.is_number_unsigned()) return {Rational(j.get<long long>()), true};
  if (j.is_number_float()) return {rational_from_double(j.get<double>()), false};
  throw ParseError(where + ": expected a rational string or a number");
}

Json emit_scalar(const Rational& q, bool exact) {
  if (exact) return Json(rational_to_string(q));
  return Json(to_double(q));
}

std::pair<QMat, bool> parse_matrix(const Json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  QMat m(rows, cols);
  bool exact = true;
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(where + "[" + std::to_string(r) + "]: expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) {
      Scalar s = parse_scalar(row[static_cast<std::size_t>(c)],
                              where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      m(r, c) = s.value;
      exact = exact && s.exact;
    }
  }
  return {m, exact};
}

Json emit_matrix(const QMat& m, bool exact) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(emit_scalar(m(r, c), exact));
    rows.push_back(row);
  }
  return rows;
}

Json document_json(const AlgebraDocument& doc) {
  const LieAlgebra& l = doc.algebra;
  int n = l.dim();
  Json j;
  j["schema_version"] = "1";
  if (!l.name().empty()) j["name"] = l.name();
  j["dim"] = n;
  j["basis"] = l.labels();
  Json brackets = Json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = i + 1; jj < n; ++jj) {
      Json coeffs;
      for (int k = 0; k < n; ++k) {
        Rational c = l.c(i, jj, k);
        if (c != 0) coeffs[std::to_string(k + 1)] = emit_scalar(c, l.exact());
      }
      if (!coeffs.empty()) brackets.push_back(Json{{"i", i + 1}, {"j", jj + 1}, {"coeffs", coeffs}});
    }
  j["brackets"] = brackets;
  j["metric"] = emit_matrix(doc.metric.form, doc.metric.exact);
  if (doc.provenance) {
    const Provenance& p = *doc.provenance;
    Json pj;
    pj["parent_hash"] = p.parent_hash;
    pj["theta"] = emit_matrix(p.theta, p.theta_exact);
    pj["basis_map"] = emit_matrix(p.basis_map, p.theta_exact);
    pj["t_dim"] = p.t_dim;
    j["provenance"] = pj;
  }
  return j;
}

}  // namespace

AlgebraDocument parse_algebra_document(const std::string& text, bool validate, double tol) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  if (!j.contains("schema_version") || j["schema_version"] != "1")
    throw ParseError("schema_version: expected \"1\"");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("dim: expected an integer");
  int n = j["dim"].get<int>();
  if (n < 1 || n > 32) throw ParseError("dim: out of range [1, 32]");

  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != n)
      throw ParseError("basis: expected " + std::to_string(n) + " labels");
    for (const auto& s : j["basis"]) {
      if (!s.is_string()) throw ParseError("basis: labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  std::string name = j.contains("name") ? j["name"].get<std::string>() : "";

  LieAlgebra algebra(n, labels, name, true);
  bool algebra_exact = true;
  if (!j.contains("brackets") || !j["brackets"].is_array()) throw ParseError("brackets: expected an array");
  std::vector<bool> seen(static_cast<std::size_t>(LieAlgebra::pair_count(n)), false);
  int idx = 0;
  for (const auto& b : j["brackets"]) {
    std::string where = "brackets[" + std::to_string(idx++) + "]";
    if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
      throw ParseError(where + ": expected {i, j, coeffs}");
    int i = b["i"].get<int>(), jj = b["j"].get<int>();
    if (i < 1 || jj < 1 || i > n || jj > n) throw ParseError(where + ": indices out of range 1.." + std::to_string(n));
    if (i >= jj) throw ParseError(where + ": need i < j (got i=" + std::to_string(i) + ", j=" + std::to_string(jj) + ")");
    int p = LieAlgebra::pair_index(i - 1, jj - 1, n);
    if (seen[static_cast<std::size_t>(p)]) throw ParseError(where + ": duplicate pair (" + std::to_string(i) + "," + std::to_string(jj) + ")");
    seen[static_cast<std::size_t>(p)] = true;
    QVec coeffs = qvec_zero(n);
    for (const auto& [key, val] : b["coeffs"].items()) {
      int k = 0;
      try {
        k = std::stoi(key);
      } catch (...) {
        throw ParseError(where + ".coeffs: key '" + key + "' is not an index");
      }
      if (k < 1 || k > n) throw ParseError(where + ".coeffs: index " + key + " out of range");
      Scalar s = parse_scalar(val, where + ".coeffs[\"" + key + "\"]");
      coeffs[static_cast<std::size_t>(k - 1)] = s.value;
      algebra_exact = algebra_exact && s.exact;
    }
    algebra.set_bracket(i - 1, jj - 1, coeffs);
  }
  algebra.set_exact(algebra_exact);

  if (!j.contains("metric")) throw ParseError("metric: missing");
  auto [form, metric_exact] = parse_matrix(j["metric"], n, n, "metric");
  if (!form.is_symmetric()) throw ParseError("metric: not symmetric as written");

  AlgebraDocument doc;
  doc.algebra = algebra;
  doc.metric = Metric{form, metric_exact};

  if (j.contains("provenance")) {
    const Json& pj = j["provenance"];
    Provenance p;
    p.parent_hash = pj.value("parent_hash", std::string{});
    if (pj.contains("theta")) {
      auto [t, te] = parse_matrix(pj["theta"], n, n, "provenance.theta");
      p.theta = t;
      p.theta_exact = te;
    }
    if (pj.contains("basis_map")) p.basis_map = parse_matrix(pj["basis_map"], n, n, "provenance.basis_map").first;
    p.t_dim = pj.value("t_dim", 0);
    doc.provenance = p;
  }

  if (validate) {
    JacobiReport rep = check_jacobi(algebra, tol);
    if (!rep.ok)
      throw ParseError("brackets: Jacobi identity fails on triple (" + std::to_string(rep.i + 1) + "," +
                       std::to_string(rep.j + 1) + "," + std::to_string(rep.k + 1) + "), component " +
                       std::to_string(rep.l + 1) + ", residual " + std::to_string(rep.residual_double()));
  }
  return doc;
}

std::string emit_algebra_document(const AlgebraDocument& doc, bool pretty) {
  Json j = document_json(doc);
  return pretty ? j.dump(2) + "\n" : j.dump();
}

std::string document_hash(const AlgebraDocument& doc) {
  std::string bytes = document_json(doc).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

LinearMap parse_linear_map_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
    throw ParseError("matrix: expected {\"matrix\": [[...]]}");
  int n = static_cast<int>(j["matrix"].size());
  auto [m, exact] = parse_matrix(j["matrix"], n, n, "matrix");
  return LinearMap{m, MapRole::kAutomorphismCandidate, exact};
}

std::string emit_linear_map_document(const LinearMap& map, bool pretty) {
  Json j;
  j["matrix"] = emit_matrix(map.mat, map.exact);
  return pretty ? j.dump(2) + "\n" : j.dump();
}

}  // namespace wickrot

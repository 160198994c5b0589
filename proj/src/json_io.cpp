#include "qaff/json_io.hpp"

namespace qaff {

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : render(m)) rows.push_back(row);
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  const auto cols = n ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Matrix m(n, cols);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw ParseError("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_string()) throw ParseError("matrix entries are strings in canonical text");
      m(i, c) = RatFunc::parse(e.get<std::string>());
    }
  }
  return m;
}

Json to_json(const RelationReport& r, const ReportOptions& opt) {
  Json j;
  j["relation_id"] = r.relation_id;
  j["instances_checked"] = r.instances_checked;
  j["passed"] = r.passed();
  j["failure_count"] = r.failures.size();
  Json fs = Json::array();
  for (std::size_t k = 0; k < r.failures.size() && static_cast<int>(k) < opt.max_failures; ++k)
    fs.push_back({{"instance", r.failures[k].instance}, {"lhs", r.failures[k].lhs}, {"rhs", r.failures[k].rhs}});
  j["failures"] = fs;
  if (opt.timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const std::vector<RelationReport>& rs, const ReportOptions& opt) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(to_json(r, opt));
  return a;
}

Json to_json(const PairingTable& t) {
  Json j;
  j["type"] = t.type.name();
  j["size"] = t.size();
  j["entries"] = to_json(t.entries);
  Json cartan = Json::array();
  for (int i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < t.size(); ++k) row.push_back(t.cartan(i, k));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  Json d = Json::array();
  for (const auto& x : t.d) d.push_back(x.get_str());
  j["d"] = d;
  j["diagnostics"] = t.diagnostics;
  return j;
}

Json to_json(const MatrixModule& m) {
  Json j;
  j["dim"] = m.dim;
  j["type"] = m.type.name();
  j["kmax"] = m.kmax;
  j["central_charge"] = m.central_charge;
  Json g = Json::object();
  for (const auto& [sym, mat] : m.assign) g[sym.str()] = to_json(mat);
  j["generators"] = g;
  return j;
}

MatrixModule module_from_json(const Json& j) {
  try {
    MatrixModule m;
    m.dim = j.at("dim").get<int>();
    m.type = AffineType::parse(j.at("type").get<std::string>());
    m.kmax = j.value("kmax", 0);
    m.central_charge = j.value("central_charge", 0);
    for (const auto& [name, mat] : j.at("generators").items()) {
      Matrix x = matrix_from_json(mat);
      if (x.rows() != m.dim || x.cols() != m.dim) throw ParseError(name + " is not " + std::to_string(m.dim) + "x" + std::to_string(m.dim));
      m.set(GenSymbol::parse(name), std::move(x));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("module JSON: ") + e.what());
  }
}

Json to_json(const RQResult& r) {
  Json j;
  j["i"] = r.i;
  j["passed"] = r.passed;
  j["prefactor_consistent"] = r.prefactor_consistent;
  if (!r.residual.empty()) j["residual"] = r.residual;
  return j;
}

}  // namespace qaff

#include "nefgl/io.hpp"

#include <fstream>
#include <sstream>

#include "nefgl/error.hpp"
#include "nefgl/parse.hpp"

namespace nefgl {

namespace {

std::size_t read_n(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field 'n'", 0);
  long n = j["n"].get<long>();
  if (n < 1) throw ParseError("'n' must be positive", 0);
  return static_cast<std::size_t>(n);
}

const nlohmann::json& square_array(const nlohmann::json& j, const char* key, std::size_t size) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != size)
    throw DimensionError(std::string("'") + key + "' must have " + std::to_string(size) + " rows");
  for (const auto& row : j[key])
    if (!row.is_array() || row.size() != size)
      throw DimensionError(std::string("every row of '") + key + "' must have " + std::to_string(size) + " entries");
  return j[key];
}

std::string entry_text(const nlohmann::json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<long>());
  throw ParseError("matrix entries must be strings", 0);
}

}  // namespace

GroupElement group_from_json(const nlohmann::json& j) {
  std::size_t n = read_n(j);
  const auto& rows = square_array(j, "rows", n + 1);
  RatMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t k = 0; k <= n; ++k) m(i, k) = parse_rational(entry_text(rows[i][k]));
  return GroupElement(m);
}

nlohmann::json group_to_json(const GroupElement& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i <= g.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k <= g.n(); ++k) row.push_back(g.matrix()(i, k).get_str());
    rows.push_back(row);
  }
  return {{"n", g.n()}, {"rows", rows}};
}

VarianceSpec variance_from_json(const nlohmann::json& j) {
  std::size_t n = read_n(j);
  const auto& entries = square_array(j, "entries", n);
  PolyMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) v(i, k) = poly_parse(entry_text(entries[i][k]), n);
  std::string domain = j.contains("domain") && j["domain"].is_string() ? j["domain"].get<std::string>() : "";
  return VarianceSpec(v, domain);
}

static nlohmann::json matrix_json(const PolyMatrix& v) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < v.size(); ++k) row.push_back(v(i, k).to_string());
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json variance_to_json(const VarianceSpec& v) {
  return {{"n", v.n}, {"entries", matrix_json(v.V)}, {"domain", v.domain}};
}

nlohmann::json rational_function_to_json(const RationalMatrixFunction& r) {
  return {{"n", r.size()}, {"numerators", matrix_json(r.numerators)}, {"denominator", r.denominator.to_string()}};
}

RationalMatrixFunction rational_function_from_json(const nlohmann::json& j) {
  std::size_t n = read_n(j);
  const auto& entries = square_array(j, "numerators", n);
  PolyMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) v(i, k) = poly_parse(entry_text(entries[i][k]), n);
  if (!j.contains("denominator")) throw ParseError("missing 'denominator'", 0);
  return {v, poly_parse(entry_text(j["denominator"]), n)};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what(), e.byte);
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace nefgl

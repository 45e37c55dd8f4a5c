#include "lieob/io.hpp"

#include <json.hpp>

namespace lieob {

namespace {
using nlohmann::json;

std::size_t require_index(const json& j, const char* field, std::size_t dim) {
  if (!j.contains(field) || !j[field].is_number_unsigned())
    throw DocumentError(std::string("structure constant record needs a non-negative integer '") +
                        field + "'");
  std::size_t v = j[field].get<std::size_t>();
  if (v >= dim)
    throw DocumentError(std::string("index ") + field + "=" + std::to_string(v) +
                        " out of range for dim " + std::to_string(dim));
  return v;
}
} // namespace

NamedAlgebra parse_algebra(const std::string& text, bool enforce_jacobi) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  for (const char* field : {"name", "dim", "basis_names", "structure_constants"})
    if (!doc.contains(field))
      throw DocumentError(std::string("missing required field '") + field + "'");
  if (!doc["name"].is_string()) throw DocumentError("'name' must be a string");
  if (!doc["dim"].is_number_unsigned()) throw DocumentError("'dim' must be a natural number");
  std::size_t dim = doc["dim"].get<std::size_t>();
  if (!doc["basis_names"].is_array() || doc["basis_names"].size() != dim)
    throw DocumentError("'basis_names' must be an array of dim strings");
  std::vector<std::string> names;
  for (const auto& n : doc["basis_names"]) {
    if (!n.is_string()) throw DocumentError("'basis_names' entries must be strings");
    names.push_back(n.get<std::string>());
  }
  if (!doc["structure_constants"].is_array())
    throw DocumentError("'structure_constants' must be an array");

  LieAlgebra::BracketTable table;
  for (const auto& rec : doc["structure_constants"]) {
    if (!rec.is_object()) throw DocumentError("structure constant records must be objects");
    std::size_t i = require_index(rec, "i", dim);
    std::size_t j = require_index(rec, "j", dim);
    if (i >= j)
      throw DocumentError("structure constant entry requires i < j, got (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
    if (!rec.contains("coeffs") || !rec["coeffs"].is_object())
      throw DocumentError("structure constant record needs a 'coeffs' object");
    Element value = zero_vector(dim);
    for (const auto& [key, val] : rec["coeffs"].items()) {
      std::size_t k;
      try {
        k = std::stoul(key);
      } catch (const std::exception&) {
        throw DocumentError("coefficient key '" + key + "' is not an index");
      }
      if (k >= dim)
        throw DocumentError("coefficient index " + key + " out of range for dim " +
                            std::to_string(dim));
      if (!val.is_string()) throw DocumentError("coefficients must be rational strings \"p/q\"");
      try {
        value[k] = parse_rational(val.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
      }
    }
    if (table.count({i, j}))
      throw DocumentError("duplicate structure constant entry for pair (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
    table[{i, j}] = std::move(value);
  }

  LieAlgebra g = [&] {
    try {
      return LieAlgebra(dim, std::move(names), std::move(table));
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what());
    }
  }();
  JacobiReport report = verify_jacobi(g);
  if (enforce_jacobi && !report.pass()) {
    const auto& v = report.violations.front();
    throw JacobiDocumentError("Jacobi identity fails at triple (" + std::to_string(v.i) + "," +
                                  std::to_string(v.j) + "," + std::to_string(v.k) + ")",
                              v.i, v.j, v.k);
  }
  return NamedAlgebra{doc["name"].get<std::string>(), std::move(g)};
}

std::string emit_algebra(const std::string& name, const LieAlgebra& g, int indent) {
  json doc;
  doc["name"] = name;
  doc["dim"] = g.dim();
  doc["basis_names"] = g.basis_names();
  json entries = json::array();
  for (const auto& [ij, value] : g.brackets()) {
    json rec;
    rec["i"] = ij.first;
    rec["j"] = ij.second;
    json coeffs = json::object();
    for (std::size_t k = 0; k < value.size(); ++k)
      if (value[k] != 0) coeffs[std::to_string(k)] = format_rational(value[k]);
    rec["coeffs"] = std::move(coeffs);
    entries.push_back(std::move(rec));
  }
  doc["structure_constants"] = std::move(entries);
  return doc.dump(indent) + "\n";
}

} // namespace lieob

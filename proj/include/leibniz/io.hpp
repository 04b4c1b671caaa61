#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "leibniz/conj.hpp"

namespace leibniz {

using nlohmann::json;

/// Algebra JSON: { "name": str?, "dim": n, "field": "Q" | {"p": int},
///   "table": n x n array of n-arrays of scalar strings } (dense; zeros "0").
inline json algebra_to_json(const LeibnizAlgebra& L) {
  json j;
  if (!L.name().empty()) j["name"] = L.name();
  j["dim"] = L.dim();
  if (L.field().is_rationals())
    j["field"] = "Q";
  else
    j["field"] = json{{"p", L.field().p}};
  json table = json::array();
  for (int i = 0; i < L.dim(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < L.dim(); ++jj) {
      json entry = json::array();
      for (int k = 0; k < L.dim(); ++k) entry.push_back(L.c(i, jj, k).str());
      row.push_back(entry);
    }
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

inline FieldDescriptor field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return FieldDescriptor::rationals();
  if (j.is_object() && j.contains("p")) return FieldDescriptor::gf(j["p"].get<long>());
  throw precondition_error("field must be \"Q\" or {\"p\": prime}");
}

inline LeibnizAlgebra algebra_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("field") || !j.contains("table"))
    throw precondition_error("algebra JSON needs dim, field, table");
  int n = j["dim"].get<int>();
  FieldDescriptor f = field_from_json(j["field"]);
  LeibnizAlgebra L(n, f, j.value("name", std::string{}));
  const json& table = j["table"];
  if (static_cast<int>(table.size()) != n) throw precondition_error("table must have dim rows");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) throw precondition_error("table row length != dim");
    for (int jj = 0; jj < n; ++jj) {
      const json& entry = table[i][jj];
      if (static_cast<int>(entry.size()) != n)
        throw precondition_error("table entry must list dim coefficients");
      for (int k = 0; k < n; ++k)
        L.set_c(i, jj, k, Scalar::parse(f, entry[k].get<std::string>()));
    }
  }
  return L;
}

inline json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (int i = 0; i < s.dim(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < s.ambient(); ++jj) row.push_back(s.basis().at(i, jj).str());
    rows.push_back(row);
  }
  return json{{"ambient", s.ambient()}, {"basis", rows}};
}

inline Subspace subspace_from_json(const json& j, const FieldDescriptor& f) {
  int ambient = j["ambient"].get<int>();
  std::vector<Vec> rows;
  for (const json& row : j["basis"]) {
    Vec v;
    for (const json& e : row) v.push_back(Scalar::parse(f, e.get<std::string>()));
    rows.push_back(std::move(v));
  }
  return canonical_span(rows, ambient, f);
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < m.cols(); ++jj) row.push_back(m.at(i, jj).str());
    rows.push_back(row);
  }
  return rows;
}

inline json certificate_to_json(const ConjugacyCertificate& c) {
  json word = json::array();
  for (const WordEntry& e : c.automorphism.word) {
    json gen = json::array();
    for (const Scalar& s : e.generator) gen.push_back(s.str());
    word.push_back(gen);
  }
  return json{{"group", c.group_tag},
              {"word", word},
              {"matrix", matrix_to_json(c.automorphism.matrix)},
              {"source", subspace_to_json(c.source)},
              {"target", subspace_to_json(c.target)}};
}

/// Subspace flags on the CLI are semicolon-separated vectors of
/// comma-separated scalar strings, e.g. "0,1;1,0".
inline Subspace parse_subspace_flag(const std::string& text, int ambient,
                                    const FieldDescriptor& f) {
  std::vector<Vec> rows;
  std::stringstream vectors(text);
  std::string vec_text;
  while (std::getline(vectors, vec_text, ';')) {
    if (vec_text.empty()) continue;
    Vec v;
    std::stringstream comps(vec_text);
    std::string comp;
    while (std::getline(comps, comp, ',')) v.push_back(Scalar::parse(f, comp));
    if (static_cast<int>(v.size()) != ambient)
      throw precondition_error("subspace flag vector has wrong length");
    rows.push_back(std::move(v));
  }
  return canonical_span(rows, ambient, f);
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw precondition_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace leibniz

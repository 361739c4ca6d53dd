#pragma once

// Shared JSON helpers for the definition-file readers and writers.

#include <json.hpp>

#include <string>
#include <vector>

#include "opalg/errors.hpp"
#include "opalg/linalg.hpp"
#include "opalg/rational.hpp"

namespace opalg::jsonio {

using Json = nlohmann::ordered_json;

inline Json parse(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

inline const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline int need_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_number_integer()) throw SchemaError(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

inline void check_schema(const Json& j, const std::string& expected) {
  const Json& s = need(j, "schema", "document");
  if (!s.is_string() || s.get<std::string>() != expected)
    throw SchemaError("schema must be \"" + expected + "\"");
}

inline Rational rational_from(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw SchemaError(where + ": coefficient must be a \"p/q\" string");
  return parse_rational(v.get<std::string>());
}

// Sparse vector as [[index, "p/q"], ...].
inline Json vec_to_json(const SparseVec& v) {
  Json a = Json::array();
  for (auto& [i, c] : v) a.push_back(Json::array({i, to_string(c)}));
  return a;
}

inline SparseVec vec_from_json(const Json& a, int dim, const std::string& where) {
  if (!a.is_array()) throw SchemaError(where + ": vector must be an array of [index, coefficient]");
  std::vector<std::pair<int, Rational>> e;
  for (auto& p : a) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer())
      throw SchemaError(where + ": vector entry must be [index, coefficient]");
    int i = p[0].get<int>();
    if (i < 0 || i >= dim) throw SchemaError(where + ": index " + std::to_string(i) + " out of range");
    e.emplace_back(i, rational_from(p[1], where));
  }
  return SparseVec::from_unsorted(std::move(e));
}

inline Json columns_to_json(const std::vector<SparseVec>& cols) {
  Json a = Json::array();
  for (auto& c : cols) a.push_back(vec_to_json(c));
  return a;
}

inline std::vector<SparseVec> columns_from_json(const Json& a, int cols, int rows, const std::string& where) {
  if (!a.is_array() || static_cast<int>(a.size()) != cols)
    throw SchemaError(where + ": expected " + std::to_string(cols) + " columns");
  std::vector<SparseVec> out;
  for (int j = 0; j < cols; ++j) out.push_back(vec_from_json(a[j], rows, where));
  return out;
}

inline Json space_to_json(const GradedSpace& s) {
  Json b = Json::array();
  for (auto& e : s.basis()) {
    Json x = {{"label", e.label}, {"degree", e.degree}};
    if (e.weight) x["weight"] = e.weight;
    b.push_back(x);
  }
  return b;
}

// Either a basis list or a {"degree": dimension} map.
inline SpacePtr space_from_json(const Json& j, const std::string& where, const std::string& prefix = "e") {
  if (j.is_array()) {
    std::vector<BasisElement> b;
    for (auto& x : j) {
      BasisElement e;
      e.degree = need_int(x, "degree", where);
      if (x.contains("weight")) e.weight = need_int(x, "weight", where);
      if (x.contains("label")) {
        if (!x["label"].is_string()) throw SchemaError(where + ": label must be a string");
        e.label = x["label"].get<std::string>();
      } else {
        e.label = prefix + std::to_string(b.size());
      }
      b.push_back(e);
    }
    return make_space(std::move(b));
  }
  if (j.is_object()) {
    std::map<int, int> dims;
    for (auto& [k, v] : j.items()) {
      int deg;
      try {
        size_t pos;
        deg = std::stoi(k, &pos);
        if (pos != k.size()) throw std::invalid_argument(k);
      } catch (const std::exception&) {
        throw SchemaError(where + ": degree key \"" + k + "\" is not an integer");
      }
      if (!v.is_number_integer() || v.get<int>() < 0) throw SchemaError(where + ": bad dimension");
      dims[deg] = v.get<int>();
    }
    return space_of_dims(dims, prefix);
  }
  throw SchemaError(where + ": basis must be a list or a degree map");
}

inline Json dims_to_json(const GradedSpace& s) {
  Json d = Json::object();
  for (auto& [deg, n] : s.dims()) d[std::to_string(deg)] = n;
  return d;
}

}  // namespace opalg::jsonio

#pragma once

// Cover interchange document:
//   {"source_rhs": "...", "target_rhs": "...", "f1": "...", "f2": "...", "degree": n}
// Strings use the poly_text syntax. Extra keys are ignored on input, so a
// full `generate` document can be fed straight back to `verify`.

#include <string>

#include "json.hpp"
#include "ramcover/curves.hpp"
#include "ramcover/error.hpp"
#include "ramcover/poly_text.hpp"

namespace ramcover {

using Json = nlohmann::ordered_json;

inline Json cover_to_json(const Cover& cov) {
  Json doc;
  doc["source_rhs"] = to_string(cov.source.rhs());
  doc["target_rhs"] = to_string(cov.target.rhs());
  doc["f1"] = to_string(cov.map.f1);
  doc["f2"] = to_string(cov.map.f2);
  doc["degree"] = cov.degree;
  return doc;
}

namespace json_detail {

inline const std::string& string_field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  if (!it->is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return it->get_ref<const std::string&>();
}

template <class F>
auto parse_field(const Json& doc, const char* key, F&& parse) {
  const std::string& text = string_field(doc, key);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace json_detail

inline Cover cover_from_json(const Json& doc) {
  using json_detail::parse_field;
  if (!doc.is_object()) throw ParseError("cover document must be a JSON object");
  auto curve = [](const std::string& s) { return HyperellipticCurve(parse_qt_poly(s)); };
  auto rf = [](const std::string& s) { return parse_ratfunc(s); };
  HyperellipticCurve source = parse_field(doc, "source_rhs", curve);
  HyperellipticCurve target = parse_field(doc, "target_rhs", curve);
  RatFunc f1 = parse_field(doc, "f1", rf);
  RatFunc f2 = parse_field(doc, "f2", rf);
  auto it = doc.find("degree");
  if (it == doc.end()) throw ParseError("missing field 'degree'");
  if (!it->is_number_integer() || it->get<long long>() < 1 || it->get<long long>() > (1LL << 30))
    throw ParseError("field 'degree' must be a positive integer");
  return Cover{std::move(source), std::move(target), CoverMap{std::move(f1), std::move(f2)},
               static_cast<int>(it->get<long long>())};
}

inline Cover cover_from_json_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return cover_from_json(doc);
}

}  // namespace ramcover

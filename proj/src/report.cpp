// SPDX-License-Identifier: Apache-2.0
#include "codebounds/report.hpp"

namespace codebounds {

using nlohmann::json;

json make_run_report(const std::string& command, const json& parameters, const json& bounds,
                     double timing_ms, const json& solver, const json& cert_path) {
  json r;
  r["command"] = command;
  r["parameters"] = parameters;
  r["bounds"] = bounds;
  r["timing_ms"] = timing_ms;
  r["solver"] = solver;
  r["certificate_path"] = cert_path;
  return r;
}

namespace {

bool type_matches(const json& doc, const std::string& t) {
  if (t == "object") return doc.is_object();
  if (t == "array") return doc.is_array();
  if (t == "string") return doc.is_string();
  if (t == "number") return doc.is_number();
  if (t == "integer") return doc.is_number_integer();
  if (t == "boolean") return doc.is_boolean();
  if (t == "null") return doc.is_null();
  return false;
}

std::string check(const json& doc, const json& schema, const std::string& path) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) ok = type_matches(doc, t.get<std::string>());
    else
      for (const auto& alt : t) ok = ok || type_matches(doc, alt.get<std::string>());
    if (!ok) return path + ": type mismatch";
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!doc.contains(key.get<std::string>()))
        return path + ": missing required key '" + key.get<std::string>() + "'";
  if (schema.contains("properties") && doc.is_object())
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
      if (doc.contains(it.key())) {
        std::string err = check(doc[it.key()], it.value(), path + "/" + it.key());
        if (!err.empty()) return err;
      }
  if (schema.contains("items") && doc.is_array())
    for (size_t i = 0; i < doc.size(); ++i) {
      std::string err = check(doc[i], schema["items"], path + "[" + std::to_string(i) + "]");
      if (!err.empty()) return err;
    }
  return "";
}

}  // namespace

std::string validate_against_schema(const json& doc, const json& schema) {
  return check(doc, schema, "$");
}

}  // namespace codebounds

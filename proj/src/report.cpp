#include "hecke/report.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

Json make_report(const std::string& command, Json inputs, Json results,
                 Json horizons) {
  Json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["results"] = std::move(results);
  r["provenance"] = Json{{"tool_version", kToolVersion},
                         {"horizons", std::move(horizons)}};
  return r;
}

namespace {

bool type_matches(const Json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "number") return v.is_number();
  if (t == "integer") return v.is_number_integer();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

void validate_at(const Json& doc, const Json& schema, const std::string& path,
                 std::vector<std::string>& problems) {
  if (schema.contains("type")) {
    std::string t = schema["type"].get<std::string>();
    if (!type_matches(doc, t)) {
      problems.push_back(path + ": expected " + t + ", got " +
                         std::string(doc.type_name()));
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"])
      if (e == doc) found = true;
    if (!found) problems.push_back(path + ": value not in enum");
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!doc.is_object() || !doc.contains(key.get<std::string>()))
        problems.push_back(path + ": missing required key '" +
                           key.get<std::string>() + "'");
    }
  }
  if (schema.contains("properties") && doc.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (doc.contains(key))
        validate_at(doc[key], sub, path + "/" + key, problems);
    }
  }
  if (schema.contains("items") && doc.is_array()) {
    std::size_t i = 0;
    for (const auto& el : doc) {
      validate_at(el, schema["items"], path + "/" + std::to_string(i), problems);
      ++i;
    }
  }
}

}  // namespace

std::vector<std::string> validate_schema(const Json& doc, const Json& schema) {
  std::vector<std::string> problems;
  validate_at(doc, schema, "", problems);
  return problems;
}

std::string Csv::to_string() const {
  std::ostringstream out;
  auto emit_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << row[i];
    }
    out << "\n";
  };
  emit_row(header);
  for (const auto& row : rows) emit_row(row);
  return out.str();
}

Csv Csv::parse(const std::string& text) {
  Csv out;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    fields.push_back(cur);
    if (first) {
      out.header = fields;
      first = false;
    } else {
      if (fields.size() != out.header.size())
        throw std::runtime_error("CSV row width differs from header");
      out.rows.push_back(fields);
    }
  }
  if (first) throw std::runtime_error("CSV input has no header row");
  return out;
}

}  // namespace hecke

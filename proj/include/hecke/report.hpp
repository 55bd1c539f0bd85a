#ifndef HECKE_REPORT_HPP
#define HECKE_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace hecke {

// Insertion-ordered JSON keeps report bytes stable across runs.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// {command, inputs{...}, results[...], provenance{tool_version, horizons}}
Json make_report(const std::string& command, Json inputs, Json results,
                 Json horizons);

// Validates a document against the subset of JSON Schema the shipped schema
// uses: type, required, properties, items, enum. Returns human-readable
// problems; empty means valid.
std::vector<std::string> validate_schema(const Json& doc, const Json& schema);

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
  static Csv parse(const std::string& text);
};

}  // namespace hecke

#endif

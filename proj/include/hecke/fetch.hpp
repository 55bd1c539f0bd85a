#ifndef HECKE_FETCH_HPP
#define HECKE_FETCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "hecke/newform.hpp"

namespace hecke {

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Returns nullopt on transport failure (connection refused, timeout, ...).
using Transport =
    std::function<std::optional<HttpResponse>(const std::string& url)>;

Transport default_transport();

struct FetchConfig {
  std::string base_url;
  std::string cache_dir = ".hecke_cache";
  int max_attempts = 3;
  int backoff_ms = 100;
  Transport transport;  // empty -> default_transport()
};

// GET <base_url>/<label>.json, expecting
//   {"label": ..., "weight": k, "level": N, "coefficients": [a1, a2, ...]}
// (coefficient entries may be numbers or decimal strings). The document is
// converted to the canonical text format, re-verified locally, and cached in
// cache_dir; a valid cached file short-circuits the network entirely.
Newform fetch_coefficients(const std::string& label, std::uint64_t limit,
                           const FetchConfig& cfg);

}  // namespace hecke

#endif

#include "hecke/fetch.hpp"

#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace hecke {

namespace fs = std::filesystem;

Transport default_transport() {
  return [](const std::string& url) -> std::optional<HttpResponse> {
    auto pos = url.find("://");
    if (pos == std::string::npos) return std::nullopt;
    auto path_pos = url.find('/', pos + 3);
    std::string origin = path_pos == std::string::npos ? url : url.substr(0, path_pos);
    std::string path = path_pos == std::string::npos ? "/" : url.substr(path_pos);
    httplib::Client cli(origin);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(30);
    auto res = cli.Get(path);
    if (!res) return std::nullopt;
    return HttpResponse{res->status, res->body};
  };
}

namespace {

std::string cache_path(const FetchConfig& cfg, const std::string& label,
                       std::uint64_t limit) {
  std::string safe;
  for (char c : label)
    safe.push_back((std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
                    c == '-' || c == '_')
                       ? c
                       : '_');
  return (fs::path(cfg.cache_dir) / (safe + "_" + std::to_string(limit) + ".txt"))
      .string();
}

Newform document_to_form(const std::string& body, const std::string& label,
                         std::uint64_t limit) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed JSON from remote at byte " +
                             std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.contains("weight") || !doc.contains("level") ||
      !doc.contains("coefficients"))
    throw std::runtime_error(
        "remote document must contain weight, level and coefficients");
  unsigned weight = doc["weight"].get<unsigned>();
  std::uint64_t level = doc["level"].get<std::uint64_t>();
  const auto& arr = doc["coefficients"];
  if (!arr.is_array() || arr.size() < 2)
    throw std::runtime_error("remote coefficient array too short");

  std::ostringstream text;
  text << "# weight " << weight << " level " << level << " label " << label
       << "\n";
  std::uint64_t n = 0;
  for (const auto& entry : arr) {
    if (++n > limit) break;
    text << n << " ";
    if (entry.is_string())
      text << entry.get<std::string>();
    else if (entry.is_number_integer())
      text << entry.get<long long>();
    else
      throw std::runtime_error("coefficient " + std::to_string(n) +
                               " is neither integer nor string");
    text << "\n";
  }
  std::istringstream in(text.str());
  // parse_coefficients re-verifies every structural relation; remote data is
  // untrusted
  return parse_coefficients(in, "remote:" + label);
}

}  // namespace

Newform fetch_coefficients(const std::string& label, std::uint64_t limit,
                           const FetchConfig& cfg) {
  if (cfg.base_url.empty())
    throw std::domain_error("no fetch base URL configured (HECKE_FETCH_URL)");

  // a cache file keyed by (label, limit) came from an identical request
  std::string cpath = cache_path(cfg, label, limit);
  if (fs::exists(cpath)) {
    Newform cached = load_coefficients(cpath);
    cached.source = FormSource::Http;
    return cached;
  }

  Transport transport = cfg.transport ? cfg.transport : default_transport();
  std::string url = cfg.base_url + "/" + label + ".json";
  std::optional<HttpResponse> resp;
  std::string last_error;
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    if (attempt > 0)
      std::this_thread::sleep_for(
          std::chrono::milliseconds(cfg.backoff_ms << (attempt - 1)));
    resp = transport(url);
    if (resp && resp->status == 200) break;
    last_error = resp ? "HTTP status " + std::to_string(resp->status)
                      : "connection failed";
    resp.reset();
  }
  if (!resp)
    throw std::runtime_error("fetch of " + url + " failed after " +
                             std::to_string(cfg.max_attempts) +
                             " attempts: " + last_error);

  Newform f = document_to_form(resp->body, label, limit);
  f.source = FormSource::Http;

  fs::create_directories(cfg.cache_dir);
  save_coefficients(f, cpath);
  return f;
}

}  // namespace hecke

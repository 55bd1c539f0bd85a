#ifndef HECKE_CLI_HPP
#define HECKE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hecke/fetch.hpp"
#include "hecke/newform.hpp"

namespace hecke {

enum class OutputKind { Table, Json, Csv };

struct RunConfig {
  std::uint64_t horizon = 100000;
  OutputKind output = OutputKind::Table;
  std::string cache_dir = ".hecke_cache";
  std::string fetch_base_url;  // empty: fetching disabled
  double epsilon = 0.01;
  double constant_C = 1.0;
  static constexpr bool deterministic = true;  // no seeds, no clock in payloads

  static RunConfig from_env();
};

// "delta", "k12".."k26", "file:<path>", "ec:<A>,<B>", "fetch:<label>"
Newform resolve_form(const std::string& spec, std::uint64_t limit,
                     const RunConfig& cfg);

// Exit codes: 0 success, 1 domain error, 2 invariant violation in data,
// 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hecke

#endif

#ifndef DESCENT_ADAPTER_HPP
#define DESCENT_ADAPTER_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "descent/integer.hpp"
#include "descent/twists.hpp"

namespace descent {

/// External integral-point solver, spoken to over one JSON line per request
/// on stdin/stdout. One subprocess per request.
struct AdapterConfig {
  std::string executable;
  std::vector<std::string> args;
  double timeout_seconds = 60.0;
};

/// Environment variable consulted for a default adapter executable.
inline constexpr const char* kAdapterEnvVar = "DESCENT_ADAPTER";

struct AdapterResponse {
  std::vector<std::pair<Integer, Integer>> points;
  bool complete = false;
};

/// Parses `{"points":[[x,y],...],"complete":bool}`; integers may be JSON
/// numbers or decimal strings. Throws AdapterProtocolError.
AdapterResponse parse_adapter_response(std::string_view line);

/// Runs the adapter once with `request` (newline appended) and returns the
/// first line it prints. Throws AdapterUnavailable / AdapterTimeout /
/// AdapterProtocolError.
std::string exchange_with_adapter(const AdapterConfig& config, const std::string& request);

/// Elliptic points (a, b) on E_d map back to a/d (when d | a) and to a itself;
/// Thue and d*y^2 = f(x) points are already curve-level.
TwistOutcome solve_twist_external(const TwistEquation& t, const AdapterConfig& config);

}  // namespace descent

#endif  // DESCENT_ADAPTER_HPP

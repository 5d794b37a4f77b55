#ifndef DESCENT_ERROR_HPP
#define DESCENT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace descent {

enum class Errc {
  Parse,
  ZeroPolynomial,
  NegativeEvenPower,
  ZeroInput,
  FactorizationTimeout,
  PerfectSquareInput,
  DigitBudgetExceeded,
  NotMonicCubic,
  SingularCurve,
  AdapterUnavailable,
  AdapterProtocolError,
  AdapterTimeout,
  CacheCorrupt,
  ZeroScale,
  CommonRoots,
  NotBinomial,
  UnsupportedShape,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Library error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace descent

#endif  // DESCENT_ERROR_HPP

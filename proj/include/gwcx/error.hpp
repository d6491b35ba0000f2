#pragma once

#include <stdexcept>
#include <string>

namespace gwcx {

enum class ErrorCode {
  domain = 1,
  divergence,
  integrand,
  insufficient_data,
  bandwidth,
  invalid_transform,
  weight,
  parse,
  evaluation,
  invalid_argument,
};

const char* error_code_name(ErrorCode code) noexcept;

// Base for every error raised by the library. The code survives the trip
// through the C API unchanged.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define GWCX_DEFINE_ERROR(Name, Code)                                   \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

GWCX_DEFINE_ERROR(DomainError, domain)
GWCX_DEFINE_ERROR(DivergenceError, divergence)
GWCX_DEFINE_ERROR(InsufficientDataError, insufficient_data)
GWCX_DEFINE_ERROR(BandwidthError, bandwidth)
GWCX_DEFINE_ERROR(InvalidTransformError, invalid_transform)
GWCX_DEFINE_ERROR(WeightError, weight)
GWCX_DEFINE_ERROR(ParseError, parse)
GWCX_DEFINE_ERROR(EvaluationError, evaluation)
GWCX_DEFINE_ERROR(InvalidArgumentError, invalid_argument)

#undef GWCX_DEFINE_ERROR

// Raised by the integrator when the integrand is not finite at an
// interior abscissa.
class IntegrandError : public Error {
 public:
  IntegrandError(const std::string& what, double u)
      : Error(ErrorCode::integrand, what), u_(u) {}
  double offending_u() const noexcept { return u_; }

 private:
  double u_;
};

}  // namespace gwcx

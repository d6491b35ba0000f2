#include "gwcx/error.hpp"

namespace gwcx {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::integrand: return "integrand";
    case ErrorCode::insufficient_data: return "insufficient_data";
    case ErrorCode::bandwidth: return "bandwidth";
    case ErrorCode::invalid_transform: return "invalid_transform";
    case ErrorCode::weight: return "weight";
    case ErrorCode::parse: return "parse";
    case ErrorCode::evaluation: return "evaluation";
    case ErrorCode::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace gwcx

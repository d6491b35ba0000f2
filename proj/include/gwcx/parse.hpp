#pragma once

#include <string_view>

#include "gwcx/distributions.hpp"
#include "gwcx/measures.hpp"
#include "gwcx/weights.hpp"

namespace gwcx {

/// `uniform:a,b`, `exp:lambda`, `powersurv:b`, and `transform:NAME(<base>)`
/// with NAME one of exp_minus_one or identity. Throws ParseError on
/// malformed text and DomainError on invalid parameters.
Distribution parse_distribution(std::string_view text);

/// `power:m`, `const:c`, `expdecay:a`.
WeightFunction parse_weight(std::string_view text);

/// single | srs | minrssu | maxrssu
Design parse_design(std::string_view text);

/// past | residual | extropy
Variant parse_variant(std::string_view text);

}  // namespace gwcx

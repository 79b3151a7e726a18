#ifndef EULERPHASE_FAMILY_SPEC_HPP
#define EULERPHASE_FAMILY_SPEC_HPP

#include <string>

#include "eulerphase/weights.hpp"

namespace eulerphase {

// Plain-text family grammar used by the CLI:
//   constant
//   power:s0=2.0
//   ap:a=1,j=3
//   periodic:1,0,2
//   scaled:base=ap:a=1,j=2;s=1.5
// Unknown keys are rejected with ConfigError.
WeightSequence parse_family(const std::string& spec);

}  // namespace eulerphase

#endif

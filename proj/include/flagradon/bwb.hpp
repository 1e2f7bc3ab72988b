#pragma once

// Relative pushforward rule for the projection X_I -> X_J with I inside J:
// a line bundle O(lambda) either dies on a singular shift or lands as a
// single line bundle placed in one cohomological degree.

#include <optional>

#include "flagradon/parabolic.hpp"
#include "flagradon/weyl.hpp"

namespace flagradon {

struct PushforwardTerm {
  Weight weight;
  int degree = 0;  // R pi_* O(lambda) = O(weight)[-degree]
};

// Empty optional encodes the zero pushforward; singularity is an expected
// outcome, not an error.
using PushforwardResult = std::optional<PushforwardTerm>;

PushforwardResult bwb_pushforward(const RootSystem& rs, const NodeSet& I,
                                  const NodeSet& J, const Weight& lambda);

}  // namespace flagradon

#pragma once

#include <stdexcept>

namespace qops {

// An operation index outside the range admitted by a model with a
// finite loop bound, or outside a commuting range for a map.
struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qops

#pragma once

#include <string_view>

#include "mfres/polynomial.hpp"

namespace mfres {

// Parses a homogeneous polynomial such as `x1^2*x2^4 + 3*y1*y2` or `x*(y + z)^2`.
// Integer coefficients are reduced modulo the characteristic. `line` and `column` locate the
// start of `text` in its source for error messages.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line = 1, int column = 1);

}  // namespace mfres

#pragma once

#include <string>

namespace oligo {

// Fixed-point rendering with exactly six fractional digits ("23.333333").
// All CLI numbers go through this so output is byte-stable.
std::string fmt6(double value);

// Fixed-point rendering with up to six fractional digits: trailing zeros and
// a bare decimal point are trimmed ("20", "13.5"). Used by the CSV trace
// writer. Negative zero collapses to "0".
std::string trim6(double value);

}  // namespace oligo

#include "oligo/format.hpp"

#include <cstdio>

namespace oligo {

std::string fmt6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::string trim6(double value) {
  std::string out = fmt6(value);
  auto last = out.find_last_not_of('0');
  if (out[last] == '.') --last;
  out.erase(last + 1);
  if (out == "-0") out = "0";
  return out;
}

}  // namespace oligo

#include <string>

#include "doctest.h"
#include "oligo/format.hpp"

using oligo::fmt6;
using oligo::trim6;

TEST_CASE("fmt6 renders exactly six fractional digits") {
  CHECK(fmt6(0.0) == "0.000000");
  CHECK(fmt6(23.333333333) == "23.333333");
  CHECK(fmt6(-3.0) == "-3.000000");
  CHECK(fmt6(355.5555555) == "355.555556");  // rounds, not truncates
  CHECK(fmt6(1e-7) == "0.000000");
  CHECK(fmt6(0.9) == "0.900000");
}

TEST_CASE("fmt6 collapses negative zero") {
  CHECK(fmt6(-0.0) == "0.000000");
  CHECK(fmt6(-1e-9) == "0.000000");
}

TEST_CASE("trim6 drops trailing zeros and bare points") {
  CHECK(trim6(20.0) == "20");
  CHECK(trim6(13.5) == "13.5");
  CHECK(trim6(0.9) == "0.9");
  CHECK(trim6(1.0 / 3.0) == "0.333333");
  CHECK(trim6(-8.0) == "-8");
  CHECK(trim6(-0.0) == "0");
  CHECK(trim6(-1e-9) == "0");
}

#include <doctest.h>

#include <random>

#include "knotconc/errors.hpp"
#include "knotconc/lspace.hpp"
#include "knotconc/polyio.hpp"
#include "oracles.hpp"

using namespace knotconc;

namespace {

std::size_t error_offset(const std::string& text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parse_poly term form") {
  CHECK(parse_poly("1+7t-15t^2+7t^3+t^4") == pn(7).laurent());
  CHECK(parse_poly("t^4 + 7*t^3 - 15 t^2 + 7t + 1") == pn(7).laurent());
  CHECK(parse_poly("-t^-1 + 3 - t") == LaurentPoly(0, {1, -3, 1}));
  CHECK(parse_poly("  t ") == LaurentPoly(0, {1}));
  CHECK(parse_poly("2t + 3t - t^1") == LaurentPoly(0, {4}));
  CHECK(parse_poly("t - t").is_zero());
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("+1-t^+2") == LaurentPoly(0, {1, 0, -1}));
  CHECK(parse_poly("123456789012345678901234567890*t^3 - 1") ==
        LaurentPoly(0, std::vector<Integer>{1, 0, 0, Integer("-123456789012345678901234567890")}));
}

TEST_CASE("parse_poly vector form") {
  CHECK(parse_poly("[1,-1,1]@0") == LaurentPoly(0, {1, -1, 1}));
  CHECK(parse_poly("[ -1, 3, -1 ] @ -1") == LaurentPoly(0, {1, -3, 1}));
  CHECK(parse_poly("[1,7,-15,7,1]") == pn(7).laurent());
  CHECK(parse_poly("[]").is_zero());
}

TEST_CASE("parse_poly errors carry byte offsets") {
  CHECK(error_offset("1++t") == 2);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("3*") == 2);
  CHECK(error_offset("t^") == 2);
  CHECK(error_offset("1 + x") == 4);
  CHECK(error_offset("t2") == 1);
  CHECK(error_offset("[1,2") == 4);
  CHECK(error_offset("[1,2]@") == 6);
  CHECK(error_offset("[1,2] 3") == 6);
  CHECK(error_offset("t^99999999999") == 2);
  CHECK(error_offset("t^900000 + t^-900000") == 11);
  CHECK_THROWS_AS(parse_poly("1++t"), ParseError);
}

TEST_CASE("render_poly") {
  CHECK(render_poly(pn(7).laurent()) == "1+7t-15t^2+7t^3+t^4");
  CHECK(render_poly(LaurentPoly()) == "0");
  CHECK(render_poly(LaurentPoly(-2, {-1, 0, 5})) == "-t^-2+5");
  CHECK(render_poly(LaurentPoly(0, {-1})) == "-1");
  CHECK(render_poly(LaurentPoly(1, {-2})) == "-2t");
}

TEST_CASE("parse_poly inverts render_poly on canonical polynomials") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = normalize(oracle::random_laurent(rng, 10, trial % 2 ? 3 : 1000000));
    CHECK(parse_poly(render_poly(p)) == p);
  }
}

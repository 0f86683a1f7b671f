#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "giry/errors.hpp"
#include "giry/rational.hpp"

#include "oracles.hpp"

using giry::BigInt;
using giry::Index;
using giry::ParseError;
using giry::Rat;
using giry::RatMat;
using giry::RatVec;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
  CHECK(Rat(BigInt(2), BigInt(4)) == Rat(BigInt(1), BigInt(2)));
  CHECK(Rat(BigInt(-2), BigInt(4)) == Rat(BigInt(-1), BigInt(2)));
  CHECK(Rat(BigInt(2), BigInt(-4)) == Rat(BigInt(-1), BigInt(2)));
  CHECK(Rat(BigInt(-2), BigInt(-4)) == Rat(BigInt(1), BigInt(2)));
  CHECK(Rat(BigInt(0), BigInt(7)) == Rat(0));
  CHECK(Rat(BigInt(2), BigInt(4)).den() == 2);
  CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), giry::InvalidValue);
}

TEST_CASE("default value is zero") {
  Rat r;
  CHECK(r == Rat(0));
  CHECK(r.is_zero());
}

TEST_CASE("field arithmetic") {
  Rat half(BigInt(1), BigInt(2));
  Rat third(BigInt(1), BigInt(3));
  CHECK(half + third == Rat(BigInt(5), BigInt(6)));
  CHECK(half - third == Rat(BigInt(1), BigInt(6)));
  CHECK(half * third == Rat(BigInt(1), BigInt(6)));
  CHECK(half / third == Rat(BigInt(3), BigInt(2)));
  CHECK(-half == Rat(BigInt(-1), BigInt(2)));
  CHECK_THROWS_AS(half / Rat(0), giry::InvalidValue);

  Rat acc(0);
  acc += half;
  acc *= Rat(4);
  acc -= Rat(1);
  acc /= Rat(2);
  CHECK(acc == half);
}

TEST_CASE("exactness survives values that overflow machine words") {
  Rat big(BigInt("100000000000000000000"), BigInt(3));
  Rat sum = big + big + big;
  CHECK(sum == Rat(BigInt("100000000000000000000")));
  CHECK((big * Rat(3)).is_integer());

  // 1/3 + 1/3 + 1/3 == 1 exactly, the identity binary floats miss
  Rat third(BigInt(1), BigInt(3));
  CHECK(third + third + third == Rat(1));
}

TEST_CASE("ordering by cross multiplication") {
  CHECK(Rat(BigInt(1), BigInt(3)) < Rat(BigInt(1), BigInt(2)));
  CHECK(Rat(BigInt(-1), BigInt(2)) < Rat(0));
  CHECK(Rat(BigInt(7), BigInt(8)) > Rat(BigInt(3), BigInt(4)));
  CHECK(Rat(BigInt(2), BigInt(6)) <= Rat(BigInt(1), BigInt(3)));
  CHECK(giry::abs(Rat(BigInt(-3), BigInt(4))) == Rat(BigInt(3), BigInt(4)));
}

TEST_CASE("text round trip") {
  CHECK(giry::to_string(Rat(BigInt(3), BigInt(4))) == "3/4");
  CHECK(giry::to_string(Rat(5)) == "5");
  CHECK(giry::to_string(Rat(BigInt(-3), BigInt(9))) == "-1/3");
  CHECK(giry::parse_rat("3/4") == Rat(BigInt(3), BigInt(4)));
  CHECK(giry::parse_rat("5") == Rat(5));
  CHECK(giry::parse_rat("-1/3") == Rat(BigInt(-1), BigInt(3)));
  CHECK(giry::parse_rat("0") == Rat(0));
  CHECK(giry::parse_rat(giry::to_string(Rat(BigInt(22), BigInt(7)))) == Rat(BigInt(22), BigInt(7)));

  std::ostringstream os;
  os << Rat(BigInt(1), BigInt(2));
  CHECK(os.str() == "1/2");
}

TEST_CASE("parse rejects junk") {
  CHECK_THROWS_AS(giry::parse_rat(""), ParseError);
  CHECK_THROWS_AS(giry::parse_rat("1/2/3"), ParseError);
  CHECK_THROWS_AS(giry::parse_rat("a/b"), ParseError);
  CHECK_THROWS_AS(giry::parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(giry::parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(giry::parse_rat(" 1/2"), ParseError);
  CHECK_THROWS_AS(giry::parse_rat("1/2 "), ParseError);
  CHECK_THROWS_AS(giry::parse_rat("1/"), ParseError);
  CHECK_THROWS_AS(giry::parse_rat("/2"), ParseError);
}

TEST_CASE("Eigen vectors and matrices of rationals match the schoolbook oracle") {
  RatMat a(2, 2);
  a << Rat(BigInt(1), BigInt(2)), Rat(BigInt(1), BigInt(2)), Rat(BigInt(1), BigInt(3)),
      Rat(BigInt(2), BigInt(3));
  RatMat b(2, 2);
  b << Rat(BigInt(3), BigInt(4)), Rat(BigInt(1), BigInt(4)), Rat(BigInt(1), BigInt(5)),
      Rat(BigInt(4), BigInt(5));

  RatMat prod = a * b;
  oracle::Mat oa = {{a(0, 0), a(0, 1)}, {a(1, 0), a(1, 1)}};
  oracle::Mat ob = {{b(0, 0), b(0, 1)}, {b(1, 0), b(1, 1)}};
  oracle::Mat oprod = oracle::matmul(oa, ob);
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      CHECK(prod(i, j) == oprod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }

  RatVec v(2);
  v << Rat(BigInt(1), BigInt(3)), Rat(BigInt(2), BigInt(3));
  RatVec applied = a.transpose() * v;
  oracle::Vec ov = oracle::weighted_sum({v(0), v(1)}, oa);
  CHECK(applied(0) == ov[0]);
  CHECK(applied(1) == ov[1]);

  CHECK(v.sum() == Rat(1));
  CHECK((v.array() >= Rat(0)).all());
}

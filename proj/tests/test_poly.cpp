#include <map>

#include "doctest.h"

#include "core/bigint.hpp"
#include "core/intpoly.hpp"
#include "core/quadrat.hpp"
#include "test_util.hpp"

using namespace pyrenic;
using pyrenic_test::code_of;

TEST_CASE("big integer helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(7, 8) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(code_of([] { binomial(-1, 0); }) == ErrorCode::invalid_parameter);

  CHECK(isqrt_floor(BigInt(0)) == 0);
  CHECK(isqrt_floor(BigInt(20000)) == 141);
  CHECK(code_of([] { isqrt_floor(BigInt(-1)); }) == ErrorCode::invalid_parameter);

  CHECK(pow10(0) == 1);
  CHECK(pow10(6) == 1000000);
}

TEST_CASE("sqrt2 bracket is tight and correct") {
  auto [lo, hi] = sqrt2_bracket(12);
  CHECK(lo * lo <= 2);
  CHECK(hi * hi > 2);
  CHECK(hi - lo == Rational(1, pow10(12)));
}

TEST_CASE("fixed-point decimal rendering") {
  CHECK(rational_decimal(Rational(1, 8), 3) == "0.125");
  CHECK(rational_decimal(Rational(-5, 4), 2) == "-1.25");
  CHECK(rational_decimal(Rational(2, 3), 4) == "0.6666");  // truncated, not rounded
  CHECK(rational_decimal(Rational(0), 2) == "0.00");
  CHECK(rational_decimal(Rational(1234, 1), 1) == "1234.0");
}

TEST_CASE("quadratic field arithmetic in a + b sqrt 2") {
  QuadRat three_plus{Rational(3), Rational(2)};
  QuadRat three_minus = three_plus.conjugate();
  CHECK(three_plus * three_minus == QuadRat{Rational(1), Rational(0)});
  CHECK((three_plus * three_minus).is_rational());
  CHECK(qr_pow(three_plus, 2) == QuadRat{Rational(17), Rational(12)});
  CHECK(qr_pow(three_plus, 0) == QuadRat{Rational(1), Rational(0)});

  QuadRat one_minus_sqrt2{Rational(1), Rational(-1)};
  CHECK(one_minus_sqrt2.sign() == -1);
  CHECK(QuadRat{Rational(0), Rational(1)}.sign() == 1);
  CHECK(QuadRat{Rational(0), Rational(0)}.sign() == 0);
  // 7/5 < sqrt 2 < 3/2: sign determined by cross terms, not floats.
  CHECK((QuadRat{Rational(-7, 5), Rational(1)}).sign() == 1);
  CHECK((QuadRat{Rational(3, 2), Rational(-1)}).sign() == 1);

  CHECK(three_plus / three_plus == QuadRat{Rational(1), Rational(0)});
  CHECK((QuadRat{Rational(1), Rational(0)} / three_plus) == three_minus);
  CHECK(code_of([&] { three_plus / QuadRat{}; }) == ErrorCode::invalid_parameter);
  CHECK(QuadRat{Rational(4, 2), Rational(0)}.is_integer());
  CHECK_FALSE(QuadRat{Rational(1, 2), Rational(0)}.is_integer());
  CHECK_FALSE(QuadRat{Rational(2), Rational(1)}.is_integer());
}

TEST_CASE("polynomial canonical form and accessors") {
  IntPoly zero;
  CHECK(zero.is_zero());
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(code_of([&] { zero.degree(); }) == ErrorCode::invalid_parameter);
  CHECK(code_of([&] { zero.valuation(); }) == ErrorCode::invalid_parameter);

  IntPoly p{0, 2, 4};  // 4x^2 + 2x
  CHECK(p.degree() == 2);
  CHECK(p.valuation() == 1);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(17) == 0);
  CHECK(IntPoly::monomial(3, 4).degree() == 4);
  CHECK(IntPoly::constant(5).degree() == 0);
}

TEST_CASE("polynomial arithmetic") {
  IntPoly f1{0, 2, 4};
  IntPoly f2 = f1 * f1 - IntPoly::monomial(1, 2);  // 16x^4 + 16x^3 + 3x^2
  CHECK(f2 == IntPoly{0, 0, 3, 16, 16});
  CHECK(f1 + f1 == BigInt(2) * f1);
  CHECK((f1 - f1).is_zero());
  CHECK(f2.eval(1) == 35);
  CHECK(f2.eval(-1) == 3);
  CHECK(f2.derivative() == IntPoly{0, 6, 48, 64});
  CHECK(f2.derivative().eval(1) == 118);
  CHECK(IntPoly::constant(7).derivative().is_zero());
  CHECK_FALSE(f2.to_string().empty());
}

TEST_CASE("spectrum view of a counting polynomial") {
  SpectrumReport s = spectrum_from_poly(IntPoly{0, 0, 3, 16, 16});
  CHECK(s.min_value == 2);
  CHECK(s.max_value == 4);
  CHECK(s.contiguous);
  CHECK(s.histogram == std::map<int, BigInt>{{2, 3}, {3, 16}, {4, 16}});

  SpectrumReport gap = spectrum_from_poly(IntPoly{0, 1, 0, 1});  // x^3 + x
  CHECK(gap.min_value == 1);
  CHECK(gap.max_value == 3);
  CHECK_FALSE(gap.contiguous);

  CHECK(code_of([] { spectrum_from_poly(IntPoly{}); }) == ErrorCode::invalid_parameter);
}

TEST_CASE("histogram to polynomial round trip") {
  std::map<int, BigInt> h{{2, 3}, {3, 16}, {4, 16}};
  CHECK(poly_from_histogram(h) == IntPoly{0, 0, 3, 16, 16});
  CHECK(poly_from_histogram({}).is_zero());
  CHECK(poly_from_histogram(spectrum_from_poly(IntPoly{0, 5, 0, 7}).histogram) ==
        IntPoly{0, 5, 0, 7});
  CHECK(code_of([] { poly_from_histogram({{-1, 2}}); }) == ErrorCode::invalid_parameter);
  CHECK(code_of([] { poly_from_histogram({{1, -2}}); }) == ErrorCode::invalid_parameter);
}

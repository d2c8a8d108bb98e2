#include "core/quadrat.hpp"

#include <sstream>

namespace pyrenic {

bool QuadRat::is_integer() const {
  return b == 0 && boost::multiprecision::denominator(a) == 1;
}

int QuadRat::sign() const {
  int sa = a.sign();
  int sb = b.sign();
  if (sa == 0 && sb == 0) return 0;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  // Mixed signs: compare a^2 against 2 b^2; equality is impossible for b != 0.
  Rational d = a * a - 2 * b * b;
  if (d == 0) fail(ErrorCode::internal_error, "QuadRat: a^2 == 2 b^2 with b != 0");
  return d > 0 ? sa : sb;
}

std::string QuadRat::to_string() const {
  std::ostringstream os;
  os << a.str();
  if (b != 0) os << (b > 0 ? " + " : " - ") << Rational(boost::multiprecision::abs(b)).str() << "*sqrt(2)";
  return os.str();
}

QuadRat operator+(const QuadRat& x, const QuadRat& y) { return {x.a + y.a, x.b + y.b}; }
QuadRat operator-(const QuadRat& x, const QuadRat& y) { return {x.a - y.a, x.b - y.b}; }
QuadRat operator-(const QuadRat& x) { return {-x.a, -x.b}; }

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) {
  Rational norm = y.a * y.a - 2 * y.b * y.b;  // N(y), zero only for y == 0
  if (norm == 0) fail(ErrorCode::invalid_parameter, "QuadRat: division by zero");
  QuadRat num = x * y.conjugate();
  return {num.a / norm, num.b / norm};
}

bool operator==(const QuadRat& x, const QuadRat& y) { return x.a == y.a && x.b == y.b; }

QuadRat qr_pow(const QuadRat& x, unsigned n) {
  QuadRat r{1, 0};
  QuadRat base = x;
  while (n > 0) {
    if (n & 1u) r = r * base;
    base = base * base;
    n >>= 1u;
  }
  return r;
}

}  // namespace pyrenic

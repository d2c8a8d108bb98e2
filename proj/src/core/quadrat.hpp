#pragma once

#include <string>

#include "core/bigint.hpp"

namespace pyrenic {

// Exact element of Q(sqrt(2)): a + b*sqrt(2) with rational a, b.
struct QuadRat {
  Rational a;
  Rational b;

  QuadRat() = default;
  QuadRat(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

  bool is_rational() const { return b == 0; }
  bool is_integer() const;  // rational with denominator 1
  QuadRat conjugate() const { return {a, -b}; }

  // Sign of a + b*sqrt(2), exact: -1, 0, or +1.
  int sign() const;

  std::string to_string() const;
};

QuadRat operator+(const QuadRat& x, const QuadRat& y);
QuadRat operator-(const QuadRat& x, const QuadRat& y);
QuadRat operator-(const QuadRat& x);
QuadRat operator*(const QuadRat& x, const QuadRat& y);
QuadRat operator/(const QuadRat& x, const QuadRat& y);  // errors: division by zero
bool operator==(const QuadRat& x, const QuadRat& y);

QuadRat qr_pow(const QuadRat& x, unsigned n);

}  // namespace pyrenic

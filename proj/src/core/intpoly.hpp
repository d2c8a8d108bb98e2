#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "core/bigint.hpp"

namespace pyrenic {

// Dense integer polynomial; index i holds the coefficient of x^i.
// Canonical form: no trailing zero coefficient. The zero polynomial is the
// empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { trim(); }

  static IntPoly constant(const BigInt& v) { return IntPoly{std::vector<BigInt>{v}}; }
  static IntPoly monomial(const BigInt& coeff, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  // degree/valuation require a nonzero polynomial.
  std::size_t degree() const;
  std::size_t valuation() const;

  const BigInt& coeff(std::size_t i) const;  // 0 beyond the stored range
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPoly derivative() const;
  BigInt eval(const BigInt& x) const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  std::string to_string() const;  // human-readable, for diagnostics

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const BigInt& s, const IntPoly& p);

// Histogram view of a counting polynomial: coefficient of x^v = number of
// objects with statistic v.
struct SpectrumReport {
  std::map<int, BigInt> histogram;  // value -> count, zero counts omitted
  int min_value = 0;                // valuation
  int max_value = 0;                // degree
  bool contiguous = false;          // support is a full integer interval
};

SpectrumReport spectrum_from_poly(const IntPoly& p);  // errors: zero polynomial

// Inverse of the spectrum view. Errors: negative value or count.
IntPoly poly_from_histogram(const std::map<int, BigInt>& histogram);

}  // namespace pyrenic

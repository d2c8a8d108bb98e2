#include "core/intpoly.hpp"

#include <sstream>

namespace pyrenic {

namespace {
const BigInt kZero = 0;
}

IntPoly IntPoly::monomial(const BigInt& coeff, std::size_t degree) {
  if (coeff == 0) return {};
  std::vector<BigInt> c(degree + 1);
  c[degree] = coeff;
  return IntPoly{std::move(c)};
}

std::size_t IntPoly::degree() const {
  if (c_.empty()) fail(ErrorCode::invalid_parameter, "degree of zero polynomial");
  return c_.size() - 1;
}

std::size_t IntPoly::valuation() const {
  if (c_.empty()) fail(ErrorCode::invalid_parameter, "valuation of zero polynomial");
  std::size_t i = 0;
  while (c_[i] == 0) ++i;
  return i;
}

const BigInt& IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * i;
  return IntPoly{std::move(d)};
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (first) {
      if (a < 0) os << "-", a = -a;
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1 || i == 0) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly{std::move(c)};
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly{std::move(c)};
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return IntPoly{std::move(c)};
}

IntPoly operator*(const BigInt& s, const IntPoly& p) {
  std::vector<BigInt> c(p.coeffs());
  for (auto& x : c) x *= s;
  return IntPoly{std::move(c)};
}

IntPoly poly_from_histogram(const std::map<int, BigInt>& histogram) {
  if (histogram.empty()) return {};
  if (histogram.begin()->first < 0)
    fail(ErrorCode::invalid_parameter, "histogram has a negative value");
  std::vector<BigInt> c(static_cast<std::size_t>(histogram.rbegin()->first) + 1);
  for (const auto& [v, n] : histogram) {
    if (n < 0) fail(ErrorCode::invalid_parameter, "histogram has a negative count");
    c[static_cast<std::size_t>(v)] = n;
  }
  return IntPoly{std::move(c)};
}

SpectrumReport spectrum_from_poly(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorCode::invalid_parameter, "spectrum of zero polynomial");
  SpectrumReport r;
  r.min_value = static_cast<int>(p.valuation());
  r.max_value = static_cast<int>(p.degree());
  r.contiguous = true;
  for (int v = r.min_value; v <= r.max_value; ++v) {
    const BigInt& c = p.coeff(static_cast<std::size_t>(v));
    if (c == 0) {
      r.contiguous = false;
    } else {
      r.histogram[v] = c;
    }
  }
  return r;
}

}  // namespace pyrenic

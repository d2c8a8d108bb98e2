#include "core/sequences.hpp"

#include <algorithm>

namespace pyrenic {

namespace {

void require_nonneg(int n) {
  if (n < 0) fail(ErrorCode::invalid_parameter, "sequence index must be nonnegative");
}

// ceil(p/q) for p >= 0, q > 0.
long long ceil_div(long long p, long long q) { return (p + q - 1) / q; }

BigInt pow2(long long e) {
  if (e < 0) fail(ErrorCode::internal_error, "negative power of two in closed form");
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

IntPoly iterate_poly(int n, const IntPoly& seed1, const IntPoly& step) {
  IntPoly x2 = IntPoly::monomial(1, 2);
  IntPoly prev = IntPoly::constant(1);
  if (n == 0) return prev;
  IntPoly cur = seed1;
  for (int k = 2; k <= n; ++k) {
    IntPoly next = step * cur - x2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Extracts the integer a QuadRat closed form must equal; any surviving
// sqrt(2)-component or non-integer denominator is an internal failure.
BigInt integral_value(const QuadRat& v, const char* what) {
  if (!v.is_integer())
    fail(ErrorCode::internal_error,
         std::string(what) + ": closed form left irrational residue " + v.to_string());
  return boost::multiprecision::numerator(v.a);
}

const QuadRat kLamMinus{3, -2};  // 3 - 2 sqrt 2
const QuadRat kLamPlus{3, 2};    // 3 + 2 sqrt 2

BigInt phi_recurrence(int n) {
  BigInt prev = 1, cur = 6;
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    BigInt next = 6 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt phi_closed(int n) {
  QuadRat c1 = QuadRat{17, -12} / QuadRat{16, -12};
  QuadRat c2 = QuadRat{17, 12} / QuadRat{16, 12};
  QuadRat v = c1 * qr_pow(kLamMinus, static_cast<unsigned>(n)) +
              c2 * qr_pow(kLamPlus, static_cast<unsigned>(n));
  return integral_value(v, "phi");
}

BigInt idf_recurrence(int n) {
  BigInt ip = 0, ic = 10;   // IDF_0, IDF_1
  BigInt pp = 1, pc = 6;    // Phi_0, Phi_1
  if (n == 0) return ip;
  for (int k = 2; k <= n; ++k) {
    BigInt in = 6 * ic - ip + 10 * pc - 2 * pp;
    BigInt pn = 6 * pc - pp;
    ip = std::move(ic);
    ic = std::move(in);
    pp = std::move(pc);
    pc = std::move(pn);
  }
  return ic;
}

BigInt idf_closed(int n) {
  QuadRat lm = qr_pow(kLamMinus, static_cast<unsigned>(n));
  QuadRat lp = qr_pow(kLamPlus, static_cast<unsigned>(n));
  QuadRat v = (QuadRat{0, Rational(1, 32)} + QuadRat{Rational(7 * n, 8), Rational(-5 * n, 8)}) * lm +
              (QuadRat{0, Rational(-1, 32)} + QuadRat{Rational(7 * n, 8), Rational(5 * n, 8)}) * lp;
  return integral_value(v, "idf");
}

BigInt af_recurrence(int n) {
  BigInt ap = 0, ac = 12;   // AF_0, AF_1
  BigInt pp = 1, pc = 6;
  if (n == 0) return ap;
  for (int k = 2; k <= n; ++k) {
    BigInt an = 6 * ac - ap + 12 * pc - 2 * pp;
    BigInt pn = 6 * pc - pp;
    ap = std::move(ac);
    ac = std::move(an);
    pp = std::move(pc);
    pc = std::move(pn);
  }
  return ac;
}

BigInt af_closed(int n) {
  QuadRat lm = qr_pow(kLamMinus, static_cast<unsigned>(n));
  QuadRat lp = qr_pow(kLamPlus, static_cast<unsigned>(n));
  QuadRat v =
      (QuadRat{0, Rational(3, 64)} + QuadRat{Rational(17 * n, 16), Rational(-12 * n, 16)}) * lm +
      (QuadRat{0, Rational(-3, 64)} + QuadRat{Rational(17 * n, 16), Rational(12 * n, 16)}) * lp;
  return integral_value(v, "af_sum");
}

}  // namespace

IntPoly forcing_poly_recurrence(int n) {
  require_nonneg(n);
  return iterate_poly(n, IntPoly{0, 2, 4}, IntPoly{0, 2, 4});
}

IntPoly forcing_poly_closed(int n) {
  require_nonneg(n);
  std::vector<BigInt> c(static_cast<std::size_t>(2 * n) + 1);
  for (long long j = 0; j <= n; ++j) {
    BigInt sum = 0;
    for (long long i = ceil_div(j + n, 2); i <= n; ++i) {
      BigInt term = pow2(2 * i + j - n) * binomial(i, n - i) * binomial(2 * i - n, j);
      if ((n - i) % 2 != 0) term = -term;
      sum += term;
    }
    c[static_cast<std::size_t>(n + j)] = sum;
  }
  return IntPoly{std::move(c)};
}

IntPoly antiforcing_poly_recurrence(int n) {
  require_nonneg(n);
  return iterate_poly(n, IntPoly{0, 2, 2, 2}, IntPoly{0, 2, 2, 2});
}

IntPoly antiforcing_poly_closed(int n) {
  require_nonneg(n);
  std::vector<BigInt> c(static_cast<std::size_t>(3 * n) + 1);
  for (long long l = 0; l <= 2 * n; ++l) {
    BigInt sum = 0;
    for (long long i = ceil_div(l + 2 * n, 4); i <= n; ++i) {
      BigInt inner = 0;
      for (long long j = ceil_div(l, 2); j <= l; ++j)
        inner += binomial(2 * i - n, j) * binomial(j, l - j);
      BigInt term = pow2(2 * i - n) * binomial(i, 2 * i - n) * inner;
      if ((n - i) % 2 != 0) term = -term;
      sum += term;
    }
    c[static_cast<std::size_t>(n + l)] = sum;
  }
  return IntPoly{std::move(c)};
}

BigInt phi(int n, PhiRoute route) {
  require_nonneg(n);
  switch (route) {
    case PhiRoute::recurrence:
      return phi_recurrence(n);
    case PhiRoute::closed_form:
      return phi_closed(n);
    case PhiRoute::poly_eval:
      return forcing_poly_recurrence(n).eval(1);
  }
  fail(ErrorCode::internal_error, "phi: bad route");
}

BigInt idf(int n, SumRoute route) {
  require_nonneg(n);
  switch (route) {
    case SumRoute::poly_derivative:
      return forcing_poly_recurrence(n).derivative().eval(1);
    case SumRoute::recurrence:
      return idf_recurrence(n);
    case SumRoute::closed_form:
      return idf_closed(n);
  }
  fail(ErrorCode::internal_error, "idf: bad route");
}

BigInt af_sum(int n, SumRoute route) {
  require_nonneg(n);
  switch (route) {
    case SumRoute::poly_derivative:
      return antiforcing_poly_recurrence(n).derivative().eval(1);
    case SumRoute::recurrence:
      return af_recurrence(n);
    case SumRoute::closed_form:
      return af_closed(n);
  }
  fail(ErrorCode::internal_error, "af_sum: bad route");
}

Rational asymptotic_ratio(RatioKind kind, int n) {
  if (n < 1) fail(ErrorCode::invalid_parameter, "asymptotic_ratio: n must be >= 1");
  BigInt num = kind == RatioKind::idf ? idf(n, SumRoute::recurrence) : af_sum(n, SumRoute::recurrence);
  return Rational(num, n * phi(n, PhiRoute::recurrence));
}

SequenceTable sequence_table(const std::string& name_in, const std::string& route, int max_n) {
  require_nonneg(max_n);
  const std::string name = name_in == "af_sum" ? "af" : name_in;
  SequenceTable t{name, route, {}};
  t.values.reserve(static_cast<std::size_t>(max_n) + 1);
  if (name == "phi") {
    PhiRoute r = parse_phi_route(route);
    for (int n = 0; n <= max_n; ++n) t.values.push_back(phi(n, r));
  } else if (name == "idf") {
    SumRoute r = parse_sum_route(route);
    for (int n = 0; n <= max_n; ++n) t.values.push_back(idf(n, r));
  } else if (name == "af") {
    SumRoute r = parse_sum_route(route);
    for (int n = 0; n <= max_n; ++n) t.values.push_back(af_sum(n, r));
  } else {
    fail(ErrorCode::invalid_parameter, "unknown sequence name: " + name);
  }
  return t;
}

PhiRoute parse_phi_route(const std::string& s) {
  if (s == "recurrence") return PhiRoute::recurrence;
  if (s == "closed_form") return PhiRoute::closed_form;
  if (s == "poly_eval") return PhiRoute::poly_eval;
  fail(ErrorCode::invalid_parameter, "unknown phi route: " + s);
}

SumRoute parse_sum_route(const std::string& s) {
  if (s == "poly_derivative") return SumRoute::poly_derivative;
  if (s == "recurrence") return SumRoute::recurrence;
  if (s == "closed_form") return SumRoute::closed_form;
  fail(ErrorCode::invalid_parameter, "unknown sum route: " + s);
}

std::vector<std::string> routes_for(const std::string& name) {
  if (name == "phi") return {"recurrence", "closed_form", "poly_eval"};
  if (name == "idf" || name == "af" || name == "af_sum")
    return {"poly_derivative", "recurrence", "closed_form"};
  fail(ErrorCode::invalid_parameter, "unknown sequence name: " + name);
}

}  // namespace pyrenic

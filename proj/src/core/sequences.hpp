#pragma once

#include <string>
#include <vector>

#include "core/intpoly.hpp"
#include "core/quadrat.hpp"

namespace pyrenic {

// Forcing polynomial F(H_n,x) of the length-n pyrene chain.
//   recurrence: F_n = (4x^2+2x) F_{n-1} - x^2 F_{n-2}, F_0 = 1, F_1 = 4x^2+2x
//   closed:     x^n sum_{j=0..n} sum_{i=ceil((j+n)/2)..n}
//                 (-1)^{n-i} 2^{2i+j-n} C(i,n-i) C(2i-n,j) x^j
IntPoly forcing_poly_recurrence(int n);
IntPoly forcing_poly_closed(int n);

// Anti-forcing polynomial Af(H_n,x).
//   recurrence: Af_n = (2x^3+2x^2+2x) Af_{n-1} - x^2 Af_{n-2}, Af_0 = 1,
//               Af_1 = 2x^3+2x^2+2x
//   closed:     x^n sum_{l=0..2n} sum_{i=ceil((l+2n)/4)..n} sum_{j=ceil(l/2)..l}
//                 (-1)^{n-i} 2^{2i-n} C(i,2i-n) C(2i-n,j) C(j,l-j) x^l
IntPoly antiforcing_poly_recurrence(int n);
IntPoly antiforcing_poly_closed(int n);

enum class PhiRoute { recurrence, closed_form, poly_eval };
enum class SumRoute { poly_derivative, recurrence, closed_form };
enum class RatioKind { idf, af_sum };

// Perfect-matching count Phi_n = 6 Phi_{n-1} - Phi_{n-2}, Phi_0 = 1, Phi_1 = 6;
// closed form (17-12s)/(16-12s)(3-2s)^n + (17+12s)/(16+12s)(3+2s)^n, s = sqrt 2.
// closed_form errors with internal-consistency if the irrational part survives.
BigInt phi(int n, PhiRoute route);

// Degree of freedom IDF_n = F'(H_n,x)|_{x=1}; mixed recurrence
// IDF_n = 6 IDF_{n-1} - IDF_{n-2} + 10 Phi_{n-1} - 2 Phi_{n-2}, IDF_0 = 0, IDF_1 = 10.
BigInt idf(int n, SumRoute route);

// Anti-forcing sum AF_n = Af'(H_n,x)|_{x=1}; mixed recurrence
// AF_n = 6 AF_{n-1} - AF_{n-2} + 12 Phi_{n-1} - 2 Phi_{n-2}, AF_0 = 0, AF_1 = 12.
BigInt af_sum(int n, SumRoute route);

// IDF_n/(n Phi_n) or AF_n/(n Phi_n) as an exact rational; the limits are
// 1 + sqrt(2)/2 and 1 + 3 sqrt(2)/4 with a Theta(1/n) gap (first-order
// coefficients (2 sqrt 2 - 3)/4 and (6 sqrt 2 - 9)/8).
Rational asymptotic_ratio(RatioKind kind, int n);  // pre: n >= 1

struct SequenceTable {
  std::string name;   // phi | idf | af
  std::string route;
  std::vector<BigInt> values;  // index 0..max_n
};
SequenceTable sequence_table(const std::string& name, const std::string& route, int max_n);

// Route token helpers shared by CLI and C API; error on unknown tokens.
PhiRoute parse_phi_route(const std::string& s);
SumRoute parse_sum_route(const std::string& s);
std::vector<std::string> routes_for(const std::string& name);

}  // namespace pyrenic

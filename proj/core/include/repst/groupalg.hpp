#pragma once

// Hilbert series of the associated graded of the interpolated group algebra
// C[S_t]: h(t, x) = x^t Gamma(1/x + t) / Gamma(1/x), read as an asymptotic
// series in x. At t = n it is prod_{k<n} (1 + k x).

#include <map>
#include <string>

#include "repst/exactalg.hpp"

namespace repst {

using HilbertCoefficientTable = std::map<int, Polynomial>;

/// e_m(1, ..., n-1), the x^m coefficient of prod_{k<n}(1 + k x).
Integer elementary_consecutive(int m, int n);

/// [x^m] h(t, x) by Lagrange interpolation through n = 0..2m.
Polynomial stirling_hilbert_coeff(int m);

/// [x^m] h(t, x) from the log-Gamma asymptotic expansion:
///   log h = sum_{k>=1} (-1)^{k+1} (B_{k+1}(t) - B_{k+1}) x^k / (k (k+1)).
Polynomial gamma_ratio_coeff(int m);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli_number(int n);
Polynomial bernoulli_polynomial(int n);

/// Stirling-route coefficients for m = 0..max_m.
HilbertCoefficientTable hilbert_coefficient_table(int max_m);

/// Why the total dimension of C[S_t] is not read off by setting x = 1.
std::string order_remark_note();

}  // namespace repst

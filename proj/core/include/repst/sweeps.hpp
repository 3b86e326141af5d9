#pragma once

// Batch verification of the interpolation formulas against the classical
// oracle and against each other. Each suite fans its independent checks out
// over worker threads and aggregates failures in a deterministic order.

#include <string>
#include <vector>

#include "repst/partitions.hpp"
#include "repst/serialize.hpp"

namespace repst {

struct CheckFailure {
  std::string check;
  Json detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<CheckFailure> failures;

  bool pass() const { return failures.empty(); }
  void merge(SuiteReport other);
  Json to_json() const;
};

/// dim_x(lambda)(n) == hook_dim(pad(lambda, n)) for |lambda| <= max_size,
/// |lambda| + lambda_1 <= n <= max_n.
SuiteReport dimension_oracle_sweep(int max_size, int max_n);

/// For |lambda| <= max_size, m(rho) <= max_m, max(|lambda| + lambda_1, m) <= n <= max_n:
/// omega_eigenvalue and frob_coefficient against the classical eigenvalue and
/// Murnaghan-Nakayama character of pad(lambda, n), plus jm_eigenvalue (under
/// `convention`) against the transposition class eigenvalue.
SuiteReport central_oracle_sweep(int max_size, int max_m, int max_n,
                                 ContentConvention convention = ContentConvention::ColMinusRow);

/// omega_eigenvalue((1), lambda) == jm_eigenvalue(lambda) as polynomials.
SuiteReport jm_agreement_sweep(int max_size);

/// frob_coefficient with len(lambda) and len(lambda)+1 variables agree.
SuiteReport variable_stability_sweep(int max_size, int max_m);

/// (t-1) dim_x(lambda) == sum_mu c_mu dim_x(mu), and symmetry of pieri_h0.
SuiteReport pieri_sweep(int max_size);

/// Integer-valuedness of dim_x (|lambda| <= dim_size), class_size_poly
/// (m <= max_m) and omega_eigenvalue (|lambda| <= omega_size, m <= max_m).
SuiteReport integer_valued_sweep(int dim_size, int omega_size, int max_m);

/// Interpolated gr C[S_t] coefficients: values at n <= max_n, Gamma-route
/// agreement for m <= max_m, row sums n! for n <= row_sum_n.
SuiteReport stirling_sweep(int max_m, int max_n, int row_sum_n);

/// bound_sweep for n <= max_n, amgm_check for n <= min(max_n, 12), and
/// lemma_scan(1, 1, n) empty for 10 <= n <= min(max_n, 15).
SuiteReport bounds_sweep(int max_n);

/// Tensor power Hilbert series, graded decomposition (d <= max_d, degree),
/// degree-1 filtration (v <= 5), Verma candidates and interlacing bookkeeping.
SuiteReport graded_sweep(int max_d, int degree);

}  // namespace repst

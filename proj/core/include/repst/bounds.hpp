#pragma once

// Lower bound dim pi_mu >= binom(n, d) (d/n)^d, d = max(first row, first
// column), and an exhaustive scan for the companion statement that small
// representations have a long first row or column.

#include <optional>
#include <vector>

#include "repst/exactalg.hpp"
#include "repst/partitions.hpp"

namespace repst {

/// max(mu_1, length of mu).
int long_side(const Partition& mu);

/// binom(n, d) * (d / n)^d. Throws SizeMismatch unless |mu| = n >= 1.
Rational dim_lower_bound(int n, const Partition& mu);

struct AmgmReport {
  bool pass = false;
  Rational product;     // prod_i (1 + (c_i - 1)/i)
  Rational columns;     // prod_i c_i
  Rational mean_power;  // (n/d)^d
  bool hook_identity = false;  // dim mu = dim mu' binom(n,d) / product
};

/// First-row case, c_i = length of column d - i + 1, d = mu_1. Checks
/// product <= columns <= mean_power exactly, together with the hook-length
/// factorization through mu' = mu minus its first row.
AmgmReport amgm_check(const Partition& mu);

struct BoundSweepReport {
  int n = 0;
  bool pass = false;
  std::size_t partitions = 0;
  Rational min_slack;  // min over mu of hook_dim - bound
  Partition argmin;
  std::vector<Partition> violations;
};

BoundSweepReport bound_sweep(int n);

/// Partitions of n with dim <= c * n^k whose first row and first column are
/// both shorter than n - k.
std::vector<Partition> lemma_scan(const Rational& c, int k, int n);

/// Smallest N such that lemma_scan(c, k, n) is empty for every N <= n <= n_max;
/// nullopt when even n_max has violations.
std::optional<int> find_threshold(const Rational& c, int k, int n_max);

}  // namespace repst

#pragma once

// Interpolation of S_n data to complex rank t: dimensions of the objects
// X_lambda, tensoring with h_0 (Pieri rule) and eigenvalues of central
// elements, all as exact polynomials in t.

#include <map>

#include "repst/exactalg.hpp"
#include "repst/partitions.hpp"
#include "repst/snoracle.hpp"

namespace repst {

/// Direct-sum decomposition: distinct partitions with positive multiplicities.
class Decomposition {
 public:
  Decomposition() = default;

  /// Adds `mult` copies of X_mu. Throws InvalidArgument on mult <= 0.
  void add(const Partition& mu, int mult = 1);
  int multiplicity(const Partition& mu) const;
  const std::map<Partition, int>& terms() const { return terms_; }
  std::size_t distinct() const { return terms_.size(); }
  int total() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::map<Partition, int> terms_;
};

/// dim X_lambda = prod_{k in B_lambda}(t - k) / prod hooks. Computed a second
/// time as f^lambda * prod(t - k) / N!, with f^lambda counted from standard
/// tableaux; throws InternalMismatch if the two disagree.
Polynomial dim_x(const Partition& lambda);

/// h_0 (x) X_lambda: every diagram obtained by adding, deleting or moving a
/// corner cell once, plus lambda with multiplicity equal to its corner count.
Decomposition pieri_h0(const Partition& lambda);

/// Eigenvalue of the interpolated Jucys-Murphy element on X_lambda:
/// ct(lambda) - |lambda| + (t - |lambda|)(t - |lambda| - 1)/2.
Polynomial jm_eigenvalue(const Partition& lambda,
                         ContentConvention convention = ContentConvention::ColMinusRow);

/// prod_{j<m}(t - j) / prod m_i! (i+1)^{m_i}.
Polynomial class_size_poly(const CycleType& rho);

/// Coefficient of x^lambda in
///   (1 + p_1)^{t-m} prod_i (1 + p_{i+1})^{m_i} prod_i (1 - x_i) prod_{i>j} (1 - x_i/x_j),
/// evaluated in len(lambda) + extra_variables variables after substituting
/// x_i = u_1 ... u_i so that every factor is an honest power series in u.
Polynomial frob_coefficient(const Partition& lambda, const CycleType& rho, int extra_variables = 0);

/// Eigenvalue of the interpolated class sum Omega_rho on X_lambda,
/// class_size_poly(rho) * frob_coefficient(lambda, rho) / dim_x(lambda).
/// The division is exact; NonDivisible means an identity was violated.
Polynomial omega_eigenvalue(const CycleType& rho, const Partition& lambda);

/// Binomial-basis form of p. Throws NotIntegerValued naming the first
/// non-integral coefficient.
BinomialPolynomial integer_valued_certificate(const Polynomial& p);

}  // namespace repst

#pragma once

// Classical S_n reference computations. Nothing here depends on the
// interpolation modules, so agreement with them is a genuine cross-check.

#include <string>
#include <string_view>
#include <vector>

#include "repst/exactalg.hpp"
#include "repst/partitions.hpp"

namespace repst {

/// counts[i] = number of cycles of length i + 2 (fixed points are implicit).
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> counts);

  const std::vector<int>& counts() const { return counts_; }
  /// Number of cycles of the given length (>= 2).
  int cycles_of_length(int length) const;
  /// m = sum counts[i] * (i + 2).
  int support() const { return support_; }
  /// prod m_i! (i+1)^{m_i}, the centralizer order on the support.
  Integer centralizer_on_support() const;
  /// Cycle lengths >= 2 in decreasing order.
  std::vector<int> cycle_lengths() const;

  /// "m1,m2,..."; empty string for the identity class.
  std::string to_string() const;
  static CycleType parse(std::string_view text);
  /// The cycle type with the given non-trivial cycle lengths.
  static CycleType from_cycle_lengths(const std::vector<int>& lengths);

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) { return a.counts_ <=> b.counts_; }

 private:
  std::vector<int> counts_;
  int support_ = 0;
};

/// All cycle types with support at most max_support.
std::vector<CycleType> cycle_types_up_to(int max_support);
/// Every conjugacy class of S_n (cycle types with support <= n).
std::vector<CycleType> conjugacy_classes(int n);

/// |mu|! / prod of hooks.
Integer hook_dim(const Partition& mu);

/// chi_mu at a permutation whose non-trivial cycles are rho, padded by
/// |mu| - m fixed points. Throws SizeMismatch when m > |mu|.
Integer mn_character(const Partition& mu, const CycleType& rho);

/// Size of the class of rho (plus fixed points) in S_n.
Integer class_size(int n, const CycleType& rho);

/// |C_rho| * chi_mu(g) / dim pi_mu, the scalar by which the class sum acts.
Rational central_eigenvalue_classical(int n, const CycleType& rho, const Partition& mu);

}  // namespace repst

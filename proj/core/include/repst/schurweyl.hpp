#pragma once

// Complex tensor powers V^{(x) t} of a unital vector space V = C1 (+) Vbar:
// Hilbert series, the graded decomposition through the objects X_lambda,
// and the combinatorial shadows of the parabolic Verma module analysis.

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "repst/exactalg.hpp"
#include "repst/partitions.hpp"

namespace repst {

/// Hilbert series h(x) of a nonnegatively graded unital space; h(0) = 1.
class UnitalHilbert {
 public:
  /// Throws BadConstantTerm unless coeffs[0] == 1, InvalidArgument on
  /// negative coefficients.
  explicit UnitalHilbert(std::vector<Integer> coeffs);
  /// 1 + d*x: Vbar of dimension d concentrated in degree 1.
  static UnitalHilbert ungraded(int bar_dim);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer total_dimension() const;

 private:
  std::vector<Integer> coeffs_;
};

/// h(x)^t truncated at degree `degree`, coefficients polynomial in t.
TruncatedSeries tensor_power_hilbert(const UnitalHilbert& h, int degree);

/// Dimension of the Schur functor S^lambda applied to a d-dimensional space:
/// prod over cells of (d + content) / hook. Zero iff len(lambda) > d.
Integer schur_dim_principal(const Partition& lambda, int d);

struct GradedDecompositionReport {
  int d = 0;
  int degree = 0;
  bool pass = false;
  std::optional<int> first_failure;  // smallest failing degree
};

/// Compares, as polynomials in t and degree by degree up to `degree`,
///   [x^k] (1 + d x)^t   with   [x^k] (1 - x)^{-d} sum_lambda dim S^lambda(C^d) x^{|lambda|} dim X_lambda.
GradedDecompositionReport graded_decomposition_check(int d, int degree);

/// dim F_1 V^{(x) t} = v + (v - 1)(t - 1) for v = dim V. Throws
/// InternalMismatch if it differs from the degree <= 1 part 1 + t(v - 1).
Polynomial filtration_degree1_dim(int v);

struct VermaWeightSpec {
  Partition lambda;
  int dim_v;  // N = dim V; requires len(lambda) <= N - 1
};

struct ReducibilityCandidate {
  int t;
  int i;  // 1-based position in lambda
  int m;  // positive multiple of the root
  friend auto operator<=>(const ReducibilityCandidate&, const ReducibilityCandidate&) = default;
};

/// Triples (t, i, m) with 1 <= i <= N-1, m >= 1, lambda_{i-1} >= lambda_i + m
/// (no constraint for i = 1), t = |lambda| + lambda_i + m - i and
/// 0 <= t <= t_max. Reducibility of M(t - |lambda|, lambda) forces t into
/// this set; the converse is not claimed.
std::set<ReducibilityCandidate> verma_reducibility_candidates(const VermaWeightSpec& spec, int t_max);

/// Just the t values of the candidate set.
std::set<int> verma_candidate_ranks(const VermaWeightSpec& spec, int t_max);

/// Marker for a rank known only to be outside the integers.
struct NonIntegerRank {};
using Rank = std::variant<Rational, NonIntegerRank>;

/// True when irreducibility is guaranteed: t is not a nonnegative integer,
/// or it is one that is not a reducibility candidate.
bool is_irreducible_guaranteed(const Rank& t, const VermaWeightSpec& spec);

/// All mu with at most N-1 parts, |mu| <= size_bound and
/// mu_i >= lambda_i >= mu_{i+1} for i >= 1.
std::vector<Partition> interlace_branch(const Partition& lambda, int dim_v, int size_bound);

/// Dimension bookkeeping for interlace_branch: returns
/// {sum_mu dim S^mu(C^{N-1}), sum_{j <= bound - |lambda|} dim S^j(C^{N-1}) * dim S^lambda(C^{N-1})}.
std::pair<Integer, Integer> branching_dimension_check(const Partition& lambda, int dim_v, int size_bound);

}  // namespace repst

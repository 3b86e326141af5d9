#include "repst/schurweyl.hpp"

#include <algorithm>

#include "repst/deligne.hpp"
#include "repst/limits.hpp"

namespace repst {

UnitalHilbert::UnitalHilbert(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_[0] != 1) throw Error(ErrorKind::BadConstantTerm, "Hilbert series must start with 1");
  for (const auto& c : coeffs_) {
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "Hilbert series coefficients must be nonnegative");
  }
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

UnitalHilbert UnitalHilbert::ungraded(int bar_dim) {
  if (bar_dim < 0) throw Error(ErrorKind::InvalidArgument, "negative dimension");
  return UnitalHilbert({1, bar_dim});
}

Integer UnitalHilbert::total_dimension() const {
  Integer sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

TruncatedSeries tensor_power_hilbert(const UnitalHilbert& h, int degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  if (degree > limits().series_degree) throw Error(ErrorKind::LimitExceeded, "degree bound exceeds the series cap");
  TruncatedSeries series({degree});
  for (std::size_t k = 0; k < h.coeffs().size(); ++k) {
    series.add_term({static_cast<int>(k)}, Polynomial(h.coeffs()[k]));
  }
  return series_exp_log_pow(series, SeriesMode::PowT, Polynomial::t());
}

Integer schur_dim_principal(const Partition& lambda, int d) {
  if (static_cast<int>(lambda.length()) > d) return 0;
  Rational value = 1;
  for (const auto& [cell, hook] : hook_lengths(lambda)) {
    value *= make_rational(d + cell.col - cell.row, hook);
  }
  return value.get_num();
}

GradedDecompositionReport graded_decomposition_check(int d, int degree) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be positive");
  GradedDecompositionReport report{d, degree, true, std::nullopt};
  const TruncatedSeries lhs = tensor_power_hilbert(UnitalHilbert::ungraded(d), degree);

  // rhs_by_size[s] = sum_{|lambda| = s} dim S^lambda(C^d) * dim X_lambda
  std::vector<Polynomial> rhs_by_size;
  for (int s = 0; s <= degree; ++s) {
    Polynomial acc;
    for (const Partition& lambda : enumerate_partitions(s)) {
      const Integer schur = schur_dim_principal(lambda, d);
      if (schur != 0) acc += dim_x(lambda) * Polynomial(schur);
    }
    rhs_by_size.push_back(std::move(acc));
  }
  for (int k = 0; k <= degree; ++k) {
    Polynomial rhs;
    // [x^j] (1 - x)^{-d} = binom(d + j - 1, j)
    for (int j = 0; j <= k; ++j) rhs += rhs_by_size[static_cast<std::size_t>(k - j)] * Polynomial(binomial(d + j - 1, j));
    if (!(lhs.coefficient({k}) == rhs)) {
      report.pass = false;
      report.first_failure = k;
      break;
    }
  }
  return report;
}

Polynomial filtration_degree1_dim(int v) {
  if (v < 1) throw Error(ErrorKind::InvalidArgument, "dim V must be positive");
  const Polynomial t = Polynomial::t();
  const Polynomial vv(static_cast<long>(v));
  const Polynomial via_quotient = vv + (vv - Polynomial(1)) * (t - Polynomial(1));
  const Polynomial via_series = Polynomial(1) + t * (vv - Polynomial(1));
  if (!(via_quotient == via_series)) {
    throw Error(ErrorKind::InternalMismatch, "degree-1 filtration dimension mismatch at v=" + std::to_string(v));
  }
  return via_quotient;
}

namespace {

void check_spec(const VermaWeightSpec& spec) {
  if (spec.dim_v < 1 || static_cast<int>(spec.lambda.length()) > spec.dim_v - 1) {
    throw Error(ErrorKind::InvalidArgument, "need len(lambda) <= N - 1");
  }
}

}  // namespace

std::set<ReducibilityCandidate> verma_reducibility_candidates(const VermaWeightSpec& spec, int t_max) {
  check_spec(spec);
  std::set<ReducibilityCandidate> out;
  const Partition& lambda = spec.lambda;
  for (int i = 1; i <= spec.dim_v - 1; ++i) {
    const int part = lambda.row(static_cast<std::size_t>(i));
    const int base = lambda.size() + part - i;  // t = base + m
    // m <= lambda_{i-1} - lambda_i, unbounded for i = 1 (then t <= t_max caps it).
    const int m_max = i == 1 ? t_max - base : lambda.row(static_cast<std::size_t>(i - 1)) - part;
    for (int m = 1; m <= m_max; ++m) {
      const int t = base + m;
      if (t > t_max) break;
      if (t >= 0) out.insert({t, i, m});
    }
  }
  return out;
}

std::set<int> verma_candidate_ranks(const VermaWeightSpec& spec, int t_max) {
  std::set<int> ranks;
  for (const auto& c : verma_reducibility_candidates(spec, t_max)) ranks.insert(c.t);
  return ranks;
}

bool is_irreducible_guaranteed(const Rank& t, const VermaWeightSpec& spec) {
  check_spec(spec);
  const auto* value = std::get_if<Rational>(&t);
  if (value == nullptr || !is_integer(*value) || *value < 0) return true;
  // Solve t = |lambda| + lambda_i + m - i for m and test the constraints directly.
  const Integer rank = value->get_num();
  const Partition& lambda = spec.lambda;
  for (int i = 1; i <= spec.dim_v - 1; ++i) {
    const int part = lambda.row(static_cast<std::size_t>(i));
    const Integer m = rank - lambda.size() - part + i;
    if (m < 1) continue;
    if (i == 1 || m <= lambda.row(static_cast<std::size_t>(i - 1)) - part) return false;
  }
  return true;
}

namespace {

// mu_p ranges over [lambda_p, lambda_{p-1}] (no upper bound for p = 1), which
// makes mu weakly decreasing on its own. `slack` is what is left of the size budget.
void interlace(const Partition& lambda, int pos, int max_rows, int slack, std::vector<int>& rows,
               std::vector<Partition>& out) {
  if (pos > max_rows) {
    std::vector<int> parts;
    for (int r : rows) {
      if (r > 0) parts.push_back(r);
    }
    out.emplace_back(std::move(parts));
    return;
  }
  const int lo = lambda.row(static_cast<std::size_t>(pos));
  const int hi = pos == 1 ? lo + slack : std::min(lambda.row(static_cast<std::size_t>(pos - 1)), lo + slack);
  for (int v = lo; v <= hi; ++v) {
    rows.push_back(v);
    interlace(lambda, pos + 1, max_rows, slack - (v - lo), rows, out);
    rows.pop_back();
  }
}

}  // namespace

std::vector<Partition> interlace_branch(const Partition& lambda, int dim_v, int size_bound) {
  check_spec({lambda, dim_v});
  std::vector<Partition> out;
  if (size_bound < lambda.size()) return out;
  std::vector<int> rows;
  interlace(lambda, 1, dim_v - 1, size_bound - lambda.size(), rows, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Integer, Integer> branching_dimension_check(const Partition& lambda, int dim_v, int size_bound) {
  const int u = dim_v - 1;
  Integer branched = 0;
  for (const Partition& mu : interlace_branch(lambda, dim_v, size_bound)) branched += schur_dim_principal(mu, u);
  Integer direct = 0;
  const Integer schur_lambda = schur_dim_principal(lambda, u);
  for (int j = 0; j <= size_bound - lambda.size(); ++j) {
    direct += schur_dim_principal(j == 0 ? Partition() : Partition({j}), u) * schur_lambda;
  }
  return {branched, direct};
}

}  // namespace repst

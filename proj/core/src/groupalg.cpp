#include "repst/groupalg.hpp"

#include <mutex>
#include <vector>

#include "repst/limits.hpp"

namespace repst {

Integer elementary_consecutive(int m, int n) {
  if (m < 0) return 0;
  // coefficients of prod_{k=1}^{n-1} (1 + k x), truncated at x^m
  std::vector<Integer> e(static_cast<std::size_t>(m) + 1, 0);
  e[0] = 1;
  for (int k = 1; k < n; ++k) {
    for (int j = m; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * k;
  }
  return e[static_cast<std::size_t>(m)];
}

namespace {

void check_degree(int m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  if (m > limits().stirling_m) throw Error(ErrorKind::LimitExceeded, "degree exceeds the Stirling table cap");
}

}  // namespace

Polynomial stirling_hilbert_coeff(int m) {
  check_degree(m);
  std::vector<std::pair<Rational, Rational>> nodes;
  for (int n = 0; n <= 2 * m; ++n) nodes.emplace_back(n, Rational(elementary_consecutive(m, n)));
  return Polynomial::interpolate(nodes);
}

Rational bernoulli_number(int n) {
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    const auto k = static_cast<long>(cache.size());
    // sum_{j=0}^{k} binom(k+1, j) B_j = 0
    Rational acc = 0;
    for (long j = 0; j < k; ++j) acc += Rational(binomial(k + 1, j)) * cache[static_cast<std::size_t>(j)];
    cache.push_back(-acc / Rational(k + 1));
  }
  return cache[static_cast<std::size_t>(n)];
}

Polynomial bernoulli_polynomial(int n) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) coeffs[static_cast<std::size_t>(n - j)] = Rational(binomial(n, j)) * bernoulli_number(j);
  return Polynomial(std::move(coeffs));
}

Polynomial gamma_ratio_coeff(int m) {
  check_degree(m);
  if (m == 0) return 1;
  TruncatedSeries log_h({m});
  for (int k = 1; k <= m; ++k) {
    Polynomial c = bernoulli_polynomial(k + 1) - Polynomial(bernoulli_number(k + 1));
    c *= Rational(k % 2 == 1 ? 1 : -1, k * (k + 1));
    log_h.add_term({k}, c);
  }
  return series_exp_log_pow(log_h, SeriesMode::Exp).coefficient({m});
}

HilbertCoefficientTable hilbert_coefficient_table(int max_m) {
  HilbertCoefficientTable table;
  for (int m = 0; m <= max_m; ++m) table.emplace(m, stirling_hilbert_coeff(m));
  return table;
}

std::string order_remark_note() {
  return "The 'order of S_t' one might hope to read off by putting x = 1 in h(t, x) "
         "would be Gamma(1 + t), but h(t, x) is only an asymptotic series in x that "
         "diverges for every x != 0, so the substitution is formal and no numeric "
         "value is computed.";
}

}  // namespace repst

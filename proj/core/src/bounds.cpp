#include "repst/bounds.hpp"

#include "repst/limits.hpp"
#include "repst/snoracle.hpp"

namespace repst {

int long_side(const Partition& mu) { return std::max(mu.first_row(), static_cast<int>(mu.length())); }

Rational dim_lower_bound(int n, const Partition& mu) {
  if (n < 1 || mu.size() != n) throw Error(ErrorKind::SizeMismatch, "need mu a partition of n >= 1");
  const int d = long_side(mu);
  return Rational(binomial(n, d)) * pow(make_rational(d, n), static_cast<unsigned long>(d));
}

AmgmReport amgm_check(const Partition& mu) {
  AmgmReport report;
  report.product = 1;
  report.columns = 1;
  report.mean_power = 1;
  if (mu.empty()) {
    report.pass = report.hook_identity = true;
    return report;
  }
  const int n = mu.size();
  const int d = mu.first_row();
  const Partition dual = conjugate(mu);
  for (int i = 1; i <= d; ++i) {
    const int c = dual.row(static_cast<std::size_t>(d - i + 1));
    report.product *= Rational(1) + make_rational(c - 1, i);
    report.columns *= c;
  }
  report.mean_power = pow(make_rational(n, d), static_cast<unsigned long>(d));
  report.pass = report.product <= report.columns && report.columns <= report.mean_power;

  const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  const Rational factored = Rational(hook_dim(rest)) * Rational(binomial(n, d)) / report.product;
  report.hook_identity = factored == Rational(hook_dim(mu));
  return report;
}

BoundSweepReport bound_sweep(int n) {
  if (n > limits().sweep_n) throw Error(ErrorKind::LimitExceeded, "bound sweep beyond the configured cap");
  BoundSweepReport report;
  report.n = n;
  report.pass = true;
  bool first = true;
  for (const Partition& mu : enumerate_partitions(n)) {
    ++report.partitions;
    const Rational slack = Rational(hook_dim(mu)) - dim_lower_bound(n, mu);
    if (first || slack < report.min_slack) {
      report.min_slack = slack;
      report.argmin = mu;
      first = false;
    }
    if (slack < 0) {
      report.pass = false;
      report.violations.push_back(mu);
    }
  }
  return report;
}

std::vector<Partition> lemma_scan(const Rational& c, int k, int n) {
  std::vector<Partition> out;
  Integer n_pow;
  mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  const Rational cap = c * Rational(n_pow);
  for (const Partition& mu : enumerate_partitions(n)) {
    if (Rational(hook_dim(mu)) > cap) continue;
    if (mu.first_row() < n - k && static_cast<int>(mu.length()) < n - k) out.push_back(mu);
  }
  return out;
}

std::optional<int> find_threshold(const Rational& c, int k, int n_max) {
  if (n_max > limits().sweep_n) throw Error(ErrorKind::LimitExceeded, "threshold scan beyond the configured cap");
  std::optional<int> threshold;
  for (int n = n_max; n >= 1; --n) {
    if (!lemma_scan(c, k, n).empty()) break;
    threshold = n;
  }
  return threshold;
}

}  // namespace repst

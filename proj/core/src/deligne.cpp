#include "repst/deligne.hpp"

namespace repst {

void Decomposition::add(const Partition& mu, int mult) {
  if (mult <= 0) throw Error(ErrorKind::InvalidArgument, "multiplicities must be positive");
  terms_[mu] += mult;
}

int Decomposition::multiplicity(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

int Decomposition::total() const {
  int sum = 0;
  for (const auto& [mu, c] : terms_) sum += c;
  return sum;
}

namespace {

Polynomial b_set_product(const Partition& lambda) {
  Polynomial p(1);
  for (int k : b_set(lambda)) p *= Polynomial::t() - Polynomial(static_cast<long>(k));
  return p;
}

}  // namespace

Polynomial dim_x(const Partition& lambda) {
  const Polynomial roots = b_set_product(lambda);

  Polynomial by_hooks = roots;
  by_hooks *= Rational(1) / Rational(hook_product(lambda));

  Polynomial by_tableaux = roots;
  by_tableaux *= make_rational(standard_tableaux_count(lambda),
                               factorial(static_cast<unsigned long>(lambda.size())));

  if (!(by_hooks == by_tableaux)) {
    throw Error(ErrorKind::InternalMismatch, "dimension routes disagree for (" + lambda.to_string() +
                                                 "): " + by_hooks.to_string() + " vs " + by_tableaux.to_string());
  }
  return by_hooks;
}

Decomposition pieri_h0(const Partition& lambda) {
  const CornerSets sets = corner_sets(lambda);
  Decomposition out;
  for (const auto* group : {&sets.added, &sets.removed, &sets.moved}) {
    for (const Partition& mu : *group) out.add(mu);
  }
  if (sets.corner_count > 0) out.add(lambda, sets.corner_count);
  return out;
}

Polynomial jm_eigenvalue(const Partition& lambda, ContentConvention convention) {
  const long size = lambda.size();
  return Polynomial(static_cast<long>(content_sum(lambda, convention)) - size) + Polynomial::binomial(-size, 2);
}

Polynomial class_size_poly(const CycleType& rho) {
  Polynomial p = Polynomial::binomial(0, static_cast<unsigned>(rho.support()));
  p *= make_rational(factorial(static_cast<unsigned long>(rho.support())), rho.centralizer_on_support());
  return p;
}

namespace {

using Exponent = TruncatedSeries::Exponent;

// u-exponent of x_i^r = (u_1 ... u_i)^r, i 1-based.
Exponent x_power(std::size_t vars, std::size_t i, int r) {
  Exponent e(vars, 0);
  for (std::size_t k = 0; k < i; ++k) e[k] = r;
  return e;
}

// p_r(x_1..x_vars) in u coordinates.
TruncatedSeries power_sum(const std::vector<int>& bounds, int r) {
  TruncatedSeries s(bounds);
  for (std::size_t i = 1; i <= bounds.size(); ++i) s.add_term(x_power(bounds.size(), i, r), 1);
  return s;
}

}  // namespace

Polynomial frob_coefficient(const Partition& lambda, const CycleType& rho, int extra_variables) {
  if (extra_variables < 0) throw Error(ErrorKind::InvalidArgument, "negative extra variable count");
  const std::size_t vars = lambda.length() + static_cast<std::size_t>(extra_variables);
  if (vars == 0) return 1;

  // x^lambda = prod_k u_k^{lambda_k + lambda_{k+1} + ...}
  Exponent target(vars, 0);
  for (std::size_t k = vars; k-- > 0;) {
    target[k] = lambda.row(k + 1) + (k + 1 < vars ? target[k + 1] : 0);
  }
  const std::vector<int> bounds = target;
  const Exponent zero(vars, 0);

  // Everything except (1 + p_1)^{t-m}; this part has integer coefficients.
  TruncatedSeries rest = TruncatedSeries::constant(bounds, 1);
  for (std::size_t i = 1; i <= vars; ++i) {
    TruncatedSeries factor = TruncatedSeries::constant(bounds, 1);
    factor.add_term(x_power(vars, i, 1), -1);
    rest = rest * factor;
  }
  for (std::size_t i = 2; i <= vars; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      // x_i / x_j = u_{j+1} ... u_i
      Exponent ratio(vars, 0);
      for (std::size_t k = j; k < i; ++k) ratio[k] = 1;
      TruncatedSeries factor = TruncatedSeries::constant(bounds, 1);
      factor.add_term(ratio, -1);
      rest = rest * factor;
    }
  }
  for (int length : rho.cycle_lengths()) {
    TruncatedSeries factor = power_sum(bounds, length);
    factor.add_term(zero, 1);
    rest = rest * factor;
  }

  const Polynomial exponent = Polynomial::t() - Polynomial(static_cast<long>(rho.support()));
  const TruncatedSeries binomial_part = binomial_series(power_sum(bounds, 1), exponent);
  return product_coefficient(binomial_part, rest, target);
}

Polynomial omega_eigenvalue(const CycleType& rho, const Partition& lambda) {
  return (class_size_poly(rho) * frob_coefficient(lambda, rho)).exact_div(dim_x(lambda));
}

BinomialPolynomial integer_valued_certificate(const Polynomial& p) {
  BinomialPolynomial b = to_binomial_basis(p);
  for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
    if (!is_integer(b.coeffs()[j])) {
      throw Error(ErrorKind::NotIntegerValued, "coefficient of C(t," + std::to_string(j) + ") in " + p.to_string() +
                                                   " is " + b.coeffs()[j].get_str());
    }
  }
  return b;
}

}  // namespace repst

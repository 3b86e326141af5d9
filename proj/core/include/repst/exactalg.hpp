#pragma once

// Exact rational, univariate polynomial and truncated multivariate series
// arithmetic. Everything in the library is built on these types; there is no
// floating point anywhere in the core.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "repst/errors.hpp"

namespace repst {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws InvalidArgument on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

bool is_integer(const Rational& q);
Integer factorial(unsigned long n);
Integer binomial(long n, long k);
Rational pow(const Rational& base, unsigned long exponent);

std::string to_string(const Rational& q);

/// Polynomial in the rank variable t with rational coefficients, stored
/// densely by power. The leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor): constants mix freely
  Polynomial(const Integer& c);  // NOLINT
  Polynomial(const Rational& c);  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The monomial t.
  static Polynomial t();
  /// prod_{j=0}^{k-1} (t + shift - j) / k!, i.e. binom(t + shift, k).
  static Polynomial binomial(long shift, unsigned k);
  /// binom(g, k) for a polynomial argument g.
  static Polynomial binomial(const Polynomial& g, unsigned k);
  /// Unique polynomial of degree < points.size() through (x_i, y_i).
  static Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t power) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& at) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Long division; returns {quotient, remainder}.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Throws NonDivisible when the remainder is nonzero.
  Polynomial exact_div(const Polynomial& divisor) const;

  /// Human-readable form, e.g. "1/2*t^2 - 3/2*t".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

enum class PolyOp { Add, Sub, Mul, ExactDiv };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

/// Coefficients c_j of sum_j c_j * binom(t, j).
class BinomialPolynomial {
 public:
  BinomialPolynomial() = default;
  explicit BinomialPolynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool has_integer_coefficients() const;
  Polynomial to_monomial() const;
  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const BinomialPolynomial&, const BinomialPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

BinomialPolynomial to_binomial_basis(const Polynomial& p);

/// Formal power series in `variables` commuting variables, truncated
/// per variable: exponent vectors with any entry above its bound are dropped.
/// Coefficients are polynomials in t. Entries absent from the map are zero.
class TruncatedSeries {
 public:
  using Exponent = std::vector<int>;

  explicit TruncatedSeries(std::vector<int> bounds);

  static TruncatedSeries constant(std::vector<int> bounds, const Polynomial& c);
  /// The series consisting of a single term c * u^exponent (dropped if out of bounds).
  static TruncatedSeries monomial(std::vector<int> bounds, const Exponent& exponent,
                                  const Polynomial& c = 1);

  std::size_t variable_count() const { return bounds_.size(); }
  const std::vector<int>& bounds() const { return bounds_; }
  std::size_t term_count() const { return terms_.size(); }

  bool in_bounds(const Exponent& e) const;
  /// Adds c to the coefficient of u^e; silently ignores out-of-bound e.
  void add_term(const Exponent& e, const Polynomial& c);

  /// Throws OutOfBounds when e has the wrong length or exceeds a bound.
  Polynomial coefficient(const Exponent& e) const;
  Polynomial constant_term() const;

  /// Visits every nonzero term in exponent order.
  template <typename F>
  void for_each(F&& f) const {
    for (const auto& [key, c] : terms_) f(decode(key), c);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Polynomial& scalar);
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Polynomial& scalar) { return a *= scalar; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// The same series viewed under (componentwise smaller) bounds.
  TruncatedSeries truncated(const std::vector<int>& bounds) const;

  /// [u^e](a * b) without forming the whole product.
  friend Polynomial product_coefficient(const TruncatedSeries& a, const TruncatedSeries& b,
                                        const Exponent& e);

 private:
  using Key = std::uint64_t;
  Key encode(const Exponent& e) const;
  Exponent decode(Key key) const;

  std::vector<int> bounds_;
  std::vector<Key> strides_;
  std::map<Key, Polynomial> terms_;
};

TruncatedSeries pow(const TruncatedSeries& base, unsigned exponent);

enum class SeriesMode { Exp, Log, PowT };

/// exp(h) (constant term 0), log(h) (constant term 1), or h^g = exp(g log h)
/// (constant term 1) where g = exponent is a polynomial in t.
/// Throws BadConstantTerm when the precondition on the constant term fails.
TruncatedSeries series_exp_log_pow(const TruncatedSeries& h, SeriesMode mode,
                                   const Polynomial& exponent = Polynomial());

/// (1 + f)^g via the generalized binomial series sum_k binom(g, k) f^k.
/// f must have zero constant term.
TruncatedSeries binomial_series(const TruncatedSeries& f, const Polynomial& g);

Polynomial extract_coefficient(const TruncatedSeries& s, const TruncatedSeries::Exponent& e);

}  // namespace repst

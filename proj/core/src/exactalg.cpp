#include "repst/exactalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace repst {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::OutOfBounds: return "OutOfBounds";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::NotIntegerValued: return "NotIntegerValued";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer r;
  if (n >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    Integer nn(n);
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}
Polynomial::Polynomial(const Integer& c) : Polynomial(Rational(c)) {}
Polynomial::Polynomial(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}
Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::t() { return Polynomial(std::vector<Rational>{0, 1}); }

Polynomial Polynomial::binomial(long shift, unsigned k) {
  return binomial(t() + Polynomial(shift), k);
}

Polynomial Polynomial::binomial(const Polynomial& g, unsigned k) {
  Polynomial r(1);
  for (unsigned j = 0; j < k; ++j) r *= g - Polynomial(static_cast<long>(j));
  r *= Rational(1, 1) / Rational(factorial(k));
  return r;
}

Polynomial Polynomial::interpolate(std::span<const std::pair<Rational, Rational>> points) {
  Polynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial basis(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis *= t() - Polynomial(points[j].first);
      denom *= points[i].first - points[j].first;
    }
    if (denom == 0) throw Error(ErrorKind::InvalidArgument, "repeated interpolation node");
    basis *= points[i].second / denom;
    result += basis;
  }
  return result;
}

Rational Polynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / divisor.leading();
    quot[static_cast<std::size_t>(k - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) {
    throw Error(ErrorKind::NonDivisible,
                "(" + to_string() + ") / (" + divisor.to_string() + ") leaves remainder " + r.to_string());
  }
  return q;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    case PolyOp::ExactDiv: return a.exact_div(b);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown polynomial operation");
}

// ------------------------------------------------------- BinomialPolynomial

BinomialPolynomial::BinomialPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool BinomialPolynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Polynomial BinomialPolynomial::to_monomial() const {
  Polynomial p;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    Polynomial term = Polynomial::binomial(0, static_cast<unsigned>(j));
    term *= coeffs_[j];
    p += term;
  }
  return p;
}

std::string BinomialPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) out << mag.get_str() << "*";
    out << "C(" << var << "," << j << ")";
  }
  return out.str();
}

// Newton forward differences of the values at t = 0..deg.
BinomialPolynomial to_binomial_basis(const Polynomial& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> values;
  for (int n = 0; n <= p.degree(); ++n) values.push_back(p(Rational(n)));
  std::vector<Rational> coeffs;
  for (std::size_t j = 0; j < values.size(); ++j) {
    coeffs.push_back(values[0]);
    for (std::size_t i = 0; i + 1 < values.size() - j; ++i) values[i] = values[i + 1] - values[i];
  }
  return BinomialPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(std::vector<int> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least one variable");
  Key stride = 1;
  for (int b : bounds_) {
    if (b < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation bound");
    strides_.push_back(stride);
    const Key radix = static_cast<Key>(b) + 1;
    if (stride > std::numeric_limits<Key>::max() / radix) {
      throw Error(ErrorKind::LimitExceeded, "truncation box too large to index");
    }
    stride *= radix;
  }
}

TruncatedSeries TruncatedSeries::constant(std::vector<int> bounds, const Polynomial& c) {
  TruncatedSeries s(std::move(bounds));
  s.add_term(Exponent(s.bounds_.size(), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::vector<int> bounds, const Exponent& exponent,
                                          const Polynomial& c) {
  TruncatedSeries s(std::move(bounds));
  s.add_term(exponent, c);
  return s;
}

bool TruncatedSeries::in_bounds(const Exponent& e) const {
  if (e.size() != bounds_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > bounds_[i]) return false;
  }
  return true;
}

TruncatedSeries::Key TruncatedSeries::encode(const Exponent& e) const {
  Key key = 0;
  for (std::size_t i = 0; i < e.size(); ++i) key += static_cast<Key>(e[i]) * strides_[i];
  return key;
}

TruncatedSeries::Exponent TruncatedSeries::decode(Key key) const {
  Exponent e(bounds_.size());
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const Key radix = static_cast<Key>(bounds_[i]) + 1;
    e[i] = static_cast<int>(key % radix);
    key /= radix;
  }
  return e;
}

void TruncatedSeries::add_term(const Exponent& e, const Polynomial& c) {
  if (c.is_zero() || !in_bounds(e)) return;
  auto [it, inserted] = terms_.try_emplace(encode(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial TruncatedSeries::coefficient(const Exponent& e) const {
  if (!in_bounds(e)) throw Error(ErrorKind::OutOfBounds, "exponent outside truncation bounds");
  auto it = terms_.find(encode(e));
  return it == terms_.end() ? Polynomial() : it->second;
}

Polynomial TruncatedSeries::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Polynomial() : it->second;
}

namespace {

std::vector<int> common_bounds(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "series have different variable counts");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

}  // namespace

TruncatedSeries TruncatedSeries::truncated(const std::vector<int>& bounds) const {
  TruncatedSeries out(common_bounds(bounds_, bounds));
  for (const auto& [key, c] : terms_) out.add_term(decode(key), c);
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (bounds_ != rhs.bounds_) *this = truncated(rhs.bounds_);
  rhs.for_each([&](const Exponent& e, const Polynomial& c) { add_term(e, c); });
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (bounds_ != rhs.bounds_) *this = truncated(rhs.bounds_);
  rhs.for_each([&](const Exponent& e, const Polynomial& c) { add_term(e, -c); });
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Polynomial& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a;
  return out += b;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a;
  return out -= b;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(common_bounds(a.bounds_, b.bounds_));
  std::vector<std::pair<TruncatedSeries::Exponent, const Polynomial*>> rhs;
  rhs.reserve(b.terms_.size());
  b.for_each([&](const TruncatedSeries::Exponent& e, const Polynomial& c) { rhs.emplace_back(e, &c); });

  TruncatedSeries::Exponent sum(out.bounds_.size());
  for (const auto& [ka, ca] : a.terms_) {
    const auto ea = a.decode(ka);
    if (!out.in_bounds(ea)) continue;
    for (const auto& [eb, cb] : rhs) {
      bool fits = true;
      for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = ea[i] + eb[i];
        if (sum[i] > out.bounds_[i]) {
          fits = false;
          break;
        }
      }
      if (fits) out.add_term(sum, ca * *cb);
    }
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.bounds_ == b.bounds_ && a.terms_ == b.terms_;
}

Polynomial product_coefficient(const TruncatedSeries& a, const TruncatedSeries& b,
                               const TruncatedSeries::Exponent& e) {
  const auto bounds = common_bounds(a.bounds_, b.bounds_);
  TruncatedSeries box(bounds);
  if (!box.in_bounds(e)) throw Error(ErrorKind::OutOfBounds, "exponent outside truncation bounds");
  Polynomial acc;
  TruncatedSeries::Exponent rest(e.size());
  for (const auto& [ka, ca] : a.terms_) {
    const auto ea = a.decode(ka);
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      rest[i] = e[i] - ea[i];
      if (rest[i] < 0 || rest[i] > b.bounds_[i]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    auto it = b.terms_.find(b.encode(rest));
    if (it != b.terms_.end()) acc += ca * it->second;
  }
  return acc;
}

TruncatedSeries pow(const TruncatedSeries& base, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::constant(base.bounds(), 1);
  TruncatedSeries square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

namespace {

// sum_{k>=0} weight(k) * f^k, stopping once f^k vanishes under truncation.
// f must have zero constant term, so f^k is zero for k > sum of bounds.
template <typename Weight>
TruncatedSeries power_sum(const TruncatedSeries& f, Weight weight) {
  TruncatedSeries acc(f.bounds());
  TruncatedSeries power = TruncatedSeries::constant(f.bounds(), 1);
  for (unsigned k = 0; power.term_count() > 0; ++k) {
    acc += power * weight(k);
    power = power * f;
  }
  return acc;
}

TruncatedSeries without_constant(const TruncatedSeries& h) {
  TruncatedSeries f = h;
  f -= TruncatedSeries::constant(h.bounds(), h.constant_term());
  return f;
}

}  // namespace

TruncatedSeries series_exp_log_pow(const TruncatedSeries& h, SeriesMode mode, const Polynomial& exponent) {
  const Polynomial c0 = h.constant_term();
  switch (mode) {
    case SeriesMode::Exp: {
      if (!c0.is_zero()) throw Error(ErrorKind::BadConstantTerm, "exp needs constant term 0");
      return power_sum(h, [](unsigned k) { return Polynomial(Rational(1) / Rational(factorial(k))); });
    }
    case SeriesMode::Log: {
      if (c0 != Polynomial(1)) throw Error(ErrorKind::BadConstantTerm, "log needs constant term 1");
      const TruncatedSeries f = without_constant(h);
      return power_sum(f, [](unsigned k) {
        if (k == 0) return Polynomial();
        return Polynomial(Rational(k % 2 == 1 ? 1 : -1, k));
      });
    }
    case SeriesMode::PowT: {
      if (c0 != Polynomial(1)) throw Error(ErrorKind::BadConstantTerm, "power needs constant term 1");
      TruncatedSeries scaled = series_exp_log_pow(h, SeriesMode::Log);
      scaled *= exponent;
      return series_exp_log_pow(scaled, SeriesMode::Exp);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown series mode");
}

TruncatedSeries binomial_series(const TruncatedSeries& f, const Polynomial& g) {
  if (!f.constant_term().is_zero()) {
    throw Error(ErrorKind::BadConstantTerm, "binomial series needs f with constant term 0");
  }
  return power_sum(f, [&g](unsigned k) { return Polynomial::binomial(g, k); });
}

Polynomial extract_coefficient(const TruncatedSeries& s, const TruncatedSeries::Exponent& e) {
  return s.coefficient(e);
}

}  // namespace repst

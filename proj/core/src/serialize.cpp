#include "repst/serialize.hpp"

namespace repst {

namespace {

Integer integer_from_string(const std::string& s) {
  Integer value;
  if (s.empty() || value.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "not a decimal integer: '" + s + "'");
  return value;
}

std::vector<Rational> coeffs_from_json(const Json& j, const char* basis) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("coeffs")) {
    throw Error(ErrorKind::Parse, "polynomial JSON needs 'basis' and 'coeffs'");
  }
  if (j.at("basis") != basis) throw Error(ErrorKind::Parse, "unexpected basis");
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return coeffs;
}

template <typename Coeffs>
Json coeffs_to_json(const Coeffs& coeffs, const char* basis) {
  Json arr = Json::array();
  for (const auto& c : coeffs) arr.push_back(rational_to_json(c));
  return {{"basis", basis}, {"coeffs", arr}};
}

}  // namespace

Json rational_to_json(const Rational& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw Error(ErrorKind::Parse, "rational must be [\"num\",\"den\"]");
  }
  const Integer den = integer_from_string(j[1].get<std::string>());
  if (den <= 0) throw Error(ErrorKind::Parse, "denominator must be positive");
  return make_rational(integer_from_string(j[0].get<std::string>()), den);
}

Json to_json(const Polynomial& p) { return coeffs_to_json(p.coeffs(), "monomial"); }
Json to_json(const BinomialPolynomial& p) { return coeffs_to_json(p.coeffs(), "binomial"); }

Polynomial polynomial_from_json(const Json& j) {
  if (j.is_object() && j.value("basis", "") == "binomial") {
    return BinomialPolynomial(coeffs_from_json(j, "binomial")).to_monomial();
  }
  return Polynomial(coeffs_from_json(j, "monomial"));
}

BinomialPolynomial binomial_from_json(const Json& j) {
  if (j.is_object() && j.value("basis", "") == "monomial") return to_binomial_basis(polynomial_from_json(j));
  return BinomialPolynomial(coeffs_from_json(j, "binomial"));
}

Json to_json(const Decomposition& d) {
  Json arr = Json::array();
  for (const auto& [mu, mult] : d.terms()) arr.push_back({{"partition", mu.to_string()}, {"mult", mult}});
  return arr;
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "decomposition must be a list");
  Decomposition d;
  for (const auto& term : j) {
    try {
      d.add(Partition::parse(term.at("partition").get<std::string>()), term.at("mult").get<int>());
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
  }
  return d;
}

Json to_json(const TruncatedSeries& s) {
  Json terms = Json::array();
  s.for_each([&](const TruncatedSeries::Exponent& e, const Polynomial& c) {
    terms.push_back({{"exponent", e}, {"coeff", to_json(c)}});
  });
  return {{"bounds", s.bounds()}, {"terms", terms}};
}

TruncatedSeries series_from_json(const Json& j) {
  try {
    TruncatedSeries s(j.at("bounds").get<std::vector<int>>());
    for (const auto& term : j.at("terms")) {
      const auto e = term.at("exponent").get<TruncatedSeries::Exponent>();
      if (!s.in_bounds(e)) throw Error(ErrorKind::Parse, "series term outside its bounds");
      s.add_term(e, polynomial_from_json(term.at("coeff")));
    }
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Json to_json(const HilbertCoefficientTable& table) {
  Json out = Json::object();
  for (const auto& [m, p] : table) out[std::to_string(m)] = to_json(p);
  return out;
}

HilbertCoefficientTable hilbert_table_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "table must be an object");
  HilbertCoefficientTable table;
  for (const auto& [key, value] : j.items()) {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "table key is not an integer: " + key);
    }
    table.emplace(m, polynomial_from_json(value));
  }
  return table;
}

Json to_json(const GradedDecompositionReport& r) {
  return {{"check", "graded-decomposition"},
          {"d", r.d},
          {"D", r.degree},
          {"pass", r.pass},
          {"firstFailure", r.first_failure ? Json(*r.first_failure) : Json(nullptr)}};
}

Json to_json(const BoundSweepReport& r) {
  Json violations = Json::array();
  for (const auto& mu : r.violations) violations.push_back(mu.to_string());
  return {{"check", "dimension-bound"},
          {"n", r.n},
          {"pass", r.pass},
          {"partitions", r.partitions},
          {"minSlack", rational_to_json(r.min_slack)},
          {"argmin", r.argmin.to_string()},
          {"violations", violations}};
}

Json to_json(const AmgmReport& r) {
  return {{"check", "amgm"},
          {"pass", r.pass},
          {"product", rational_to_json(r.product)},
          {"columns", rational_to_json(r.columns)},
          {"meanPower", rational_to_json(r.mean_power)},
          {"hookIdentity", r.hook_identity}};
}

Json to_json(const ReducibilityCandidate& c) { return {{"t", c.t}, {"i", c.i}, {"m", c.m}}; }

}  // namespace repst

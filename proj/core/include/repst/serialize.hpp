#pragma once

// JSON wire formats. Rationals travel as [numerator, denominator] pairs of
// decimal strings so that precision is never lost.

#include <json.hpp>

#include "repst/bounds.hpp"
#include "repst/deligne.hpp"
#include "repst/exactalg.hpp"
#include "repst/groupalg.hpp"
#include "repst/schurweyl.hpp"

namespace repst {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"basis":"monomial","coeffs":[[num,den],...]}
Json to_json(const Polynomial& p);
/// {"basis":"binomial","coeffs":[[num,den],...]}
Json to_json(const BinomialPolynomial& p);
/// Accepts either basis; binomial input is converted to monomial form.
Polynomial polynomial_from_json(const Json& j);
/// Accepts either basis; monomial input is converted to binomial form.
BinomialPolynomial binomial_from_json(const Json& j);

/// [{"partition":"2,1","mult":2}, ...]
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// {"bounds":[...],"terms":[{"exponent":[...],"coeff":poly}, ...]}
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

/// {"0": poly, "1": poly, ...}
Json to_json(const HilbertCoefficientTable& table);
HilbertCoefficientTable hilbert_table_from_json(const Json& j);

/// {"check":"graded-decomposition","d":..,"D":..,"pass":..,"firstFailure":..}
Json to_json(const GradedDecompositionReport& r);
Json to_json(const BoundSweepReport& r);
Json to_json(const AmgmReport& r);
Json to_json(const ReducibilityCandidate& c);

}  // namespace repst

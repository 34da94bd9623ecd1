#pragma once

#include <nlohmann/json.hpp>

#include "invstar/verify.hpp"

namespace invstar::json {

using nlohmann::json;

/// "p/q", or "p" when q = 1.
json to_json(const Rational& r);
/// Accepts "p/q" strings and JSON integers.  Throws SpecError.
Rational rational_from_json(const json& j);

/// Coefficients, lambda-power ascending.
json to_json(const Polynomial& p);
/// {"num": [...], "den": [...]}.
json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const json& j);

/// {"name", "cutoff", "generators": [{"name", "degree"}], "brackets": [{"a",
/// "b", "terms": [{"gen", "coeff"}]}], "character": [{"gen", "value"}],
/// "out_of_window": [["a", "b"], ...]}.  Brackets are written as the
/// explicit entries they were built from.
json algebra_to_json(const GradedLieAlgebra& alg);
/// Throws SpecError on malformed input; does not validate the algebra.
AlgebraPtr algebra_from_json(const json& j);

json to_json(const GradedLieAlgebra& alg, const UeaElement& e);
json to_json(const GradedLieAlgebra& alg, const TensorElement2& t);
json to_json(const GradedLieAlgebra& alg, const RationalTensor2& t);

json to_json(const GradedLieAlgebra& alg, const DegreeComponent& c);
json to_json(const StarProduct& b);
json to_json(const VerificationReport& r);
json to_json(const GradedLieAlgebra& alg, const ValidationReport& r);

}  // namespace invstar::json

#pragma once

#include <string>

#include "json.hpp"
#include "urlab/analysis.hpp"
#include "urlab/lie_algebra.hpp"
#include "urlab/representation.hpp"
#include "urlab/sweep.hpp"

namespace urlab::io {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "v1";

/// "p/q", or "p" when q = 1. Parsing also accepts JSON integers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const AlgebraSpec& spec);
AlgebraSpec algebra_spec_from_json(const Json& j);

Json to_json(const RepParams& p);
RepParams params_from_json(const Json& j);

/// {"schema","algebra","params"?,"partition"?,"alpha"?,"images":{name: matrix},"verified"}.
Json to_json(const Representation& rep);
/// With "params", images are recomputed (and must agree when given); otherwise "algebra" and
/// "images" are required and the homomorphism check is rerun.
Representation representation_from_json(const Json& j);

Json to_json(const AnalysisReport& r, const GAlgebra& alg);
Json to_json(const SweepReport& r);
Json to_json(const IsomorphismResult& r);

Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace urlab::io

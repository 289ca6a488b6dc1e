#pragma once

#include <stdexcept>
#include <string>

namespace urlab {

/// Shapes or sizes of operands do not agree.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Representation parameters break the admissibility conditions.
struct ParamViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A hypothesis required by a construction does not hold; `what()` names the witness.
struct HypothesisViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A constructed map failed the exact homomorphism check. Never expected for legal input.
struct RepresentationCheckFailed : std::logic_error {
  using std::logic_error::logic_error;
};

/// The diagonal family needs beta != gamma for its wedge image to survive.
struct ExtremeDegeneracy : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A characteristic polynomial does not split over the rationals.
struct IrrationalSpectrum : std::domain_error {
  using std::domain_error::domain_error;
};

/// Input is not in the shape an operation requires (e.g. not standard).
struct NotStandard : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input JSON does not match the expected layout.
struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace urlab

#pragma once

// JSON encodings. Rationals are "p/q" strings, exponents integer arrays,
// faces are listed by external vertex ids.

#include "cellres/cell_complex.hpp"
#include "cellres/cycle.hpp"
#include "cellres/monomial_ideal.hpp"
#include "cellres/residue.hpp"
#include "cellres/resolution.hpp"

#include <json.hpp>

namespace cellres {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cellres/1";

/// Integers that fit in 64 bits become numbers, larger ones strings.
Json integer_to_json(const Integer& value);
Json exponent_to_json(const ExponentVector& e);
ExponentVector exponent_from_json(const Json& j);

/// {"n": int, "generators": [[int, ...], ...]}; generators need not be
/// minimal. Throws PreconditionError on unknown keys or bad shapes.
MonomialIdeal ideal_from_json(const Json& j);
Json ideal_to_json(const MonomialIdeal& m);

/// {"vertices": [{"id", "coords": ["p/q", ...], "label": [...]}, ...],
///  "faces": [{"vertices": [ids], "orientation_basis": [[...], ...]?}, ...]}.
/// Every face of each listed cell is added; unlisted orientations follow
/// default_orientation().
LabeledCellComplex complex_from_json(const Json& j);
Json complex_to_json(const LabeledCellComplex& x);

Json free_complex_to_json(const FreeComplex& f, const LabeledCellComplex& x);
Json signed_matrix_to_json(const SignedMonomialMatrix& m);
Json residue_to_json(const ResidueCurrent& r);
Json face_to_json(const LabeledCellComplex& x, FaceIndex i);

}  // namespace cellres

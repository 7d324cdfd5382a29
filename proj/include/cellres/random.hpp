#pragma once

// Seeded random instances and orientation changes for cross-checks. Every
// stream is derived from (seed, index), so instances are reproducible and
// independent of evaluation order.

#include "cellres/cell_complex.hpp"
#include "cellres/monomial_ideal.hpp"

#include <cstdint>
#include <random>

namespace cellres {

using Rng = std::mt19937_64;

/// Independent stream number `index` of the family `seed`.
Rng split_stream(std::uint64_t seed, std::uint64_t index);

/// (z_1^{b_1}, ..., z_n^{b_n}) with b_i uniform in [1, max_exponent].
MonomialIdeal random_complete_intersection(Rng& rng, std::size_t n, int max_exponent);

/// Two-variable Artinian ideal with r uniform in [2, max_generators]
/// staircase corners and exponents at most max_exponent.
MonomialIdeal random_staircase_2d(Rng& rng, int max_generators, int max_exponent);

/// Artinian generic ideal in n variables: pure powers z_i^{b_i} with
/// b_i <= max_exponent plus up to `extra` random monomials, redrawn until
/// is_generic holds and at least one non-pure generator survives.
MonomialIdeal random_generic_artinian(Rng& rng, std::size_t n, int max_exponent, int extra);

/// Replaces the orientation of every face of dimension 1..dim-1 by a random
/// basis of the same span (random sign, random unimodular mixing).
LabeledCellComplex reorient_lower_faces(const LabeledCellComplex& x, Rng& rng);

}  // namespace cellres

#pragma once

#include "cellres/cell_complex.hpp"
#include "cellres/monomial_ideal.hpp"

#include <optional>

namespace cellres {

/// Smallest admissible lift base, (n+1)! + 1.
Integer minimum_lift_base(std::size_t n);

struct HullParameters {
  Integer t;
  std::size_t n = 0;

  static HullParameters defaults(std::size_t n) { return {minimum_lift_base(n), n}; }
  /// Throws PreconditionError unless t >= (n+1)! + 1.
  void validate() const;
};

/// Bounded faces of conv{t^alpha} + R_+^n for the minimal generators, with
/// vertices at t^alpha (vertex id = generator position in the ideal).
/// Lower faces get default_orientation(); top faces are oriented so that
/// they agree with the simplex orientation after embed_in_simplex.
LabeledCellComplex hull_complex(const MonomialIdeal& m, std::optional<Integer> t = std::nullopt);

/// Radial projection from (1,..,1) onto the simplex spanned by the
/// pure-power vertices (1,..,t^{b_i},..,1). Orientations are carried along
/// by the derivative of the projection.
LabeledCellComplex embed_in_simplex(const LabeledCellComplex& h, const ExponentVector& b);

/// The complex of all faces of the simplex on the vertices of x labeled
/// z_i^{b_i}, each face [v_{i_1},..,v_{i_l}] oriented in increasing order.
LabeledCellComplex delta_complex(const LabeledCellComplex& x, const ExponentVector& b);

inline constexpr std::size_t kScarfGeneratorBound = 22;
inline constexpr std::size_t kTaylorGeneratorBound = 12;

/// Subsets of generators whose lcm is attained by no other subset, realized
/// on the embedded hull vertex positions (lifted positions for
/// non-Artinian ideals); simplices oriented by sorted vertex order.
LabeledCellComplex scarf_complex(const MonomialIdeal& m, std::size_t bound = kScarfGeneratorBound,
                                 std::optional<Integer> t = std::nullopt);

/// The full simplex on the generators, realized as the standard simplex
/// (0, e_1, .., e_{r-1}) in R^{r-1}.
LabeledCellComplex taylor_complex(const MonomialIdeal& m, std::size_t bound = kTaylorGeneratorBound);

/// Same face keys with the same labels.
bool same_face_poset(const LabeledCellComplex& a, const LabeledCellComplex& b);

}  // namespace cellres

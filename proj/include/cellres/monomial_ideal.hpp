#pragma once

#include "cellres/exponent.hpp"
#include "cellres/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cellres {

/// Monomial ideal in C[z_1..z_n], stored by its minimal generators in
/// descending lexicographic order (so z_1^{b_1} comes first).
class MonomialIdeal {
 public:
  /// Builds the ideal generated by the given monomials, keeping only the
  /// divisibility-minimal ones. Throws PreconditionError for an empty list
  /// or for vectors of different lengths.
  static MonomialIdeal from_generators(std::vector<ExponentVector> generators);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  /// Some generator divides z^beta.
  bool contains(const ExponentVector& beta) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> generators)
      : nvars_(nvars), generators_(std::move(generators)) {}

  std::size_t nvars_ = 0;
  std::vector<ExponentVector> generators_;
};

inline MonomialIdeal minimize(std::vector<ExponentVector> generators) {
  return MonomialIdeal::from_generators(std::move(generators));
}

bool is_artinian(const MonomialIdeal& m);

/// (b_1..b_n) with z_i^{b_i} the pure-power generators. Requires Artinian.
ExponentVector pure_power_exponents(const MonomialIdeal& m);

/// Join of all generators; equals pure_power_exponents for Artinian ideals.
ExponentVector generator_join(const MonomialIdeal& m);

/// All lcms of nonempty generator subsets, sorted by degree_lex_less.
/// Computed as the closure of the generators under joining with a generator.
std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& m);

/// dim C[z]/M, the number of lattice points in the staircase. Computed by
/// slicing along the last variable, so the cost does not scale with the box.
Integer multiplicity(const MonomialIdeal& m);

bool is_generic(const MonomialIdeal& m);

/// The irreducible ideal (z_1^{a_1}, ..., z_n^{a_n}); all a_i >= 1.
struct IrreducibleComponent {
  ExponentVector alpha;

  explicit IrreducibleComponent(ExponentVector a);
  bool contains(const ExponentVector& beta) const;
  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

/// beta lies in every component.
bool in_intersection(const std::vector<IrreducibleComponent>& components,
                     const ExponentVector& beta);

/// Intersection of the components equals M on the box [0, box]; the box
/// defaults to pure_power_exponents(M).
bool equals_ideal(const std::vector<IrreducibleComponent>& components, const MonomialIdeal& m,
                  std::optional<ExponentVector> box = std::nullopt);

/// Calls visit(beta) for every lattice point of [0, box], last coordinate
/// fastest. Stops early when visit returns false; returns whether it ran to
/// completion.
template <typename Visit>
bool for_each_in_box(const ExponentVector& box, Visit&& visit) {
  const std::size_t n = box.size();
  std::vector<ExponentVector::value_type> current(n, 0);
  while (true) {
    if (!visit(ExponentVector(current))) return false;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (current[i] < box[i]) {
        ++current[i];
        break;
      }
      current[i] = 0;
      if (i == 0) return true;
    }
    if (n == 0) return true;
  }
}

/// Corners (a_i, b_i) of a two-variable Artinian ideal with
/// a_1 > ... > a_r = 0 and 0 = b_1 < ... < b_r.
std::vector<std::pair<ExponentVector::value_type, ExponentVector::value_type>>
staircase_corners_2d(const MonomialIdeal& m);

}  // namespace cellres

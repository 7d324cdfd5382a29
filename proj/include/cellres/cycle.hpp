#pragma once

#include "cellres/cell_complex.hpp"
#include "cellres/monomial_ideal.hpp"
#include "cellres/residue.hpp"
#include "cellres/resolution.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cellres {

/// Polynomial differential form sum c * z^e dz_I with dz_I = dz_{i_1} ^ ...
/// in increasing index order; I is a bit mask (n <= 32).
class FormPolynomial {
 public:
  using Key = std::pair<ExponentVector, std::uint32_t>;
  using Terms = std::map<Key, Rational>;

  FormPolynomial() = default;
  FormPolynomial(int value);  // NOLINT(google-explicit-constructor): Eigen builds scalars from literals
  FormPolynomial(const ExponentVector& exponent, std::uint32_t dz, const Rational& coefficient);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const ExponentVector& exponent, std::uint32_t dz) const;

  FormPolynomial& operator+=(const FormPolynomial& other);
  friend FormPolynomial operator+(FormPolynomial a, const FormPolynomial& b) { return a += b; }
  /// Wedge product: coefficients multiply, exponents add, dz lists merge
  /// with the shuffle sign; a repeated dz gives 0.
  friend FormPolynomial operator*(const FormPolynomial& a, const FormPolynomial& b);
  friend bool operator==(const FormPolynomial&, const FormPolynomial&) = default;

 private:
  void add_term(const ExponentVector& exponent, std::uint32_t dz, const Rational& coefficient);
  Terms terms_;
};

/// Sign of dz_a ^ dz_b relative to the sorted wedge of a | b (0 if they meet).
int shuffle_sign(std::uint32_t a, std::uint32_t b);

}  // namespace cellres

namespace Eigen {

template <>
struct NumTraits<cellres::FormPolynomial> : GenericNumTraits<cellres::FormPolynomial> {
  using Real = cellres::FormPolynomial;
  using NonInteger = cellres::FormPolynomial;
  using Nested = cellres::FormPolynomial;
  using Literal = cellres::FormPolynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };
};

}  // namespace Eigen

namespace cellres {

using FormMatrix = MatrixX<FormPolynomial>;

/// d phi_k: entry s z^gamma becomes sum_i s gamma_i z^{gamma - e_i} dz_i.
FormMatrix differentiate(const FreeComplex& f, int k);
/// Only the d/dz_i dz_i part of differentiate(f, k).
FormMatrix partial_only(const FreeComplex& f, int k, std::size_t variable);

/// Left-to-right matrix product with wedge multiplication of entries.
FormMatrix compose(const std::vector<FormMatrix>& factors);

struct CycleReport {
  Integer lhs;
  Integer rhs;
  bool ok = false;
};

/// Sum over top faces of sign(sigma, Delta) times the coefficient of
/// z^{alpha_sigma - 1} dz_1 ^ ... ^ dz_n in the sigma-column of
/// d phi_0 o ... o d phi_{n-1}, times the graded sign (-1)^{n(n-1)/2};
/// rhs = n! dim C[z]/M.
CycleReport fundamental_cycle_check(const LabeledCellComplex& x, const MonomialIdeal& m, const ExponentVector& b);

/// The same contraction for d_{s_1} phi_0 o ... o d_{s_n} phi_{n-1}, with
/// the form moved past R (sign (-1)^{n^2}); rhs = c_n m with
/// c_n = (-1)^{n^2} (-1)^{n(n-1)/2}. `s` is a permutation of 0..n-1.
CycleReport permutation_cycle_check(const LabeledCellComplex& x, const MonomialIdeal& m, const ExponentVector& b,
                                    const std::vector<std::size_t>& s);

/// Both checks against an already computed complex and current (R must be
/// residue_from_theorem of the complex behind f).
CycleReport fundamental_cycle_check(const FreeComplex& f, const ResidueCurrent& r, const MonomialIdeal& m);
CycleReport permutation_cycle_check(const FreeComplex& f, const ResidueCurrent& r, const MonomialIdeal& m,
                                    const std::vector<std::size_t>& s);

int cycle_constant(std::size_t n);

/// All permutations of 0..n-1 in lexicographic order.
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

/// Half-open lattice rectangle [x_lo, x_hi) x [y_lo, y_hi).
struct Rectangle2D {
  ExponentVector::value_type x_lo, x_hi, y_lo, y_hi;
  Integer area() const;
  bool contains(ExponentVector::value_type x, ExponentVector::value_type y) const;
  friend bool operator==(const Rectangle2D&, const Rectangle2D&) = default;
};

enum class PartitionOrder { P, Q };

/// P_i = [0, a_i) x [b_i, b_{i+1}) or Q_i = [a_{i+1}, a_i) x [0, b_{i+1}).
std::vector<Rectangle2D> staircase_partition_2d(const MonomialIdeal& m, PartitionOrder order);

}  // namespace cellres

#pragma once

#include "cellres/cell_complex.hpp"
#include "cellres/monomial_ideal.hpp"
#include "cellres/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cellres {

/// The cellular free complex F_X: one basis element e_sigma per face,
/// graded by dimension k = -1..N, with differentials
/// phi_k(e_sigma) = sum_tau sign(tau, sigma) z^{m_sigma - m_tau} e_tau.
class FreeComplex {
 public:
  FreeComplex(std::size_t nvars, std::vector<std::vector<FaceIndex>> bases,
              std::vector<std::vector<ExponentVector>> degrees,
              std::vector<SignedMonomialMatrix> differentials);

  std::size_t nvars() const noexcept { return nvars_; }
  /// Top homological degree N.
  int length() const noexcept { return static_cast<int>(differentials_.size()) - 1; }

  /// Faces forming the basis of A_k, k = -1..N.
  const std::vector<FaceIndex>& basis(int k) const { return bases_.at(static_cast<std::size_t>(k + 1)); }
  /// Multidegrees (face labels) of the basis of A_k.
  const std::vector<ExponentVector>& degrees(int k) const { return degrees_.at(static_cast<std::size_t>(k + 1)); }
  /// phi_k : A_k -> A_{k-1}, k = 0..N; rows index A_{k-1}, columns A_k.
  const SignedMonomialMatrix& phi(int k) const { return differentials_.at(static_cast<std::size_t>(k)); }

 private:
  std::size_t nvars_;
  std::vector<std::vector<FaceIndex>> bases_;
  std::vector<std::vector<ExponentVector>> degrees_;
  std::vector<SignedMonomialMatrix> differentials_;
};

/// Builds F_X and verifies phi_{k-1} phi_k = 0; throws PreconditionError
/// (inconsistent orientation data) otherwise.
FreeComplex cellular_complex(const LabeledCellComplex& x);

/// Matrix of sign(tau, sigma) over the faces of dimensions k-1 and k.
IntegerMatrix boundary_matrix(const LabeledCellComplex& x, int k);

/// Ranks of the reduced rational homology of x in degrees -1..dim(x),
/// from the augmented chain complex including the empty face.
std::vector<Integer> reduced_homology_ranks(const LabeledCellComplex& x);

struct ExactnessReport {
  bool ok = true;
  /// First degree beta (0 first, then the lcm lattice in degree-lex order)
  /// whose subcomplex X_{<=beta} is nonempty with nonzero reduced homology.
  std::optional<ExponentVector> witness;
};

/// F_X is a resolution of S/M: X_{<=beta} is empty or acyclic for every
/// beta in lcm_lattice(M) and beta = 0. The vertex labels must generate M.
/// `jobs` > 1 splits the degree scan across threads; the verdict and the
/// witness do not depend on it.
ExactnessReport is_exact(const LabeledCellComplex& x, const MonomialIdeal& m, unsigned jobs = 1);

/// The ideal generated by the vertex labels of x.
MonomialIdeal vertex_ideal(const LabeledCellComplex& x);

struct MinimalityReport {
  bool ok = true;
  /// (tau, sigma) with tau a facet of sigma and m_tau = m_sigma.
  std::optional<std::pair<FaceIndex, FaceIndex>> witness;
};

/// No differential has a nonzero constant entry.
MinimalityReport is_minimal(const FreeComplex& f);

}  // namespace cellres

#pragma once

#include "cellres/cell_complex.hpp"
#include "cellres/monomial_ideal.hpp"
#include "cellres/resolution.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cellres {

/// sign * dbar[1/z_n^{alpha_n}] ^ ... ^ dbar[1/z_1^{alpha_1}], or zero.
/// The factor order is fixed; all alpha_i >= 1 for a nonzero product.
struct CHProduct {
  int sign = 0;
  ExponentVector alpha;

  static CHProduct zero() { return {}; }
  /// sign * CH(alpha); the zero element when some alpha_i < 1.
  static CHProduct make(int sign, const ExponentVector& alpha);

  bool is_zero() const noexcept { return sign == 0; }
  friend bool operator==(const CHProduct&, const CHProduct&) = default;
};

/// Action on the test form z^beta dz_1 ^ ... ^ dz_n, in units of (2 pi i)^n:
/// sign when beta = alpha - (1,..,1), otherwise 0.
int ch_action(const CHProduct& c, const ExponentVector& beta);

/// z^gamma * c: sign * CH(alpha - gamma) when every entry stays >= 1.
CHProduct monomial_times_ch(const ExponentVector& gamma, const CHProduct& c);

struct ResidueEntry {
  FaceIndex face = 0;
  std::vector<int> vertex_ids;
  CHProduct value;
  friend bool operator==(const ResidueEntry&, const ResidueEntry&) = default;
};

/// One entry per top face of X, in face order.
struct ResidueCurrent {
  std::vector<ResidueEntry> entries;
  friend bool operator==(const ResidueCurrent&, const ResidueCurrent&) = default;
};

/// R_sigma = sign(sigma, Delta) CH(m_sigma) for every (n-1)-face sigma.
/// X must refine the simplex complex of b and support a resolution of the
/// ideal of its vertex labels; throws PreconditionError otherwise.
ResidueCurrent residue_from_theorem(const LabeledCellComplex& x, const ExponentVector& b, unsigned jobs = 1);

/// Maps a_k : F_k -> E_k, k = -1..n-1, from the Koszul complex F of the
/// simplex complex Delta to the cellular complex E of X:
/// a_k(e_sigma) = sum_{sigma' in sigma} sign(sigma', sigma) z^{m_sigma - m_sigma'} e_sigma'.
struct ChainMap {
  /// maps[k + 1] = a_k; rows index X_k, columns Delta_k.
  std::vector<SignedMonomialMatrix> maps;
  const SignedMonomialMatrix& a(int k) const { return maps.at(static_cast<std::size_t>(k + 1)); }
  SignedMonomialMatrix& a(int k) { return maps.at(static_cast<std::size_t>(k + 1)); }
};

struct Comparison {
  LabeledCellComplex delta;
  FreeComplex koszul;  // psi, over Delta
  FreeComplex cellular;  // phi, over X
  ChainMap maps;
};

/// Builds Delta, both free complexes and the chain maps. Throws
/// PreconditionError when X does not refine Delta.
Comparison comparison_maps(const LabeledCellComplex& x, const ExponentVector& b);

struct ComparisonReport {
  bool ok = true;
  /// (k, face of Delta_k) of the first column where a_{k-1} psi_k != phi_k a_k.
  std::optional<std::pair<int, FaceIndex>> witness;
};

/// a_{k-1} psi_k = phi_k a_k as polynomial matrices for k = 0..n-1.
ComparisonReport verify_chain_map(const ChainMap& a, const FreeComplex& psi, const FreeComplex& phi);
ComparisonReport verify_comparison(const LabeledCellComplex& x, const ExponentVector& b);

/// R^E = a_{n-1} R^F with the Koszul current R^F = +CH(b).
ResidueCurrent residue_via_comparison(const LabeledCellComplex& x, const ExponentVector& b);

/// z^beta annihilates every entry of R.
bool annihilator_contains(const ResidueCurrent& r, const ExponentVector& beta);

struct DualityReport {
  bool ok = true;
  std::optional<ExponentVector> counterexample;
};

/// Over the box [0, pure powers of M]: z^beta annihilates R iff z^beta in M.
DualityReport duality_check(const ResidueCurrent& r, const MonomialIdeal& m);

/// The irreducible ideals m^{alpha_sigma} of the nonzero entries.
std::vector<IrreducibleComponent> irreducible_components(const ResidueCurrent& r);

}  // namespace cellres

#include "cellres/residue.hpp"

#include "cellres/error.hpp"
#include "cellres/hull.hpp"

#include <algorithm>

namespace cellres {

CHProduct CHProduct::make(int sign, const ExponentVector& alpha) {
  if (sign == 0 || std::any_of(alpha.begin(), alpha.end(), [](auto a) { return a < 1; })) return zero();
  return {sign > 0 ? 1 : -1, alpha};
}

int ch_action(const CHProduct& c, const ExponentVector& beta) {
  if (c.is_zero()) return 0;
  require_same_length(c.alpha, beta);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] != c.alpha[i] - 1) return 0;
  }
  return c.sign;
}

CHProduct monomial_times_ch(const ExponentVector& gamma, const CHProduct& c) {
  if (c.is_zero()) return CHProduct::zero();
  require_same_length(c.alpha, gamma);
  ExponentVector rest(c.alpha.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (c.alpha[i] - gamma[i] < 1) return CHProduct::zero();
    rest.set(i, c.alpha[i] - gamma[i]);
  }
  return {c.sign, rest};
}

namespace {

FaceIndex top_face(const LabeledCellComplex& delta) {
  return delta.faces_of_dim(static_cast<int>(delta.nvars()) - 1).front();
}

LabeledCellComplex checked_delta(const LabeledCellComplex& x, const ExponentVector& b) {
  LabeledCellComplex delta = delta_complex(x, b);
  const auto report = check_refinement(x, delta);
  if (!report.ok) throw PreconditionError("X refines Delta", report.reason);
  if (x.dimension() != static_cast<int>(b.size()) - 1) {
    throw PreconditionError("X refines Delta", "X is not (n-1)-dimensional");
  }
  return delta;
}

ResidueEntry entry_for(const LabeledCellComplex& x, FaceIndex sigma, CHProduct value) {
  return {sigma, x.vertex_ids(sigma), std::move(value)};
}

}  // namespace

ResidueCurrent residue_from_theorem(const LabeledCellComplex& x, const ExponentVector& b, unsigned jobs) {
  const LabeledCellComplex delta = checked_delta(x, b);
  const auto exact = is_exact(x, vertex_ideal(x), jobs);
  if (!exact.ok) throw PreconditionError("F_X is exact", "reduced homology at degree " + to_string(*exact.witness));
  const Face& d = delta.face(top_face(delta));
  ResidueCurrent r;
  for (FaceIndex sigma : x.faces_of_dim(static_cast<int>(b.size()) - 1)) {
    const Face& f = x.face(sigma);
    r.entries.push_back(entry_for(x, sigma, CHProduct::make(sign_same_span(f, d), f.label)));
  }
  return r;
}

Comparison comparison_maps(const LabeledCellComplex& x, const ExponentVector& b) {
  LabeledCellComplex delta = checked_delta(x, b);
  const int n = static_cast<int>(b.size());
  ChainMap a;
  a.maps.emplace_back(1, 1);
  a.maps.back()(0, 0) = SignedMonomial(1, ExponentVector(b.size()));
  for (int k = 0; k < n; ++k) {
    const auto rows = x.faces_of_dim(k);
    const auto cols = delta.faces_of_dim(k);
    SignedMonomialMatrix ak(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Face& sigma = delta.face(cols[j]);
      for (FaceIndex sub : contained_faces(delta, cols[j], x, k)) {
        const auto i = std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin();
        const Face& s = x.face(sub);
        ak(i, static_cast<Eigen::Index>(j)) = SignedMonomial(sign_same_span(s, sigma), quotient(sigma.label, s.label));
      }
    }
    a.maps.push_back(std::move(ak));
  }
  FreeComplex psi = cellular_complex(delta);
  FreeComplex phi = cellular_complex(x);
  return {std::move(delta), std::move(psi), std::move(phi), std::move(a)};
}

ComparisonReport verify_chain_map(const ChainMap& a, const FreeComplex& psi, const FreeComplex& phi) {
  const int n = static_cast<int>(a.maps.size()) - 1;
  for (int k = 0; k < n; ++k) {
    const PolyMatrix lhs = multiply(to_polynomial(a.a(k - 1)), to_polynomial(psi.phi(k)));
    const PolyMatrix rhs = multiply(to_polynomial(phi.phi(k)), to_polynomial(a.a(k)));
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
      throw PreconditionError("compatible chain map", "shape mismatch at k = " + std::to_string(k));
    }
    for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
      if (lhs.col(j) != rhs.col(j)) return {false, std::pair{k, psi.basis(k)[static_cast<std::size_t>(j)]}};
    }
  }
  return {};
}

ComparisonReport verify_comparison(const LabeledCellComplex& x, const ExponentVector& b) {
  const Comparison c = comparison_maps(x, b);
  return verify_chain_map(c.maps, c.koszul, c.cellular);
}

ResidueCurrent residue_via_comparison(const LabeledCellComplex& x, const ExponentVector& b) {
  const Comparison c = comparison_maps(x, b);
  const auto report = verify_chain_map(c.maps, c.koszul, c.cellular);
  if (!report.ok) throw PreconditionError("comparison maps commute", "k = " + std::to_string(report.witness->first));
  const int n = static_cast<int>(b.size());
  const CHProduct koszul_current = CHProduct::make(1, b);
  const auto& top = c.maps.a(n - 1);
  const auto rows = x.faces_of_dim(n - 1);
  ResidueCurrent r;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SignedMonomial& entry = top(static_cast<Eigen::Index>(i), 0);
    CHProduct value = entry.is_zero() ? CHProduct::zero()
                                      : monomial_times_ch(entry.exponent, CHProduct{entry.sign * koszul_current.sign,
                                                                                    koszul_current.alpha});
    r.entries.push_back(entry_for(x, rows[i], std::move(value)));
  }
  return r;
}

bool annihilator_contains(const ResidueCurrent& r, const ExponentVector& beta) {
  for (const auto& e : r.entries) {
    if (e.value.is_zero()) continue;
    require_same_length(e.value.alpha, beta);
    bool kills = false;
    for (std::size_t i = 0; i < beta.size() && !kills; ++i) kills = beta[i] >= e.value.alpha[i];
    if (!kills) return false;
  }
  return true;
}

DualityReport duality_check(const ResidueCurrent& r, const MonomialIdeal& m) {
  DualityReport report;
  for_each_in_box(pure_power_exponents(m), [&](const ExponentVector& beta) {
    if (annihilator_contains(r, beta) == m.contains(beta)) return true;
    report = {false, beta};
    return false;
  });
  return report;
}

std::vector<IrreducibleComponent> irreducible_components(const ResidueCurrent& r) {
  std::vector<IrreducibleComponent> out;
  for (const auto& e : r.entries) {
    if (!e.value.is_zero()) out.emplace_back(e.value.alpha);
  }
  return out;
}

}  // namespace cellres

#include "cellres/cycle.hpp"

#include "cellres/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cellres {

FormPolynomial::FormPolynomial(int value) {
  if (value != 0) throw PreconditionError("constant form", "nonzero constants need an exponent vector");
}

FormPolynomial::FormPolynomial(const ExponentVector& exponent, std::uint32_t dz, const Rational& coefficient) {
  add_term(exponent, dz, coefficient);
}

Rational FormPolynomial::coefficient(const ExponentVector& exponent, std::uint32_t dz) const {
  const auto it = terms_.find({exponent, dz});
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormPolynomial::add_term(const ExponentVector& exponent, std::uint32_t dz, const Rational& coefficient) {
  if (coefficient == 0) return;
  if (!terms_.empty()) require_same_length(terms_.begin()->first.first, exponent);
  auto [it, inserted] = terms_.try_emplace(Key{exponent, dz}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

FormPolynomial& FormPolynomial::operator+=(const FormPolynomial& other) {
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

int shuffle_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  // Each dz_i of a must pass every dz_j of b with j < i.
  int swaps = 0;
  for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
    const auto i = static_cast<unsigned>(std::countr_zero(rest));
    swaps += std::popcount(b & ((std::uint32_t{1} << i) - 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

FormPolynomial operator*(const FormPolynomial& a, const FormPolynomial& b) {
  FormPolynomial out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const int sign = shuffle_sign(ka.second, kb.second);
      if (sign == 0) continue;
      out.add_term(product(ka.first, kb.first), ka.second | kb.second, sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  }
  return out;
}

namespace {

FormMatrix differentiate_in(const FreeComplex& f, int k, const std::vector<std::size_t>& variables) {
  if (k < 0 || k > f.length()) throw PreconditionError("0 <= k <= N", "no differential phi_" + std::to_string(k));
  const auto& phi = f.phi(k);
  FormMatrix out(phi.rows(), phi.cols());
  for (Eigen::Index i = 0; i < phi.rows(); ++i) {
    for (Eigen::Index j = 0; j < phi.cols(); ++j) {
      const SignedMonomial& entry = phi(i, j);
      FormPolynomial form;
      if (!entry.is_zero()) {
        for (std::size_t v : variables) {
          const auto power = entry.exponent[v];
          if (power == 0) continue;
          ExponentVector lowered = entry.exponent;
          lowered.set(v, power - 1);
          form += FormPolynomial(lowered, std::uint32_t{1} << v, Rational(entry.sign * power));
        }
      }
      out(i, j) = std::move(form);
    }
  }
  return out;
}

int parity_sign(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

// sum over top faces of sign_sigma * coefficient of z^{alpha - 1} dz_1..dz_n.
Integer contract(const FormMatrix& row, const ResidueCurrent& r, std::size_t n) {
  if (row.rows() != 1 || static_cast<std::size_t>(row.cols()) != r.entries.size()) {
    throw PreconditionError("current matches complex", "top-degree shape mismatch");
  }
  const std::uint32_t volume = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  Rational total = 0;
  for (std::size_t j = 0; j < r.entries.size(); ++j) {
    const CHProduct& c = r.entries[j].value;
    if (c.is_zero()) continue;
    ExponentVector beta(n);
    for (std::size_t i = 0; i < n; ++i) beta.set(i, c.alpha[i] - 1);
    total += c.sign * row(0, static_cast<Eigen::Index>(j)).coefficient(beta, volume);
  }
  if (denominator(total) != 1) throw std::logic_error("non-integral cycle coefficient");
  return numerator(total);
}

void require_top_degree(const FreeComplex& f) {
  if (f.length() != static_cast<int>(f.nvars()) - 1) {
    throw PreconditionError("X is (n-1)-dimensional", "complex length differs from n - 1");
  }
  if (f.nvars() > 32) throw PreconditionError("n <= 32", "too many variables for form masks");
}

ResidueCurrent checked_current(const LabeledCellComplex& x, const MonomialIdeal& m, const ExponentVector& b) {
  if (!(vertex_ideal(x) == m)) throw PreconditionError("vertex labels generate M", "ideal mismatch");
  return residue_from_theorem(x, b);
}

}  // namespace

FormMatrix differentiate(const FreeComplex& f, int k) {
  std::vector<std::size_t> all(f.nvars());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return differentiate_in(f, k, all);
}

FormMatrix partial_only(const FreeComplex& f, int k, std::size_t variable) {
  if (variable >= f.nvars()) throw PreconditionError("variable index < n", std::to_string(variable));
  return differentiate_in(f, k, {variable});
}

FormMatrix compose(const std::vector<FormMatrix>& factors) {
  if (factors.empty()) throw PreconditionError("nonempty composition", "no factors");
  FormMatrix acc = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const FormMatrix& next = factors[f];
    if (acc.cols() != next.rows()) throw PreconditionError("compatible dimensions", "form matrix product");
    FormMatrix out(acc.rows(), next.cols());
    for (Eigen::Index i = 0; i < acc.rows(); ++i) {
      for (Eigen::Index j = 0; j < next.cols(); ++j) {
        FormPolynomial sum;
        for (Eigen::Index l = 0; l < acc.cols(); ++l) {
          if (acc(i, l).is_zero() || next(l, j).is_zero()) continue;
          sum += acc(i, l) * next(l, j);
        }
        out(i, j) = std::move(sum);
      }
    }
    acc = std::move(out);
  }
  return acc;
}

int cycle_constant(std::size_t n) { return parity_sign(n * n) * parity_sign(n * (n - 1) / 2); }

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

CycleReport fundamental_cycle_check(const FreeComplex& f, const ResidueCurrent& r, const MonomialIdeal& m) {
  require_top_degree(f);
  const std::size_t n = f.nvars();
  std::vector<FormMatrix> factors;
  for (int k = 0; k < static_cast<int>(n); ++k) factors.push_back(differentiate(f, k));
  CycleReport report;
  report.lhs = parity_sign(n * (n - 1) / 2) * contract(compose(factors), r, n);
  report.rhs = factorial(static_cast<unsigned>(n)) * multiplicity(m);
  report.ok = report.lhs == report.rhs;
  return report;
}

CycleReport permutation_cycle_check(const FreeComplex& f, const ResidueCurrent& r, const MonomialIdeal& m,
                                    const std::vector<std::size_t>& s) {
  require_top_degree(f);
  const std::size_t n = f.nvars();
  std::vector<std::size_t> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  if (sorted != identity) throw PreconditionError("s is a permutation of 0..n-1", "invalid permutation");
  std::vector<FormMatrix> factors;
  for (int k = 0; k < static_cast<int>(n); ++k) factors.push_back(partial_only(f, k, s[static_cast<std::size_t>(k)]));
  CycleReport report;
  report.lhs = parity_sign(n * n) * contract(compose(factors), r, n);
  report.rhs = cycle_constant(n) * multiplicity(m);
  report.ok = report.lhs == report.rhs;
  return report;
}

CycleReport fundamental_cycle_check(const LabeledCellComplex& x, const MonomialIdeal& m, const ExponentVector& b) {
  const ResidueCurrent r = checked_current(x, m, b);
  return fundamental_cycle_check(cellular_complex(x), r, m);
}

CycleReport permutation_cycle_check(const LabeledCellComplex& x, const MonomialIdeal& m, const ExponentVector& b,
                                    const std::vector<std::size_t>& s) {
  const ResidueCurrent r = checked_current(x, m, b);
  return permutation_cycle_check(cellular_complex(x), r, m, s);
}

Integer Rectangle2D::area() const { return Integer(x_hi - x_lo) * Integer(y_hi - y_lo); }

bool Rectangle2D::contains(ExponentVector::value_type x, ExponentVector::value_type y) const {
  return x_lo <= x && x < x_hi && y_lo <= y && y < y_hi;
}

std::vector<Rectangle2D> staircase_partition_2d(const MonomialIdeal& m, PartitionOrder order) {
  const auto corners = staircase_corners_2d(m);
  std::vector<Rectangle2D> out;
  for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
    const auto [a, b] = corners[i];
    const auto [a_next, b_next] = corners[i + 1];
    if (order == PartitionOrder::P) {
      out.push_back({0, a, b, b_next});
    } else {
      out.push_back({a_next, a, 0, b_next});
    }
  }
  return out;
}

}  // namespace cellres

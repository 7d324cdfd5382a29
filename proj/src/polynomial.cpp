#include "cellres/polynomial.hpp"

#include "cellres/error.hpp"

#include <sstream>

namespace cellres {

Polynomial::Polynomial(int value) {
  if (value != 0) {
    throw PreconditionError("constant polynomial", "nonzero constants need an exponent vector");
  }
}

Polynomial::Polynomial(const ExponentVector& exponent, const Integer& coefficient) {
  add_term(exponent, coefficient);
}

Integer Polynomial::coefficient(const ExponentVector& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  if (!terms_.empty()) require_same_length(terms_.begin()->first, exponent);
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, Integer(-c));
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  Polynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) out.add_term(product(e1, e2), c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << c << "*z^" << to_string(e);
  }
  return out.str();
}

PolyMatrix to_polynomial(const SignedMonomialMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_polynomial(m(i, j));
  }
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("compatible dimensions", "polynomial matrix product");
  PolyMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Polynomial sum;
      for (Eigen::Index l = 0; l < a.cols(); ++l) {
        if (a(i, l).is_zero() || b(l, j).is_zero()) continue;
        sum += a(i, l) * b(l, j);
      }
      out(i, j) = std::move(sum);
    }
  }
  return out;
}

}  // namespace cellres

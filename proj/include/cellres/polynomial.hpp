#pragma once

// Sparse polynomials with Integer coefficients, usable as an Eigen scalar,
// and signed monomials: the entries of cellular differentials and chain maps.

#include "cellres/exponent.hpp"
#include "cellres/rational.hpp"

#include <Eigen/Core>

#include <map>
#include <string>

namespace cellres {

/// Polynomial in C[z_1..z_n] with integer coefficients; zero terms are never
/// stored, so equality is structural.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, Integer>;

  Polynomial() = default;
  /// Integer constants; only 0 is meaningful without a variable count, so
  /// nonzero constants need the exponent form.
  Polynomial(int value);  // NOLINT(google-explicit-constructor): Eigen builds scalars from literals
  Polynomial(const ExponentVector& exponent, const Integer& coefficient);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const ExponentVector& exponent) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const ExponentVector& exponent, const Integer& coefficient);
  Terms terms_;
};

std::string to_string(const Polynomial& p);

/// sign * z^exponent; sign 0 is the canonical zero entry.
struct SignedMonomial {
  int sign = 0;
  ExponentVector exponent;

  SignedMonomial() = default;
  SignedMonomial(int value) : sign(value == 0 ? 0 : (value > 0 ? 1 : -1)) {}  // NOLINT
  SignedMonomial(int s, ExponentVector e) : sign(s), exponent(s == 0 ? ExponentVector() : std::move(e)) {}

  bool is_zero() const noexcept { return sign == 0; }
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

inline Polynomial to_polynomial(const SignedMonomial& m) {
  return m.is_zero() ? Polynomial() : Polynomial(m.exponent, Integer(m.sign));
}

}  // namespace cellres

namespace Eigen {

template <>
struct NumTraits<cellres::Polynomial> : GenericNumTraits<cellres::Polynomial> {
  using Real = cellres::Polynomial;
  using NonInteger = cellres::Polynomial;
  using Nested = cellres::Polynomial;
  using Literal = cellres::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };
};

template <>
struct NumTraits<cellres::SignedMonomial> : GenericNumTraits<cellres::SignedMonomial> {
  using Real = cellres::SignedMonomial;
  using NonInteger = cellres::SignedMonomial;
  using Nested = cellres::SignedMonomial;
  using Literal = cellres::SignedMonomial;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 5,
    AddCost = 50,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace cellres {

using PolyMatrix = MatrixX<Polynomial>;
using SignedMonomialMatrix = MatrixX<SignedMonomial>;

/// Entrywise conversion; the product of two such matrices is a PolyMatrix.
PolyMatrix to_polynomial(const SignedMonomialMatrix& m);

/// Matrix product of polynomial matrices (explicit loop, no reassociation).
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace cellres

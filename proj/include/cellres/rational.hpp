#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace cellres {

// Expression templates are disabled so that `auto` and Eigen's generic
// kernels always see concrete values.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;
using IntegerMatrix = MatrixX<Integer>;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always emits the "p/q" form, with q = 1 for integers.
std::string format_rational(const Rational& value);

template <typename Scalar>
int sign_of(const Scalar& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

Integer factorial(unsigned n);

}  // namespace cellres

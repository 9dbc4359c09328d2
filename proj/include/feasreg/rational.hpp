#pragma once

// Exact scalar types and the dense Eigen aliases used across the library.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace feasreg {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using IntMatrix = Matrix<Integer>;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q". Throws InvalidArgument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace feasreg

#ifndef DG2_UNIVARIATE_HPP
#define DG2_UNIVARIATE_HPP

#include <vector>

#include "dg2/poly.hpp"

namespace dg2 {

/// Dense coefficients c[0] + c[1] s + ... of a polynomial in s alone.
/// Throws if other symbols occur or a coefficient is irrational.
std::vector<Rational> dense_coefficients(const Poly& p, Symbol s);

Poly from_dense(const std::vector<Rational>& coeffs, Symbol s);

/// Monic gcd over Q; the gcd of two zero polynomials is zero (empty vector).
std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b);

/// Replaces s^(2j) by s^j. Throws if an odd power of s occurs.
Poly halve_powers(const Poly& p, Symbol s);

/// Divides out the largest power of s dividing every term.
Poly strip_power(const Poly& p, Symbol s);

/// Distinct real roots of a nonzero univariate polynomial with rational
/// coefficients, ascending. Rational roots are found exactly; a leftover
/// factor must have degree <= 2 (its roots then lie in one quadratic
/// extension), otherwise std::domain_error is thrown.
std::vector<Scalar> real_roots(const Poly& p, Symbol s);

}  // namespace dg2

#endif  // DG2_UNIVARIATE_HPP

#ifndef DG2_SCALAR_HPP
#define DG2_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dg2 {

using Rational = mpq_class;

/// Raised when two values living in different quadratic extensions meet.
class ExtensionMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "p/q", an integer, or a plain decimal such as "-0.125".
Rational parse_rational(std::string_view text);

/// Always renders as "p/q", including a denominator of 1.
std::string format_rational(const Rational& r);

/// Exact element p + q*sqrt(d) of Q(sqrt(d)).
///
/// d is square-free. Pure rationals are stored with q = 0 and d = 0, so
/// canonical forms are unique and equality is member-wise. Values with
/// different nonzero d never combine: arithmetic throws ExtensionMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : p_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational value) : p_(std::move(value)) { p_.canonicalize(); }  // NOLINT
  Scalar(Rational rational, Rational irrational, long radicand);

  /// sqrt(r) for r >= 0, as an element of Q(sqrt(squarefree part of r)).
  static Scalar sqrt(const Rational& r);

  const Rational& rational_part() const { return p_; }
  const Rational& irrational_part() const { return q_; }
  long radicand() const { return d_; }

  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  bool is_rational() const { return d_ == 0; }
  int sign() const;

  Scalar conjugate() const;
  /// (p + q sqrt d)(p - q sqrt d) = p^2 - q^2 d.
  Rational norm() const;
  Scalar inverse() const;
  double to_double() const;

  /// Throws if the value is irrational.
  const Rational& as_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

  std::string to_string() const;

 private:
  void canonicalize();
  long common_radicand(const Scalar& o) const;

  Rational p_{0};
  Rational q_{0};
  long d_ = 0;
};

/// Splits a positive integer n as s^2 * d with d square-free; returns {s, d}.
std::pair<mpz_class, mpz_class> split_square(const mpz_class& n);

}  // namespace dg2

#endif  // DG2_SCALAR_HPP

#ifndef DG2_POLY_HPP
#define DG2_POLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dg2/scalar.hpp"

namespace dg2 {

/// The fixed, ordered symbol table. Term order and rendering follow this
/// order; symbols are never created at runtime.
enum class Symbol : std::uint8_t { t, a1, a2, a3, s, lambda, c, b1, b2, b3, k };

inline constexpr std::size_t kSymbolCount = 11;

/// Coordinates of the reduced functional: x = a3 and y = a1 (with a2 = 0).
namespace sym {
inline constexpr Symbol x = Symbol::a3;
inline constexpr Symbol y = Symbol::a1;
}  // namespace sym

class UnknownSymbol : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnboundSymbol : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view symbol_name(Symbol s);
Symbol symbol_from_name(std::string_view name);

using Exponents = std::array<std::uint8_t, kSymbolCount>;

/// Graded-lex order, descending: higher total degree first, ties broken by
/// the larger exponent on the earlier symbol.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Scalar in the fixed symbol table.
/// Zero coefficients are never stored, so structural equality is equality.
class Poly {
 public:
  using Terms = std::map<Exponents, Scalar, GrlexDescending>;

  Poly() = default;
  Poly(Scalar c);                                 // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Scalar(c)) {}               // NOLINT(google-explicit-constructor)
  Poly(Rational c) : Poly(Scalar(std::move(c))) {}  // NOLINT(google-explicit-constructor)

  static Poly var(Symbol s);
  static Poly monomial(const Exponents& e, Scalar c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Throws if the polynomial is not constant.
  Scalar constant_value() const;
  bool uses(Symbol s) const;
  int degree(Symbol s) const;
  int total_degree() const;
  /// The common radicand of all coefficients (0 when purely rational).
  long extension() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned n) const;

  /// Simultaneous substitution of every bound symbol.
  Poly substitute(const std::map<Symbol, Poly>& bindings) const;
  Poly substitute(const std::map<std::string, Poly>& bindings) const;

  Poly differentiate(Symbol s) const;
  /// Integral over s in [0, 1]; s^j becomes 1/(j+1).
  Poly integrate_unit_interval(Symbol s) const;
  double eval_float(const std::map<Symbol, double>& bindings) const;

  /// Rewrites every power s^(2m+r) as s^r * value^m, i.e. imposes s^2 = value.
  Poly reduce_square(Symbol s, const Poly& value) const;
  /// Coefficient of s^power, as a polynomial in the remaining symbols.
  Poly coefficient(Symbol s, int power) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

Exponents add_exponents(const Exponents& a, const Exponents& b);

}  // namespace dg2

#endif  // DG2_POLY_HPP

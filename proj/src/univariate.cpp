#include "dg2/univariate.hpp"

#include <algorithm>

namespace dg2 {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Rational evaluate(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (s - root); the remainder is assumed zero.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& root) {
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c.size() - 1; i > 0; --i) {
    carry = carry * root + c[i];
    q[i - 1] = carry;
  }
  return q;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class f = 1; f * f <= n; ++f) {
    if (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t()) != 0) {
      out.push_back(f);
      if (f * f != n) out.push_back(n / f);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> dense_coefficients(const Poly& p, Symbol s) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree(s)) + 1, Rational(0));
  for (const auto& [e, coeff] : p.terms()) {
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (static_cast<Symbol>(i) != s && e[i] != 0) {
        throw std::domain_error("polynomial " + p.to_string() + " is not univariate in " +
                                std::string(symbol_name(s)));
      }
    }
    c[e[static_cast<std::size_t>(s)]] = coeff.as_rational();
  }
  trim(c);
  return c;
}

Poly from_dense(const std::vector<Rational>& coeffs, Symbol s) {
  Poly r;
  Exponents e{};
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    e[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(j);
    r += Poly::monomial(e, Scalar(coeffs[j]));
  }
  return r;
}

std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

Poly halve_powers(const Poly& p, Symbol s) {
  Poly r;
  for (const auto& [e, c] : p.terms()) {
    auto j = e[static_cast<std::size_t>(s)];
    if (j % 2 != 0) {
      throw std::domain_error("odd power of " + std::string(symbol_name(s)) + " in " +
                              p.to_string());
    }
    Exponents h = e;
    h[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(j / 2);
    r += Poly::monomial(h, c);
  }
  return r;
}

Poly strip_power(const Poly& p, Symbol s) {
  if (p.is_zero()) return p;
  int lowest = 255;
  for (const auto& [e, c] : p.terms()) lowest = std::min(lowest, int{e[static_cast<std::size_t>(s)]});
  Poly r;
  for (const auto& [e, c] : p.terms()) {
    Exponents h = e;
    h[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(e[static_cast<std::size_t>(s)] - lowest);
    r += Poly::monomial(h, c);
  }
  return r;
}

std::vector<Scalar> real_roots(const Poly& p, Symbol s) {
  std::vector<Rational> c = dense_coefficients(p, s);
  if (c.empty()) throw std::domain_error("real_roots of the zero polynomial");

  std::vector<Scalar> roots;
  if (sgn(c.front()) == 0) {
    roots.emplace_back(0);
    auto first = std::find_if(c.begin(), c.end(), [](const Rational& x) { return sgn(x) != 0; });
    c.erase(c.begin(), first);
  }

  // Integer coefficients for the rational root test.
  mpz_class lcm = 1;
  for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& x : c) ints.emplace_back(x * lcm);

  if (c.size() > 1) {
    auto numerators = positive_divisors(ints.front());
    auto denominators = positive_divisors(ints.back());
    for (const auto& num : numerators) {
      for (const auto& den : denominators) {
        for (int sign : {1, -1}) {
          Rational cand(mpz_class(sign * num), den);
          cand.canonicalize();
          if (c.size() <= 1) break;
          if (sgn(evaluate(c, cand)) != 0) continue;
          if (std::none_of(roots.begin(), roots.end(),
                           [&](const Scalar& r) { return r == Scalar(cand); })) {
            roots.emplace_back(cand);
          }
          while (c.size() > 1 && sgn(evaluate(c, cand)) == 0) c = deflate(c, cand);
        }
      }
    }
  }

  if (c.size() == 3) {
    const Rational& a = c[2];
    const Rational& b = c[1];
    const Rational& k = c[0];
    Rational disc = b * b - 4 * a * k;
    if (sgn(disc) > 0) {
      Scalar root = Scalar::sqrt(disc);
      Scalar denom(Rational(2 * a));
      roots.push_back((Scalar(Rational(-b)) + root) / denom);
      roots.push_back((Scalar(Rational(-b)) - root) / denom);
    }
  } else if (c.size() > 3) {
    throw std::domain_error("irreducible factor of degree " + std::to_string(c.size() - 1) +
                            " has no closed-form roots here");
  }

  std::sort(roots.begin(), roots.end(),
            [](const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; });
  return roots;
}

}  // namespace dg2

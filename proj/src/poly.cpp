#include "dg2/poly.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace dg2 {

namespace {

constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "t", "a1", "a2", "a3", "s", "lambda", "c", "b1", "b2", "b3", "k"};

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::size_t index(Symbol s) { return static_cast<std::size_t>(s); }

}  // namespace

std::string_view symbol_name(Symbol s) { return kSymbolNames[index(s)]; }

Symbol symbol_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    if (kSymbolNames[i] == name) return static_cast<Symbol>(i);
  }
  throw UnknownSymbol("unknown symbol '" + std::string(name) + "'");
}

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  int da = total(a);
  int db = total(b);
  if (da != db) return da > db;
  return a > b;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    unsigned v = unsigned{a[i]} + unsigned{b[i]};
    if (v > std::numeric_limits<std::uint8_t>::max()) {
      throw std::overflow_error("exponent overflow in symbol " + std::string(kSymbolNames[i]));
    }
    r[i] = static_cast<std::uint8_t>(v);
  }
  return r;
}

Poly::Poly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

Poly Poly::var(Symbol s) {
  Exponents e{};
  e[index(s)] = 1;
  return monomial(e, Scalar(1));
}

Poly Poly::monomial(const Exponents& e, Scalar c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Scalar Poly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial " + to_string() + " is not constant");
  return terms_.empty() ? Scalar() : terms_.begin()->second;
}

bool Poly::uses(Symbol s) const { return degree(s) > 0; }

int Poly::degree(Symbol s) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, int{e[index(s)]});
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

long Poly::extension() const {
  long d = 0;
  for (const auto& [e, c] : terms_) {
    if (c.radicand() == 0) continue;
    if (d != 0 && d != c.radicand()) throw ExtensionMismatch("mixed extensions in polynomial");
    d = c.radicand();
  }
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = add_exponents(ea, eb);
      Scalar c = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(const std::map<Symbol, Poly>& bindings) const {
  // powers[sym][j] = binding^j, filled lazily
  std::map<Symbol, std::vector<Poly>> powers;
  auto power_of = [&](Symbol s, int j) -> const Poly& {
    auto& cache = powers[s];
    if (cache.empty()) cache.emplace_back(1);
    while (static_cast<int>(cache.size()) <= j) cache.push_back(cache.back() * bindings.at(s));
    return cache[j];
  };

  Poly result;
  for (const auto& [e, c] : terms_) {
    Exponents kept = e;
    Poly factor(c);
    for (const auto& [s, value] : bindings) {
      int j = e[index(s)];
      if (j == 0) continue;
      kept[index(s)] = 0;
      factor *= power_of(s, j);
    }
    result += factor * monomial(kept, Scalar(1));
  }
  return result;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings) const {
  std::map<Symbol, Poly> resolved;
  for (const auto& [name, value] : bindings) resolved.emplace(symbol_from_name(name), value);
  return substitute(resolved);
}

Poly Poly::differentiate(Symbol s) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    int j = e[index(s)];
    if (j == 0) continue;
    Exponents de = e;
    de[index(s)] = static_cast<std::uint8_t>(j - 1);
    r += monomial(de, c * Scalar(j));
  }
  return r;
}

Poly Poly::integrate_unit_interval(Symbol s) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    int j = e[index(s)];
    Exponents ie = e;
    ie[index(s)] = 0;
    r += monomial(ie, c * Scalar(Rational(1, j + 1)));
  }
  return r;
}

double Poly::eval_float(const std::map<Symbol, double>& bindings) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.to_double();
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (e[i] == 0) continue;
      auto it = bindings.find(static_cast<Symbol>(i));
      if (it == bindings.end()) {
        throw UnboundSymbol("symbol '" + std::string(kSymbolNames[i]) + "' is unbound");
      }
      term *= std::pow(it->second, e[i]);
    }
    sum += term;
  }
  return sum;
}

Poly Poly::reduce_square(Symbol s, const Poly& value) const {
  std::vector<Poly> powers{Poly(1)};
  Poly r;
  for (const auto& [e, c] : terms_) {
    int j = e[index(s)];
    int m = j / 2;
    while (static_cast<int>(powers.size()) <= m) powers.push_back(powers.back() * value);
    Exponents re = e;
    re[index(s)] = static_cast<std::uint8_t>(j % 2);
    r += monomial(re, c) * powers[m];
  }
  return r;
}

Poly Poly::coefficient(Symbol s, int power) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    if (e[index(s)] != power) continue;
    Exponents re = e;
    re[index(s)] = 0;
    r += monomial(re, c);
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool unit_monomial = e == Exponents{};
    bool negative = c.is_rational() && c.sign() < 0;
    Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    if (unit_monomial || !(magnitude == Scalar(1))) {
      out << magnitude.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << kSymbolNames[i];
      if (e[i] > 1) out << "^" << int{e[i]};
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace dg2

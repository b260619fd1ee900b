#include "dg2/scalar.hpp"

#include <cmath>
#include <sstream>

namespace dg2 {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto bad = [&] { return std::invalid_argument("malformed rational '" + s + "'"); };

  if (auto dot = s.find('.'); dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw bad();
    bool negative = s[0] == '-';
    std::string digits = s.substr(negative || s[0] == '+' ? 1 : 0);
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot);
    std::string frac = digits.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw bad();
    for (char ch : whole + frac) {
      if (ch < '0' || ch > '9') throw bad();
    }
    mpz_class num(whole + frac, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  auto check_int = [&](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw bad();
    }
  };
  std::string num = s;
  std::string den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  check_int(num);
  check_int(den);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(mpz_class(num, 10), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::pair<mpz_class, mpz_class> split_square(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("split_square expects a positive integer");
  mpz_class rest = n;
  mpz_class root = 1;
  mpz_class free = 1;
  for (mpz_class f = 2; f * f <= rest; ++f) {
    while (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t()) != 0) {
      rest /= f;
      if (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t()) != 0) {
        rest /= f;
        root *= f;
      } else {
        free *= f;
      }
    }
  }
  free *= rest;
  return {root, free};
}

Scalar::Scalar(Rational rational, Rational irrational, long radicand)
    : p_(std::move(rational)), q_(std::move(irrational)), d_(radicand) {
  if (d_ < 0) throw std::domain_error("negative radicand");
  if (d_ > 1) {
    auto [root, free] = split_square(mpz_class(d_));
    if (root != 1) throw std::domain_error("radicand must be square-free");
  }
  p_.canonicalize();
  q_.canonicalize();
  canonicalize();
}

void Scalar::canonicalize() {
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  if (sgn(q_) == 0) d_ = 0;
  if (d_ == 0) q_ = 0;
}

Scalar Scalar::sqrt(const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("sqrt of a negative rational");
  if (sgn(r) == 0) return {};
  // sqrt(a/b) = sqrt(a*b)/b
  mpz_class prod = r.get_num() * r.get_den();
  auto [root, free] = split_square(prod);
  Rational coeff(root, r.get_den());
  coeff.canonicalize();
  if (free == 1) return Scalar(coeff);
  if (!free.fits_slong_p()) throw std::overflow_error("radicand too large");
  return Scalar(Rational(0), coeff, free.get_si());
}

long Scalar::common_radicand(const Scalar& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw ExtensionMismatch("cannot combine sqrt(" + std::to_string(d_) + ") with sqrt(" +
                          std::to_string(o.d_) + ")");
}

int Scalar::sign() const {
  int sp = sgn(p_);
  int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  Rational lhs = p_ * p_;
  Rational rhs = q_ * q_ * d_;
  return lhs > rhs ? sp : sq;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.q_ = -r.q_;
  return r;
}

Rational Scalar::norm() const { return p_ * p_ - q_ * q_ * d_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Rational n = norm();
  Scalar r;
  r.p_ = p_ / n;
  r.q_ = -q_ / n;
  r.d_ = d_;
  r.canonicalize();
  return r;
}

double Scalar::to_double() const {
  if (d_ == 0) return p_.get_d();
  return p_.get_d() + q_.get_d() * std::sqrt(static_cast<double>(d_));
}

const Rational& Scalar::as_rational() const {
  if (d_ != 0) throw std::domain_error("value " + to_string() + " is not rational");
  return p_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = common_radicand(o);
  p_ += o.p_;
  q_ += o.q_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = common_radicand(o);
  p_ -= o.p_;
  q_ -= o.q_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  long d = common_radicand(o);
  Rational p = p_ * o.p_ + q_ * o.q_ * d;
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  d_ = d;
  canonicalize();
  return *this;
}

std::string Scalar::to_string() const {
  auto rat = [](const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
  };
  if (d_ == 0) return rat(p_);
  std::ostringstream out;
  std::string radical = "sqrt(" + std::to_string(d_) + ")";
  std::string irr = q_ == 1    ? radical
                    : q_ == -1 ? "-" + radical
                               : rat(q_) + "*" + radical;
  if (sgn(p_) == 0) return irr;
  out << "(" << rat(p_) << (sgn(q_) > 0 ? " + " : " - ");
  Rational aq = abs(q_);
  out << (aq == 1 ? radical : rat(aq) + "*" + radical) << ")";
  return out.str();
}

}  // namespace dg2

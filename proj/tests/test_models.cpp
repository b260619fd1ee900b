#include <catch_amalgamated.hpp>

#include <random>

#include "dg2/models.hpp"

using dg2::Form;
using dg2::Poly;
using dg2::Rational;
using dg2::Scalar;
using dg2::Symbol;

namespace {

using Word = std::vector<std::string>;

const Poly t = Poly::var(Symbol::t);

Form substitute(const Form& f, const std::map<Symbol, Poly>& b) {
  return f.map_coefficients([&](const Poly& c) { return c.substitute(b); });
}

// Symmetric positive-definite Q = L L^T + I with small rational L.
dg2::RationalMatrix3 random_spd(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Rational l[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) l[i][j] = j <= i ? Rational(num(rng), den(rng)) : Rational(0);
  }
  dg2::RationalMatrix3 q{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational s = i == j ? 1 : 0;
      for (int m = 0; m < 3; ++m) s += l[i][m] * l[j][m];
      s.canonicalize();
      q[i][j] = s;
    }
  }
  return q;
}

}  // namespace

TEST_CASE("phi coefficients") {
  auto plus = dg2::make_sasakian(1);
  auto minus = dg2::make_sasakian(-1);
  Form phi_p = dg2::build_phi(plus);
  Form phi_m = dg2::build_phi(minus);
  CHECK(phi_p.coefficient(Word{"eta1", "eta2", "eta3"}) == t.pow(3));
  CHECK(phi_m.coefficient(Word{"eta1", "eta2", "eta3"}) == -t.pow(3));
  CHECK(phi_m.coefficient(Word{"eta3", "omega3"}) == t);
  CHECK(phi_p.coefficient(Word{"eta3", "omega3"}) == -t);
  CHECK(phi_m.coefficient(Word{"eta1", "omega1"}) == -t);
  CHECK(phi_p.degree() == 3);
}

TEST_CASE("psi coefficients and closedness") {
  for (int eps : {1, -1}) {
    auto p = dg2::make_sasakian(eps);
    Form psi = dg2::build_psi(p);
    CHECK(psi.degree() == 4);
    CHECK(psi.coefficient(Word{"eta1", "eta2", "omega3"}) == -t.pow(2));
    CHECK(psi.coefficient(Word{"eta2", "eta3", "omega1"}) == Poly(-eps) * t.pow(2));
    CHECK(psi.coefficient(Word{"eta3", "eta1", "omega2"}) == Poly(-eps) * t.pow(2));
    CHECK(psi.coefficient(Word{"v"}) == Poly(1));
    CHECK(differential(psi).is_zero());
    CHECK(differential(dg2::build_psi(dg2::make_sasakian(eps, true))).is_zero());
  }
  auto h = dg2::make_hypersymplectic(dg2::identity_matrix());
  Form hpsi = dg2::build_psi(h);
  CHECK(hpsi.coefficient(Word{"eta2", "eta3", "omega1"}) == -t.pow(2));
  CHECK(differential(hpsi).is_zero());
  auto c = dg2::make_cy3();
  CHECK(differential(dg2::build_psi(c)).is_zero());
  CHECK(differential(dg2::build_phi(c)).is_zero());
}

TEST_CASE("nearly parallel solutions") {
  auto plus = dg2::solve_nearly_parallel(1);
  REQUIRE(plus.size() == 1);
  CHECK(plus[0].u == Rational(1, 5));
  CHECK(plus[0].t == Scalar(0, Rational(1, 5), 5));
  CHECK(plus[0].lambda == Scalar(0, Rational(12, 5), 5));
  CHECK(plus[0].epsilon == 1);

  auto minus = dg2::solve_nearly_parallel(-1);
  REQUIRE(minus.size() == 1);
  CHECK(minus[0].u == Rational(1));
  CHECK(minus[0].t == Scalar(1));
  CHECK(minus[0].lambda == Scalar(4));

  for (const auto& s : {plus[0], minus[0]}) {
    auto p = dg2::make_sasakian(s.epsilon);
    Form r = dg2::differential(dg2::build_phi(p)) - Poly(s.lambda) * dg2::build_psi(p);
    CHECK(substitute(r, {{Symbol::t, Poly(s.t)}}).is_zero());
    // lambda = 4t(2 + eps)
    CHECK(s.lambda == Scalar(4 * (2 + s.epsilon)) * s.t);
  }
}

TEST_CASE("(t, lambda) = (1, 4) is not nearly parallel for eps = +1") {
  Form r = dg2::nearly_parallel_residual(dg2::make_sasakian(1));
  CHECK_FALSE(substitute(r, {{Symbol::t, Poly(1)}, {Symbol::lambda, Poly(4)}}).is_zero());
}

TEST_CASE("the ASD form wedges psi to zero") {
  for (int eps : {1, -1}) {
    auto p = dg2::make_sasakian(eps, true);
    CHECK(wedge(p.alpha(), dg2::build_psi(p)).is_zero());
    CHECK(wedge(p.alpha(), p.alpha()) == Poly(-2) * p.v());
    CHECK(dg2::check_pullback_asd(p).passed());
  }
  CHECK_THROWS(dg2::make_sasakian(1).alpha());
  CHECK_THROWS_AS(dg2::make_sasakian(0), std::invalid_argument);
}

TEST_CASE("hypersymplectic residual is -2 t^2 Q b") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    dg2::RationalMatrix3 q = trial == 0 ? dg2::identity_matrix() : random_spd(rng);
    auto h = dg2::make_hypersymplectic(q);
    const Poly b[3] = {Poly::var(Symbol::b1), Poly::var(Symbol::b2), Poly::var(Symbol::b3)};
    Form f = b[0] * h.omega(1) + b[1] * h.omega(2) + b[2] * h.omega(3) + Poly::var(Symbol::c) * h.alpha();
    Form psi = dg2::build_psi(h);
    Form fpsi = wedge(f, psi);
    const Word pairs[3] = {{"eta2", "eta3", "v"}, {"eta3", "eta1", "v"}, {"eta1", "eta2", "v"}};
    for (int l = 0; l < 3; ++l) {
      Poly qb;
      for (int m = 0; m < 3; ++m) qb += Poly(q[l][m]) * b[m];
      CHECK(fpsi.coefficient(pairs[l]) == Poly(-2) * t.pow(2) * qb);
    }
    CHECK(wedge(f, wedge(f, f)).is_zero());
    CHECK(dg2::check_pullback_asd(h).passed());
  }
}

TEST_CASE("hypersymplectic Q is validated") {
  CHECK(dg2::parse_q_matrix("1 0 0 0 1 0 0 0 1") == dg2::identity_matrix());
  CHECK(dg2::parse_q_matrix("2 1/2 0\n1/2 1 0\n0 0 3")[0][1] == Rational(1, 2));
  CHECK_THROWS_AS(dg2::parse_q_matrix("1 0 0 0 1 0 0 0"), std::invalid_argument);
  CHECK_THROWS_AS(dg2::parse_q_matrix("1 0 0 0 1 0 0 0 1 1"), std::invalid_argument);
  dg2::RationalMatrix3 asym = dg2::identity_matrix();
  asym[0][1] = 1;
  CHECK_THROWS_AS(dg2::make_hypersymplectic(asym), std::invalid_argument);
  dg2::RationalMatrix3 indefinite = dg2::identity_matrix();
  indefinite[2][2] = -1;
  CHECK_THROWS_AS(dg2::make_hypersymplectic(indefinite), std::invalid_argument);
  dg2::RationalMatrix3 singular = dg2::identity_matrix();
  singular[0][1] = singular[1][0] = 1;
  CHECK(dg2::determinant(singular) == 0);
  CHECK_THROWS_AS(dg2::make_hypersymplectic(singular), std::invalid_argument);
}

TEST_CASE("CY3 deformed residual is 3c - c^3") {
  auto p = dg2::make_cy3();
  CHECK(wedge(p.gen("omega"), wedge(p.gen("omega"), p.gen("omega"))) == Poly(6) * p.gen("vol6"));
  CHECK(wedge(p.gen("rho"), p.gen("sigma")) == Poly(4) * p.gen("vol6"));
  auto lemma = dg2::check_cy3_lemma(p);
  CHECK(lemma.report.passed());
  const Poly c = Poly::var(Symbol::c);
  CHECK(lemma.residual == Poly(3) * c - c.pow(3));
  REQUIRE(lemma.roots.size() == 3);
  CHECK(lemma.roots[0] == -Scalar::sqrt(Rational(3)));
  CHECK(lemma.roots[1] == Scalar(0));
  CHECK(lemma.roots[2] == Scalar::sqrt(Rational(3)));
  CHECK(lemma.residual.substitute(std::map<Symbol, Poly>{{Symbol::c, Poly(Scalar::sqrt(Rational(3)))}}).is_zero());
  CHECK_FALSE(lemma.residual.substitute(std::map<Symbol, Poly>{{Symbol::c, Poly(1)}}).is_zero());
}

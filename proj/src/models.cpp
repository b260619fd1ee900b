#include "dg2/models.hpp"

#include <sstream>

#include "dg2/univariate.hpp"

namespace dg2 {

namespace {

// (i, j, k) cyclic, 1-based.
struct Cyclic {
  int j;
  int k;
};

Cyclic cyclic(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("index must be 1, 2 or 3");
  return {i % 3 + 1, (i + 1) % 3 + 1};
}

std::string indexed(const char* base, int i) { return base + std::to_string(i); }

void require_sign(int epsilon) {
  if (epsilon != 1 && epsilon != -1) {
    throw std::invalid_argument("epsilon must be +1 or -1, got " + std::to_string(epsilon));
  }
}

Poly t() { return Poly::var(Symbol::t); }

std::vector<Generator> horizontal_generators(bool with_alpha) {
  std::vector<Generator> gens{{"eta1", 1},   {"eta2", 1},   {"eta3", 1},
                              {"omega1", 2}, {"omega2", 2}, {"omega3", 2}};
  if (with_alpha) gens.push_back({"alpha", 2});
  gens.push_back({"v", 4});
  return gens;
}

std::vector<Presentation::Relation> horizontal_relations(const RationalMatrix3& q,
                                                         bool with_alpha) {
  std::vector<Presentation::Relation> rels;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i; j <= 3; ++j) {
      const Rational& qij = q[i - 1][j - 1];
      Presentation::Relation rel{{indexed("omega", i), indexed("omega", j)}, {}};
      if (sgn(qij) != 0) rel.rhs.push_back({Scalar(Rational(2 * qij)), {"v"}});
      rels.push_back(std::move(rel));
    }
    rels.push_back({{indexed("omega", i), "v"}, {}});
  }
  rels.push_back({{"v", "v"}, {}});
  if (with_alpha) {
    for (int i = 1; i <= 3; ++i) rels.push_back({{"alpha", indexed("omega", i)}, {}});
    rels.push_back({{"alpha", "alpha"}, {{Scalar(-2), {"v"}}}});
    rels.push_back({{"alpha", "v"}, {}});
  }
  return rels;
}

Form gen_form(const PresentationPtr& algebra, std::vector<std::string> word) {
  return Form::product(algebra, word);
}

Form substitute(const Form& f, const std::map<Symbol, Poly>& bindings) {
  return f.map_coefficients([&](const Poly& c) { return c.substitute(bindings); });
}

}  // namespace

// --- 3-Sasakian -------------------------------------------------------------

Form SasakianPreset::eta(int i) const { return gen_form(algebra, {indexed("eta", i)}); }
Form SasakianPreset::omega(int i) const { return gen_form(algebra, {indexed("omega", i)}); }
Form SasakianPreset::eta_pair(int i) const {
  auto [j, k] = cyclic(i);
  return gen_form(algebra, {indexed("eta", j), indexed("eta", k)});
}
Form SasakianPreset::v() const { return gen_form(algebra, {"v"}); }
Form SasakianPreset::alpha() const {
  if (!with_asd) throw std::invalid_argument("preset has no alpha generator");
  return gen_form(algebra, {"alpha"});
}

SasakianPreset make_sasakian(int epsilon, bool with_asd) {
  require_sign(epsilon);
  std::map<std::string, std::vector<RawTerm>> d;
  for (int i = 1; i <= 3; ++i) {
    auto [j, k] = cyclic(i);
    d[indexed("eta", i)] = {{Scalar(-2), {indexed("omega", i)}},
                            {Scalar(-2), {indexed("eta", j), indexed("eta", k)}}};
    d[indexed("omega", i)] = {{Scalar(2), {indexed("omega", j), indexed("eta", k)}},
                              {Scalar(-2), {indexed("eta", j), indexed("omega", k)}}};
  }
  std::string name = with_asd ? "sasakian-asd" : "sasakian";
  auto algebra = std::make_shared<const Presentation>(
      name, horizontal_generators(with_asd), horizontal_relations(identity_matrix(), with_asd),
      d, std::vector<std::string>{"eta1", "eta2", "eta3", "v"});
  return {epsilon, with_asd, algebra};
}

Form build_phi(const SasakianPreset& p) {
  const Poly eps(static_cast<long>(p.epsilon));
  Form eta123 = wedge(p.eta(1), p.eta_pair(1));
  Form phi = eps * t().pow(3) * eta123;
  phi -= t() * wedge(p.eta(1), p.omega(1));
  phi -= t() * wedge(p.eta(2), p.omega(2));
  phi -= eps * t() * wedge(p.eta(3), p.omega(3));
  return phi;
}

Form build_psi(const SasakianPreset& p) {
  const Poly eps(static_cast<long>(p.epsilon));
  const Poly u = t().pow(2);
  Form psi = p.v();
  psi -= eps * u * wedge(p.eta_pair(1), p.omega(1));
  psi -= eps * u * wedge(p.eta_pair(2), p.omega(2));
  psi -= u * wedge(p.eta_pair(3), p.omega(3));
  return psi;
}

Form nearly_parallel_residual(const SasakianPreset& preset) {
  return differential(build_phi(preset)) - Poly::var(Symbol::lambda) * build_psi(preset);
}

std::vector<NearlyParallelSolution> solve_nearly_parallel(int epsilon) {
  SasakianPreset preset = make_sasakian(epsilon);
  Form residual = nearly_parallel_residual(preset);

  // The v coefficient is linear in lambda: A(t) + B*lambda with B constant.
  Poly v_coeff = residual.coefficient(std::vector<std::string>{"v"});
  Poly slope = v_coeff.coefficient(Symbol::lambda, 1);
  if (v_coeff.degree(Symbol::lambda) != 1 || !slope.is_constant()) {
    throw std::logic_error("v coefficient is not linear in lambda: " + v_coeff.to_string());
  }
  Poly lambda_of_t =
      Poly(-slope.constant_value().inverse()) * v_coeff.coefficient(Symbol::lambda, 0);

  // The remaining coefficients become univariate in u = t^2 (after removing
  // the overall power of t, since t > 0).
  std::vector<Rational> condition;
  bool any_condition = false;
  for (const auto& [m, c] : residual.terms()) {
    Poly reduced = c.substitute(std::map<Symbol, Poly>{{Symbol::lambda, lambda_of_t}});
    if (reduced.is_zero()) continue;
    Poly in_u = halve_powers(strip_power(reduced, Symbol::t), Symbol::t);
    auto dense = dense_coefficients(in_u, Symbol::t);
    condition = any_condition ? univariate_gcd(condition, dense) : univariate_gcd(dense, {});
    any_condition = true;
  }
  if (!any_condition) {
    throw std::logic_error("nearly parallel system imposes no condition on t");
  }

  std::vector<NearlyParallelSolution> out;
  if (condition.size() <= 1) return out;
  for (const Scalar& root : real_roots(from_dense(condition, Symbol::t), Symbol::t)) {
    if (!root.is_rational()) {
      throw std::logic_error("t^2 = " + root.to_string() + " leaves a single quadratic extension");
    }
    const Rational& u = root.as_rational();
    if (sgn(u) <= 0) continue;
    Scalar tv = Scalar::sqrt(u);
    Scalar lambda = lambda_of_t.substitute(std::map<Symbol, Poly>{{Symbol::t, Poly(tv)}})
                        .constant_value();
    Form check = substitute(residual, {{Symbol::t, Poly(tv)}, {Symbol::lambda, Poly(lambda)}});
    if (!check.is_zero()) {
      throw std::logic_error("back-substitution of t = " + tv.to_string() +
                             " leaves " + check.to_string());
    }
    if (lambda.is_zero()) continue;
    out.push_back({u, tv, epsilon, lambda});
  }
  return out;
}

Report check_pullback_asd(const SasakianPreset& p) {
  Report report;
  const std::string prefix = p.algebra->name() + " (epsilon=" + std::to_string(p.epsilon) + "): ";
  Form psi = build_psi(p);
  Form ap = wedge(p.alpha(), psi);
  report.add(prefix + "alpha^psi = 0", ap.is_zero(), ap.is_zero() ? "" : ap.to_string());

  // Horizontal F = sum b_i omega_i + c alpha: F^psi = 0 forces b = 0.
  Form f = Poly::var(Symbol::c) * p.alpha();
  const Symbol bs[3] = {Symbol::b1, Symbol::b2, Symbol::b3};
  for (int i = 1; i <= 3; ++i) f += Poly::var(bs[i - 1]) * p.omega(i);
  Form fpsi = wedge(f, psi);
  bool diagonal = true;
  std::string witness;
  for (int l = 1; l <= 3; ++l) {
    auto [j, k] = cyclic(l);
    Poly coeff = fpsi.coefficient(std::vector<std::string>{indexed("eta", j), indexed("eta", k), "v"});
    long c_l = l == 3 ? 1 : p.epsilon;
    Poly expected = Poly(-2 * c_l) * t().pow(2) * Poly::var(bs[l - 1]);
    if (!(coeff == expected)) {
      diagonal = false;
      witness = "component " + std::to_string(l) + ": " + coeff.to_string();
    }
  }
  report.add(prefix + "F^psi = -2t^2 diag(eps,eps,1) b for horizontal F", diagonal, witness);
  Form f3 = wedge(wedge(f, f), f);
  report.add(prefix + "F^3 = 0 for horizontal F", f3.is_zero(), f3.is_zero() ? "" : f3.to_string());
  return report;
}

// --- CY3 x S^1 --------------------------------------------------------------

Form CY3Preset::gen(std::string_view name) const {
  return gen_form(algebra, {std::string(name)});
}

CY3Preset make_cy3() {
  std::vector<Generator> gens{{"eta", 1}, {"omega", 2}, {"rho", 3}, {"sigma", 3}, {"vol6", 6}};
  std::vector<Presentation::Relation> rels{
      {{"omega", "omega", "omega"}, {{Scalar(6), {"vol6"}}}},
      {{"omega", "rho"}, {}},
      {{"omega", "sigma"}, {}},
      {{"rho", "sigma"}, {{Scalar(4), {"vol6"}}}},
      {{"omega", "vol6"}, {}},
      {{"rho", "vol6"}, {}},
      {{"sigma", "vol6"}, {}},
      {{"vol6", "vol6"}, {}},
  };
  auto algebra = std::make_shared<const Presentation>(
      "cy3", gens, rels, std::map<std::string, std::vector<RawTerm>>{},
      std::vector<std::string>{"eta", "vol6"});
  return {algebra};
}

Form build_phi(const CY3Preset& p) {
  return wedge(p.gen("eta"), p.gen("omega")) + p.gen("rho");
}

Form build_psi(const CY3Preset& p) {
  Form omega = p.gen("omega");
  return Poly(Rational(1, 2)) * wedge(omega, omega) - wedge(p.gen("eta"), p.gen("sigma"));
}

Cy3LemmaResult check_cy3_lemma(const CY3Preset& p) {
  Cy3LemmaResult result;
  Report& report = result.report;
  const Poly c = Poly::var(Symbol::c);
  Form f = c * p.gen("omega");
  Form psi = build_psi(p);

  Form dphi = differential(build_phi(p));
  Form dpsi = differential(psi);
  report.add("cy3: d(phi) = 0", dphi.is_zero(), dphi.is_zero() ? "" : dphi.to_string());
  report.add("cy3: d(psi) = 0", dpsi.is_zero(), dpsi.is_zero() ? "" : dpsi.to_string());

  Form fs = wedge(f, p.gen("sigma"));
  report.add("cy3: F^sigma = 0 for F = c*omega", fs.is_zero(), fs.is_zero() ? "" : fs.to_string());

  Form rho = wedge(f, psi) - Poly(Rational(1, 6)) * wedge(wedge(f, f), f);
  result.residual = rho.coefficient(std::vector<std::string>{"vol6"});
  Poly expected = Poly(3) * c - c.pow(3);
  report.add("cy3: deformed residual = (3c - c^3) vol6", result.residual == expected,
             result.residual == expected ? "" : result.residual.to_string());

  result.roots = real_roots(result.residual, Symbol::c);
  bool roots_ok = result.roots.size() == 3 && result.roots[0] == -Scalar::sqrt(3) &&
                  result.roots[1] == Scalar(0) && result.roots[2] == Scalar::sqrt(3);
  std::string listed;
  for (const auto& r : result.roots) listed += (listed.empty() ? "" : ", ") + r.to_string();
  report.add("dHYM solutions c in {0, +-sqrt(3)}", roots_ok, roots_ok ? "" : listed);

  Form at_root = substitute(rho, {{Symbol::c, Poly(Scalar::sqrt(3))}});
  report.add("cy3: residual vanishes at c = sqrt(3)", at_root.is_zero(),
             at_root.is_zero() ? "" : at_root.to_string());
  Form at_one = substitute(rho, {{Symbol::c, Poly(1)}});
  report.add("cy3: residual nonzero at c = 1", !at_one.is_zero());
  Form g2 = substitute(wedge(f, psi), {{Symbol::c, Poly(Scalar::sqrt(3))}});
  report.add("cy3: c = sqrt(3) is not a G2-instanton", !g2.is_zero());
  return result;
}

// --- hypersymplectic ---------------------------------------------------------

RationalMatrix3 identity_matrix() {
  RationalMatrix3 q{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) q[i][j] = i == j ? 1 : 0;
  }
  return q;
}

Rational determinant(const RationalMatrix3& q) {
  return q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
         q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
         q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
}

RationalMatrix3 parse_q_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Rational> values;
  std::string token;
  while (in >> token) values.push_back(parse_rational(token));
  if (values.size() != 9) {
    throw std::invalid_argument("Q matrix needs nine rationals, got " +
                                std::to_string(values.size()));
  }
  RationalMatrix3 q;
  for (std::size_t i = 0; i < 9; ++i) q[i / 3][i % 3] = values[i];
  return q;
}

HypersymplecticPreset make_hypersymplectic(const RationalMatrix3& q) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (q[i][j] != q[j][i]) throw std::invalid_argument("Q is not symmetric");
    }
  }
  Rational minor2 = q[0][0] * q[1][1] - q[0][1] * q[1][0];
  if (sgn(q[0][0]) <= 0 || sgn(minor2) <= 0 || sgn(determinant(q)) <= 0) {
    throw std::invalid_argument("Q is not positive definite");
  }
  auto algebra = std::make_shared<const Presentation>(
      "hypersymplectic", horizontal_generators(true), horizontal_relations(q, true),
      std::map<std::string, std::vector<RawTerm>>{},
      std::vector<std::string>{"eta1", "eta2", "eta3", "v"});
  return {q, algebra};
}

Form HypersymplecticPreset::eta_pair(int i) const {
  auto [j, k] = cyclic(i);
  return gen_form(algebra, {indexed("eta", j), indexed("eta", k)});
}
Form HypersymplecticPreset::omega(int i) const { return gen_form(algebra, {indexed("omega", i)}); }
Form HypersymplecticPreset::alpha() const { return gen_form(algebra, {"alpha"}); }
Form HypersymplecticPreset::v() const { return gen_form(algebra, {"v"}); }

Form build_psi(const HypersymplecticPreset& p) {
  const Poly u = t().pow(2);
  Form psi = p.v();
  for (int i = 1; i <= 3; ++i) psi -= u * wedge(p.eta_pair(i), p.omega(i));
  return psi;
}

Report check_pullback_asd(const HypersymplecticPreset& p) {
  Report report;
  const std::string prefix = "hypersymplectic: ";
  Form psi = build_psi(p);
  Form dpsi = differential(psi);
  report.add(prefix + "d(psi) = 0", dpsi.is_zero(), dpsi.is_zero() ? "" : dpsi.to_string());
  Form ap = wedge(p.alpha(), psi);
  report.add(prefix + "alpha^psi = 0", ap.is_zero(), ap.is_zero() ? "" : ap.to_string());

  const Symbol bs[3] = {Symbol::b1, Symbol::b2, Symbol::b3};
  Form f = Poly::var(Symbol::c) * p.alpha();
  for (int i = 1; i <= 3; ++i) f += Poly::var(bs[i - 1]) * p.omega(i);
  Form fpsi = wedge(f, psi);

  // The component along eta_(l)^v is linear in b; its matrix must be -2t^2 Q.
  bool matrix_ok = true;
  std::string witness;
  for (int l = 1; l <= 3; ++l) {
    auto [j, k] = cyclic(l);
    Poly coeff = fpsi.coefficient(std::vector<std::string>{indexed("eta", j), indexed("eta", k), "v"});
    Poly expected;
    for (int i = 1; i <= 3; ++i) {
      expected += Poly(Rational(-2 * p.q[l - 1][i - 1])) * t().pow(2) * Poly::var(bs[i - 1]);
    }
    if (!(coeff == expected)) {
      matrix_ok = false;
      witness = "component " + std::to_string(l) + ": " + coeff.to_string();
    }
  }
  Form rebuilt(p.algebra);
  for (int l = 1; l <= 3; ++l) {
    auto [j, k] = cyclic(l);
    rebuilt += Form::product(p.algebra, {indexed("eta", j), indexed("eta", k), "v"},
                             fpsi.coefficient(std::vector<std::string>{indexed("eta", j),
                                                                       indexed("eta", k), "v"}));
  }
  if (!(rebuilt == fpsi)) {
    matrix_ok = false;
    witness = "F^psi has components off eta_jk^v: " + (fpsi - rebuilt).to_string();
  }
  report.add(prefix + "F^psi = -2t^2 (Qb)_l eta_jk^v", matrix_ok, witness);

  Form f3 = wedge(wedge(f, f), f);
  report.add(prefix + "F^3 = 0", f3.is_zero(), f3.is_zero() ? "" : f3.to_string());
  Rational det = determinant(p.q);
  report.add(prefix + "det Q > 0, so Qb = 0 forces b = 0", sgn(det) > 0,
             sgn(det) > 0 ? "" : format_rational(det));
  return report;
}

}  // namespace dg2

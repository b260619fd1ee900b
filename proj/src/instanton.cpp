#include "dg2/instanton.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "dg2/parallel.hpp"

namespace dg2 {

namespace {

const std::array<const char*, 3> kPairWords[3] = {
    {"eta2", "eta3", "v"}, {"eta3", "eta1", "v"}, {"eta1", "eta2", "v"}};

std::vector<std::string> pair_word(int i) {
  const auto& w = kPairWords[i - 1];
  return {w[0], w[1], w[2]};
}

Poly var(Symbol s) { return Poly::var(s); }

void require_positive(const Rational& u) {
  if (sgn(u) <= 0) throw std::invalid_argument("u must be positive, got " + format_rational(u));
}

// c_i in 1 - 2 c_i u: epsilon on the first two components, 1 on the third.
long component_sign(int epsilon, int i) { return i == 3 ? 1 : epsilon; }

Residual residual_in_u(const Residual& r, const Rational& u) {
  Residual out = r;
  for (auto& c : out.coefficients) c = c.reduce_square(Symbol::t, Poly(u));
  return out;
}

std::array<Poly, 3> substitute_all(const std::array<Poly, 3>& coeffs,
                                   const std::map<Symbol, Poly>& bindings) {
  std::array<Poly, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = coeffs[i].substitute(bindings);
  return out;
}

bool all_zero(const std::array<Poly, 3>& coeffs) {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string render(const std::array<Poly, 3>& coeffs) {
  return "(" + coeffs[0].to_string() + ", " + coeffs[1].to_string() + ", " +
         coeffs[2].to_string() + ")";
}

// Rational points on the unit circle: ((1 - m^2), 2m) / (1 + m^2).
std::pair<Rational, Rational> circle_point(long m) {
  Rational mm(m * m);
  Rational den = 1 + mm;
  return {Rational((1 - mm) / den), Rational(2 * m / den)};
}

// Rational points on the unit sphere by inverse stereographic projection.
std::array<Rational, 3> sphere_point(long m, long n) {
  Rational q(m * m + n * n);
  Rational den = q + 1;
  return {Rational(2 * m / den), Rational(2 * n / den), Rational((q - 1) / den)};
}

}  // namespace

ConnectionAnsatz ConnectionAnsatz::symbolic(Poly k) {
  return {var(Symbol::a1), var(Symbol::a2), var(Symbol::a3), std::move(k)};
}

const Poly& ConnectionAnsatz::coeff(int i) const {
  switch (i) {
    case 1: return a1;
    case 2: return a2;
    case 3: return a3;
    default: throw std::out_of_range("connection coefficient index must be 1, 2 or 3");
  }
}

Form connection_form(const SasakianPreset& preset, const ConnectionAnsatz& a) {
  Form out(preset.algebra);
  for (int i = 1; i <= 3; ++i) out += a.coeff(i) * preset.eta(i);
  return out;
}

Form curvature(const SasakianPreset& preset, const ConnectionAnsatz& a) {
  Form f = differential(connection_form(preset, a));
  if (!a.k.is_zero()) {
    if (!preset.with_asd) {
      throw std::invalid_argument("k != 0 needs a preset with the alpha generator");
    }
    f += a.k * preset.alpha();
  }
  return f;
}

Form Residual::rebuild() const {
  Form out(form.algebra());
  for (int i = 1; i <= 3; ++i) out += Form::product(form.algebra(), pair_word(i), coefficients[i - 1]);
  return out;
}

Residual make_residual(const SasakianPreset& preset, Form form) {
  if (!form.is_zero() && *form.degree() != 6) {
    throw std::invalid_argument("residual must be a 6-form");
  }
  Residual r{std::move(form), {}};
  if (r.form.is_zero()) r.form = Form(preset.algebra);
  for (int i = 1; i <= 3; ++i) r.coefficients[i - 1] = r.form.coefficient(pair_word(i));
  if (!(r.rebuild() == r.form)) {
    throw std::logic_error("residual has components outside eta_jk^v: " + r.form.to_string());
  }
  return r;
}

Residual g2_residual(const SasakianPreset& preset, const ConnectionAnsatz& a) {
  return make_residual(preset, wedge(curvature(preset, a), build_psi(preset)));
}

Residual deformed_residual(const SasakianPreset& preset, const ConnectionAnsatz& a) {
  Form f = curvature(preset, a);
  Form cubic = wedge(wedge(f, f), f);
  return make_residual(preset, wedge(f, build_psi(preset)) - Poly(Rational(1, 6)) * cubic);
}

std::string to_string(Equation e) { return e == Equation::g2 ? "g2" : "deformed"; }

Equation equation_from_name(std::string_view name) {
  if (name == "g2") return Equation::g2;
  if (name == "deformed") return Equation::deformed;
  throw std::invalid_argument("unknown equation '" + std::string(name) + "'");
}

std::string to_string(Branch::Type t) {
  switch (t) {
    case Branch::Type::trivial: return "trivial";
    case Branch::Type::sphere: return "sphere";
    case Branch::Type::circle: return "circle";
    case Branch::Type::point_pair: return "point_pair";
    case Branch::Type::all: return "all";
  }
  return "?";
}

SolutionSet classify_g2(int epsilon, const Rational& u, long k) {
  require_positive(u);
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  SolutionSet set{epsilon, u, k, Equation::g2, {}};
  if (u == Rational(1, 2)) {
    if (epsilon == 1) {
      set.branches.push_back({Branch::Type::all, 0, false, false});
      return set;
    }
    set.branches.push_back({Branch::Type::point_pair, 0, false, true});
  }
  set.branches.push_back({Branch::Type::trivial, 0, false, false});
  return set;
}

SolutionSet classify_deformed(int epsilon, const Rational& u, long k) {
  require_positive(u);
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  SolutionSet set{epsilon, u, k, Equation::deformed, {}};
  Rational k2(k * k);
  Rational inner = (1 - 2 * u + k2) / 4;  // sphere (eps = +1) or point pair (eps = -1)
  Branch trivial{Branch::Type::trivial, 0, false, false};
  if (epsilon == -1) {
    set.branches.push_back({Branch::Type::circle, Rational((1 + 2 * u + k2) / 4), false, false});
  }
  if (sgn(inner) > 0) {
    set.branches.push_back(
        {epsilon == 1 ? Branch::Type::sphere : Branch::Type::point_pair, inner, false, false});
  } else if (sgn(inner) == 0) {
    trivial.degenerate = true;
  }
  set.branches.push_back(trivial);
  return set;
}

nlohmann::ordered_json to_json(const SolutionSet& set) {
  nlohmann::ordered_json j;
  j["epsilon"] = set.epsilon;
  j["u"] = format_rational(set.u);
  j["k"] = set.k;
  j["equation"] = to_string(set.equation);
  auto branches = nlohmann::ordered_json::array();
  for (const auto& b : set.branches) {
    nlohmann::ordered_json jb;
    jb["type"] = to_string(b.type);
    switch (b.type) {
      case Branch::Type::sphere:
        jb["radius_sq"] = format_rational(b.value);
        jb["degenerate"] = b.degenerate;
        break;
      case Branch::Type::circle:
        jb["radius_sq"] = format_rational(b.value);
        jb["plane"] = "a3=0";
        jb["degenerate"] = b.degenerate;
        break;
      case Branch::Type::point_pair:
        if (b.line) {
          jb["line"] = true;
        } else {
          jb["a3_sq"] = format_rational(b.value);
        }
        jb["degenerate"] = b.degenerate;
        break;
      case Branch::Type::trivial:
        if (b.degenerate) jb["degenerate"] = true;
        break;
      case Branch::Type::all:
        break;
    }
    branches.push_back(std::move(jb));
  }
  j["branches"] = std::move(branches);
  return j;
}

Report verify_solution_set(const SolutionSet& set, int samples, unsigned seed) {
  Report report;
  const long k = set.k;
  SasakianPreset preset = make_sasakian(set.epsilon, k != 0);
  ConnectionAnsatz ansatz = ConnectionAnsatz::symbolic(Poly(k));
  Residual symbolic = set.equation == Equation::g2 ? g2_residual(preset, ansatz)
                                                   : deformed_residual(preset, ansatz);
  Residual r = residual_in_u(symbolic, set.u);
  const std::array<Poly, 3>& rc = r.coefficients;
  const std::string prefix = "eps=" + std::to_string(set.epsilon) + " u=" +
                             format_rational(set.u) + " k=" + std::to_string(k) + " " +
                             to_string(set.equation) + ": ";
  bool even_in_t = true;
  for (const auto& c : rc) even_in_t = even_in_t && !c.uses(Symbol::t);
  report.add(prefix + "residual depends on t only through u", even_in_t,
             even_in_t ? "" : render(rc));

  const Poly a1 = var(Symbol::a1);
  const Poly a2 = var(Symbol::a2);
  const Poly a3 = var(Symbol::a3);
  auto exact_check = [&](const std::string& name, const std::map<Symbol, Poly>& point) {
    auto v = substitute_all(rc, point);
    report.add(prefix + name, all_zero(v), all_zero(v) ? "" : render(v));
  };

  // Float sample points per branch: the branch is parametrized by angles.
  struct FloatBranch {
    std::string name;
    std::function<std::array<double, 3>(double, double)> point;
  };
  std::vector<FloatBranch> float_branches;

  for (const auto& b : set.branches) {
    const double value = mpq_class(b.value).get_d();
    switch (b.type) {
      case Branch::Type::trivial:
        exact_check("trivial point solves", {{Symbol::a1, Poly()}, {Symbol::a2, Poly()},
                                             {Symbol::a3, Poly()}});
        break;
      case Branch::Type::all:
        report.add(prefix + "every ansatz solves", all_zero(rc), all_zero(rc) ? "" : render(rc));
        float_branches.push_back({"all", [](double p, double q) {
                                    return std::array<double, 3>{std::cos(p), std::sin(q), p - q};
                                  }});
        break;
      case Branch::Type::sphere: {
        Scalar radius = Scalar::sqrt(b.value);
        for (auto [m, n] : {std::pair{1L, 2L}, std::pair{2L, 3L}, std::pair{0L, 0L}}) {
          auto p = sphere_point(m, n);
          exact_check("sphere point (" + std::to_string(m) + "," + std::to_string(n) + ")",
                      {{Symbol::a1, Poly(radius * Scalar(p[0]))},
                       {Symbol::a2, Poly(radius * Scalar(p[1]))},
                       {Symbol::a3, Poly(radius * Scalar(p[2]))}});
        }
        auto reduced = rc;
        for (auto& c : reduced) c = c.reduce_square(Symbol::a3, Poly(b.value) - a1 * a1 - a2 * a2);
        report.add(prefix + "residual vanishes modulo r^2 = " + format_rational(b.value),
                   all_zero(reduced), all_zero(reduced) ? "" : render(reduced));
        float_branches.push_back({"sphere", [value](double p, double q) {
                                    double r = std::sqrt(value);
                                    return std::array<double, 3>{r * std::sin(p) * std::cos(q),
                                                                 r * std::sin(p) * std::sin(q),
                                                                 r * std::cos(p)};
                                  }});
        break;
      }
      case Branch::Type::circle: {
        Scalar radius = Scalar::sqrt(b.value);
        for (long m : {1L, 2L, 5L}) {
          auto [c, s] = circle_point(m);
          exact_check("circle point m=" + std::to_string(m),
                      {{Symbol::a1, Poly(radius * Scalar(c))},
                       {Symbol::a2, Poly(radius * Scalar(s))},
                       {Symbol::a3, Poly()}});
        }
        auto reduced = substitute_all(rc, {{Symbol::a3, Poly()}});
        for (auto& c : reduced) c = c.reduce_square(Symbol::a2, Poly(b.value) - a1 * a1);
        report.add(prefix + "residual vanishes modulo a1^2+a2^2 = " + format_rational(b.value) +
                       ", a3 = 0",
                   all_zero(reduced), all_zero(reduced) ? "" : render(reduced));
        float_branches.push_back({"circle", [value](double p, double) {
                                    double r = std::sqrt(value);
                                    return std::array<double, 3>{r * std::cos(p), r * std::sin(p),
                                                                 0.0};
                                  }});
        break;
      }
      case Branch::Type::point_pair: {
        auto axis = substitute_all(rc, {{Symbol::a1, Poly()}, {Symbol::a2, Poly()}});
        if (b.line) {
          report.add(prefix + "whole a3-axis solves", all_zero(axis),
                     all_zero(axis) ? "" : render(axis));
          float_branches.push_back({"a3-axis", [](double p, double) {
                                      return std::array<double, 3>{0.0, 0.0, p};
                                    }});
          break;
        }
        Scalar root = Scalar::sqrt(b.value);
        for (int sign : {1, -1}) {
          exact_check(std::string("point a3 = ") + (sign > 0 ? "+" : "-") + root.to_string(),
                      {{Symbol::a1, Poly()}, {Symbol::a2, Poly()},
                       {Symbol::a3, Poly(Scalar(sign) * root)}});
        }
        for (auto& c : axis) c = c.reduce_square(Symbol::a3, Poly(b.value));
        report.add(prefix + "residual vanishes modulo a3^2 = " + format_rational(b.value),
                   all_zero(axis), all_zero(axis) ? "" : render(axis));
        float_branches.push_back({"point pair", [value](double p, double) {
                                    double a = std::sqrt(value);
                                    return std::array<double, 3>{0.0, 0.0, p < 0 ? -a : a};
                                  }});
        break;
      }
    }
  }

  const double t = std::sqrt(mpq_class(set.u).get_d());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (const auto& fb : float_branches) {
    std::vector<std::pair<double, double>> params(static_cast<std::size_t>(samples));
    for (auto& pq : params) pq = {angle(rng), angle(rng)};
    std::vector<double> worst(params.size(), 0.0);
    parallel_for(params.size(), [&](std::size_t i) {
      auto a = fb.point(params[i].first, params[i].second);
      std::map<Symbol, double> at{{Symbol::t, t}, {Symbol::a1, a[0]}, {Symbol::a2, a[1]},
                                  {Symbol::a3, a[2]}};
      for (const auto& c : symbolic.coefficients) {
        worst[i] = std::max(worst[i], std::abs(c.eval_float(at)));
      }
    });
    double max_err = worst.empty() ? 0.0 : *std::max_element(worst.begin(), worst.end());
    report.add(prefix + std::to_string(samples) + " float samples on " + fb.name + " within 1e-10",
               max_err < 1e-10, max_err < 1e-10 ? "" : "max |residual| = " + std::to_string(max_err));
  }
  return report;
}

Report instanton_identities() {
  Report report;
  const Poly a1 = var(Symbol::a1);
  const Poly a2 = var(Symbol::a2);
  const Poly a3 = var(Symbol::a3);
  const Poly kk = var(Symbol::k);
  const Poly u = var(Symbol::t).pow(2);
  const Poly r2 = a1 * a1 + a2 * a2 + a3 * a3;
  const std::array<Poly, 3> a{a1, a2, a3};

  for (int eps : {1, -1}) {
    const std::string prefix = "eps=" + std::to_string(eps) + ": ";
    SasakianPreset plain = make_sasakian(eps);
    SasakianPreset asd = make_sasakian(eps, true);
    ConnectionAnsatz sym = ConnectionAnsatz::symbolic();

    Form f = curvature(plain, sym);
    Form expected_f(plain.algebra);
    for (int i = 1; i <= 3; ++i) expected_f += Poly(-2) * a[i - 1] * (plain.omega(i) + plain.eta_pair(i));
    report.add(prefix + "F = -2 sum a_i (omega_i + eta_jk)", f == expected_f,
               f == expected_f ? "" : (f - expected_f).to_string());

    Residual g2 = g2_residual(plain, sym);
    bool g2_ok = true;
    std::string g2_witness;
    for (int i = 1; i <= 3; ++i) {
      Poly expected = Poly(-2) * (Poly(1) - Poly(2 * component_sign(eps, i)) * u) * a[i - 1];
      if (!(g2.coefficients[i - 1] == expected)) {
        g2_ok = false;
        g2_witness = g2.coefficients[i - 1].to_string();
      }
    }
    report.add(prefix + "F^psi = -2(1 - 2c_i t^2) a_i eta_jk^v", g2_ok, g2_witness);

    Residual cubic = make_residual(plain, Poly(Rational(1, 6)) * wedge(wedge(f, f), f));
    bool cubic_ok = true;
    for (int i = 1; i <= 3; ++i) {
      cubic_ok = cubic_ok && cubic.coefficients[i - 1] == Poly(-8) * r2 * a[i - 1];
    }
    report.add(prefix + "F^3/6 = -8 r^2 a_i eta_jk^v", cubic_ok,
               cubic_ok ? "" : render(cubic.coefficients));

    Residual deformed = deformed_residual(plain, sym);
    bool l0_ok = true;
    std::string l0_witness;
    for (int i = 1; i <= 3; ++i) {
      Poly bracket = Poly(4) * r2 - (Poly(1) - Poly(2 * component_sign(eps, i)) * u);
      if (!(deformed.coefficients[i - 1] == Poly(2) * bracket * a[i - 1])) {
        l0_ok = false;
        l0_witness = deformed.coefficients[i - 1].to_string();
      }
    }
    report.add(prefix + "deformed residual = 2 x (4r^2 - (1 - 2c_i t^2)) a_i", l0_ok, l0_witness);

    Residual with_k = deformed_residual(asd, ConnectionAnsatz::symbolic(kk));
    bool ok_ok = true;
    std::string ok_witness;
    for (int i = 1; i <= 3; ++i) {
      Poly norm_sq = Poly(2) * kk * kk;  // |F_A0|^2 = 2k^2
      Poly bracket = Poly(8) * r2 - norm_sq - Poly(2) * (Poly(1) - Poly(2 * component_sign(eps, i)) * u);
      Poly halved = Poly(4) * r2 - kk * kk - (Poly(1) - Poly(2 * component_sign(eps, i)) * u);
      const Poly& got = with_k.coefficients[i - 1];
      if (!(got == bracket * a[i - 1]) || !(got == Poly(2) * halved * a[i - 1])) {
        ok_ok = false;
        ok_witness = got.to_string();
      }
    }
    report.add(prefix + "deformed residual on O(k) = (8r^2 - 2k^2 - 2(1 - 2c_i t^2)) a_i", ok_ok,
               ok_witness);

    Form alpha = asd.alpha();
    Form da = differential(connection_form(asd, sym));
    Form dda = wedge(wedge(da, da), alpha);
    Form a3f = wedge(wedge(alpha, alpha), alpha);
    report.add(prefix + "(da)^2 ^ alpha = 0", dda.is_zero(), dda.is_zero() ? "" : dda.to_string());
    report.add(prefix + "alpha^3 = 0", a3f.is_zero(), a3f.is_zero() ? "" : a3f.to_string());

    ConnectionAnsatz flat_k{Poly(), Poly(), Poly(), Poly(2)};
    Form fk = curvature(asd, flat_k);
    Poly norm = wedge(fk, fk).coefficient(std::vector<std::string>{"v"});
    report.add(prefix + "(k alpha)^2 = -2k^2 v, |F_A0|^2 = 8 at k = 2", norm == Poly(-8),
               norm == Poly(-8) ? "" : norm.to_string());

    ConnectionAnsatz pullback{Poly(), Poly(), Poly(), kk};
    Residual pg = g2_residual(asd, pullback);
    Residual pd = deformed_residual(asd, pullback);
    bool pull_ok = pg.form.is_zero() && pd.form.is_zero();
    report.add(prefix + "pullback of the ASD connection solves both equations", pull_ok,
               pull_ok ? "" : pg.form.to_string() + " / " + pd.form.to_string());
  }

  SasakianPreset plus = make_sasakian(1);
  Residual special = residual_in_u(g2_residual(plus, ConnectionAnsatz::symbolic()), Rational(1, 2));
  report.add("eps=1 u=1/2: every ansatz is a G2-instanton", all_zero(special.coefficients),
             all_zero(special.coefficients) ? "" : render(special.coefficients));
  return report;
}

}  // namespace dg2

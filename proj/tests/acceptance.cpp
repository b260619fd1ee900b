#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "dg2/functional.hpp"
#include "dg2/instanton.hpp"
#include "dg2/models.hpp"

using namespace dg2;

namespace {

using Word = std::vector<std::string>;

// Pinned tolerances.
constexpr double kBranchTol = 1e-9;
constexpr double kFdTol = 1e-6;
constexpr double kScanTol = 1e-9;
constexpr int kTrials = 500;
constexpr int kSeeds = 200;
constexpr int kFdPoints = 100;

const Poly t = Poly::var(Symbol::t);
const Poly a1 = Poly::var(Symbol::a1);
const Poly a2 = Poly::var(Symbol::a2);
const Poly a3 = Poly::var(Symbol::a3);
const Poly kk = Poly::var(Symbol::k);
const Poly r2 = a1.pow(2) + a2.pow(2) + a3.pow(2);

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

Poly one_minus(int eps, int i) { return Poly(1) - Poly(i < 2 ? 2 * eps : 2) * t.pow(2); }

Poly at_u(const Poly& p, const Rational& u) { return p.reduce_square(Symbol::t, Poly(u)); }

dg2::RationalMatrix3 random_spd(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Rational l[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) l[i][j] = j <= i ? Rational(num(rng), den(rng)) : Rational(0);
  }
  RationalMatrix3 q{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational s = i == j ? Rational(1, 2) : Rational(0);
      for (int m = 0; m < 3; ++m) s += l[i][m] * l[j][m];
      s.canonicalize();
      q[i][j] = s;
    }
  }
  return q;
}

Outcome presentation_validity() {
  Outcome o;
  std::vector<std::pair<std::string, PresentationPtr>> presets{
      {"sasakian", make_sasakian(1).algebra},
      {"sasakian-asd", make_sasakian(1, true).algebra},
      {"cy3", make_cy3().algebra},
      {"hypersymplectic", make_hypersymplectic(identity_matrix()).algebra},
  };
  std::size_t checks = 0;
  for (const auto& [name, algebra] : presets) {
    for (const auto& g : algebra->generators()) {
      Form gen = Form::product(algebra, {g.name});
      o.require(differential(differential(gen)).is_zero(), name + ": d^2 " + g.name + " != 0");
    }
    Report r = validate_presentation(algebra, 20240611, kTrials, kTrials);
    checks += r.checks.size();
    for (const auto& c : r.checks) o.require(c.passed, c.name + ": " + c.witness);
  }
  o.detail = o.passed ? std::to_string(checks) + " checks, " + std::to_string(kTrials) +
                            " Leibniz and associativity trials per preset"
                      : o.detail;
  return o;
}

Outcome psi_closed() {
  Outcome o;
  for (int eps : {1, -1}) {
    for (bool asd : {false, true}) {
      o.require(differential(build_psi(make_sasakian(eps, asd))).is_zero(),
                "sasakian eps=" + std::to_string(eps));
    }
  }
  std::mt19937 rng(17);
  o.require(differential(build_psi(make_hypersymplectic(identity_matrix()))).is_zero(), "hyp Q=I");
  o.require(differential(build_psi(make_hypersymplectic(random_spd(rng)))).is_zero(), "hyp random Q");
  o.require(differential(build_psi(make_cy3())).is_zero(), "cy3");
  if (o.passed) o.detail = "exact in t, both signs, all presets";
  return o;
}

Outcome nearly_parallel() {
  Outcome o;
  struct Want {
    int eps;
    Scalar t;
    Scalar lambda;
  };
  const Want wants[] = {{1, Scalar::sqrt(Rational(5)).inverse(), Scalar(12) / Scalar::sqrt(Rational(5))},
                        {-1, Scalar(1), Scalar(4)}};
  for (const auto& w : wants) {
    auto sols = solve_nearly_parallel(w.eps);
    o.require(sols.size() == 1, "expected exactly one solution for eps=" + std::to_string(w.eps));
    if (sols.size() != 1) continue;
    o.require(sols[0].epsilon == w.eps && sols[0].t == w.t && sols[0].lambda == w.lambda,
              "got t=" + sols[0].t.to_string() + " lambda=" + sols[0].lambda.to_string());
    SasakianPreset p = make_sasakian(w.eps);
    Form r = differential(build_phi(p)) - Poly(w.lambda) * build_psi(p);
    Form back = r.map_coefficients([&](const Poly& c) {
      return c.substitute(std::map<Symbol, Poly>{{Symbol::t, Poly(w.t)}});
    });
    o.require(back.is_zero(), "back-substitution residual " + back.to_string());
  }
  if (o.passed) o.detail = "(1/sqrt5, +1, 12/sqrt5) and (1, -1, 4), exact back-substitution";
  return o;
}

Outcome residual_identities() {
  Outcome o;
  const Poly a[3] = {a1, a2, a3};
  for (int eps : {1, -1}) {
    auto trivial = deformed_residual(make_sasakian(eps), ConnectionAnsatz::symbolic());
    auto twisted = deformed_residual(make_sasakian(eps, true), ConnectionAnsatz::symbolic(kk));
    for (int i = 0; i < 3; ++i) {
      Poly l0 = Poly(4) * r2 - one_minus(eps, i);
      o.require(trivial.coefficients[i] == Poly(2) * a[i] * l0,
                "k=0 component " + std::to_string(i) + ": " + trivial.coefficients[i].to_string());
      // |F0|^2 = 2k^2 inserted into 8r^2 - |F0|^2 - 2(1 - 2 c t^2), halved to
      // the trivial-bundle normalization
      Poly ok_bracket = Poly(8) * r2 - Poly(2) * kk.pow(2) - Poly(2) * one_minus(eps, i);
      o.require(trivial.rebuild() == trivial.form, "lossless extraction");
      o.require(twisted.coefficients[i] == Poly(2) * a[i] * (Poly(Rational(1, 2)) * ok_bracket),
                "O(k) component " + std::to_string(i) + ": " + twisted.coefficients[i].to_string());
    }
  }
  if (o.passed) o.detail = "2 a_i (4r^2 - k^2 - (1 - 2 c_i t^2)) exactly, k = 0 and symbolic k";
  return o;
}

Outcome classification_tables() {
  Outcome o;
  const Rational us[] = {Rational(1, 5), Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)};
  int sets = 0;
  for (int eps : {1, -1}) {
    for (const auto& u : us) {
      for (long k : {0L, 1L, 2L, 3L}) {
        Rational k2(k * k);
        Rational inner = (1 - 2 * u + k2) / 4;
        Rational outer = (1 + 2 * u + k2) / 4;
        std::vector<std::pair<Branch::Type, Rational>> want;
        if (eps == 1 && sgn(inner) > 0) want.push_back({Branch::Type::sphere, inner});
        if (eps == -1) want.push_back({Branch::Type::circle, outer});
        if (eps == -1 && sgn(inner) > 0) want.push_back({Branch::Type::point_pair, inner});
        want.push_back({Branch::Type::trivial, Rational(0)});

        SolutionSet set = classify_deformed(eps, u, k);
        std::string tag = "eps=" + std::to_string(eps) + " u=" + format_rational(u) +
                          " k=" + std::to_string(k);
        bool same = set.branches.size() == want.size();
        for (std::size_t i = 0; same && i < want.size(); ++i) {
          same = set.branches[i].type == want[i].first &&
                 (want[i].first == Branch::Type::trivial || set.branches[i].value == want[i].second);
        }
        o.require(same, tag + ": " + to_json(set).dump());
        o.require(set.branches.back().degenerate == (inner == 0), tag + ": degenerate flag");
        Report v = verify_solution_set(set);
        for (const auto& c : v.checks) o.require(c.passed, tag + ": " + c.name + " " + c.witness);
        ++sets;
      }
    }
  }
  auto point = deformed_residual(make_sasakian(1), ConnectionAnsatz{Poly(Rational(1, 4)),
                                                                    Poly(Rational(1, 4)), Poly(), Poly()});
  for (const auto& c : point.coefficients) {
    o.require(at_u(c, Rational(1, 4)).is_zero(), "sphere point (1/4,1/4,0) residual " + c.to_string());
  }
  if (o.passed) o.detail = std::to_string(sets) + " solution sets, exact and 1e-10 float spot checks";
  return o;
}

Outcome functional_identity() {
  Outcome o;
  const Poly x = Poly::var(sym::x);
  const Poly y = Poly::var(sym::y);
  for (int eps : {1, -1}) {
    Poly rho2 = x.pow(2) + y.pow(2);
    Poly want = -(rho2 * (Poly(2) * rho2 - Poly(1)) + Poly(2) * t.pow(2) * (x.pow(2) + Poly(eps) * y.pow(2)));
    ClosedForm cf = functional_direct(eps);
    o.require(cf.reduced == want, "eps=" + std::to_string(eps) + ": " + cf.reduced.to_string());
    Poly tr = functional_transgression(eps, ConnectionAnsatz::symbolic());
    o.require(tr == cf.full, "transgression eps=" + std::to_string(eps) + ": " + tr.to_string());
  }
  if (o.passed) o.detail = "exact, c = 1, both signs; transgression at k = 0 identical";
  return o;
}

Outcome gradient_and_hessian() {
  Outcome o;
  const Poly x = Poly::var(sym::x);
  const Poly y = Poly::var(sym::y);
  for (int eps : {1, -1}) {
    ClosedForm cf = functional_direct(eps);
    auto [gx, gy] = gradient(cf);
    Poly rho2 = x.pow(2) + y.pow(2);
    o.require(gx == Poly(-2) * x * (Poly(4) * rho2 + Poly(2) * t.pow(2) - Poly(1)), "dF/dx");
    o.require(gy == Poly(-2) * y * (Poly(4) * rho2 + Poly(2 * eps) * t.pow(2) - Poly(1)), "dF/dy");
    for (const Rational& u : {Rational(1, 5), Rational(1, 2), Rational(1)}) {
      ExactCriticalPoint cp = hessian_at(cf, Scalar(0), Scalar(0), u);
      std::string tag = "eps=" + std::to_string(eps) + " u=" + format_rational(u);
      o.require(cp.hessian[0][0] == Scalar(Rational(2 * (1 - 2 * u))) &&
                    cp.hessian[1][1] == Scalar(Rational(2 * (1 - 2 * eps * u))) && cp.hessian[0][1].is_zero(),
                tag + ": origin Hessian");
      CriticalClass want = u < Rational(1, 2)   ? CriticalClass::min
                           : u == Rational(1, 2) ? CriticalClass::degenerate
                           : eps == 1            ? CriticalClass::max
                                                 : CriticalClass::saddle;
      o.require(cp.cls == want, tag + ": class " + to_string(cp.cls) + ", want " + to_string(want));
    }
  }
  if (o.passed) o.detail = "exact gradient; origin eigenvalues {2(1-2u), 2(1-2eps u)}, no sign flip needed";
  return o;
}

Outcome numeric_agreement() {
  Outcome o;
  struct Case {
    int eps;
    double t;
    std::function<bool(double, double)> on_locus;
    std::string locus;
  };
  auto at_origin = [](double x, double y) { return std::hypot(x, y) < kBranchTol; };
  const std::vector<Case> cases{
      {1, 1 / std::sqrt(5.0),
       [&](double x, double y) { return at_origin(x, y) || std::abs(x * x + y * y - 0.15) < kBranchTol; },
       "origin or x^2+y^2 = 3/20"},
      {-1, 1.0,
       [&](double x, double y) {
         return at_origin(x, y) ||
                (std::abs(x) < kBranchTol && std::abs(std::abs(y) - std::sqrt(0.75)) < kBranchTol);
       },
       "origin or (0, +-sqrt3/2)"},
      {1, 1.0, at_origin, "origin only"},
  };
  std::ostringstream summary;
  for (const auto& c : cases) {
    std::string tag = "(eps, t) = (" + std::to_string(c.eps) + ", " + format_double(c.t) + ")";
    NumericCriticalPoints found = critical_points_numeric(c.eps, c.t, kSeeds, 2024);
    o.require(found.discarded == 0, tag + ": " + std::to_string(found.discarded) + " seeds did not converge");
    for (const auto& p : found.points) {
      o.require(c.on_locus(p.x, p.y),
                tag + ": stray point (" + format_double(p.x) + ", " + format_double(p.y) + ")");
    }
    // Central differences of an independently written closed form against
    // the library's exact gradient.
    auto [gx, gy] = gradient(functional_direct(c.eps));
    auto f = [&](double x, double y) {
      double rr = x * x + y * y;
      return -(rr * (2 * rr - 1) + 2 * c.t * c.t * (x * x + c.eps * y * y));
    };
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> coord(-1, 1);
    const double h = 1e-6;
    for (int i = 0; i < kFdPoints; ++i) {
      double x = coord(rng);
      double y = coord(rng);
      std::map<Symbol, double> at{{sym::x, x}, {sym::y, y}, {Symbol::t, c.t}};
      double ex = std::abs((f(x + h, y) - f(x - h, y)) / (2 * h) - gx.eval_float(at));
      double ey = std::abs((f(x, y + h) - f(x, y - h)) / (2 * h) - gy.eval_float(at));
      o.require(ex < kFdTol && ey < kFdTol, tag + ": finite-difference error " + format_double(std::max(ex, ey)));
    }
    o.require(finite_difference_check(c.eps, c.t, kFdPoints).passed(), tag + ": built-in finite differences");
    summary << (summary.tellp() > 0 ? ", " : "") << found.points.size();
  }
  if (o.passed) {
    o.detail = std::to_string(kSeeds) + " seeds per case, all on the analytic locus within 1e-9 (distinct points: " +
               summary.str() + "); finite differences within 1e-6 on " + std::to_string(kFdPoints) + " points";
  }
  return o;
}

Outcome pullback_lemmas() {
  Outcome o;
  for (int eps : {1, -1}) {
    SasakianPreset p = make_sasakian(eps, true);
    o.require(wedge(p.alpha(), build_psi(p)).is_zero(), "alpha^psi eps=" + std::to_string(eps));
  }
  std::mt19937 rng(31);
  const Poly b[3] = {Poly::var(Symbol::b1), Poly::var(Symbol::b2), Poly::var(Symbol::b3)};
  const Word comps[3] = {{"eta2", "eta3", "v"}, {"eta3", "eta1", "v"}, {"eta1", "eta2", "v"}};
  for (int trial = 0; trial < 5; ++trial) {
    RationalMatrix3 q = random_spd(rng);
    HypersymplecticPreset h = make_hypersymplectic(q);
    Form f = b[0] * h.omega(1) + b[1] * h.omega(2) + b[2] * h.omega(3) + Poly::var(Symbol::c) * h.alpha();
    Form residual = wedge(f, build_psi(h)) - Poly(Rational(1, 6)) * wedge(f, wedge(f, f));
    Form rebuilt(h.algebra);
    for (int l = 0; l < 3; ++l) {
      Poly qb;
      for (int m = 0; m < 3; ++m) qb += Poly(q[l][m]) * b[m];
      Poly got = residual.coefficient(comps[l]);
      o.require(got == Poly(-2) * t.pow(2) * qb, "Q trial " + std::to_string(trial) + ": " + got.to_string());
      rebuilt += got * Form::product(h.algebra, comps[l]);
    }
    o.require(rebuilt == residual, "residual has components beyond eta_jk ^ v");
    o.require(determinant(q) != 0, "Q singular");
    o.require(check_pullback_asd(h).passed(), "hypersymplectic pullback report");
  }
  Cy3LemmaResult cy = check_cy3_lemma(make_cy3());
  const Scalar r3 = Scalar::sqrt(Rational(3));
  o.require(cy.roots.size() == 3 && cy.roots[0] == -r3 && cy.roots[1] == Scalar(0) && cy.roots[2] == r3,
            "cy3 roots");
  o.require(cy.report.passed(), "cy3 lemma report");
  if (o.passed) o.detail = "alpha^psi = 0; residual = -2t^2 Qb for 5 random SPD Q; CY3 roots {0, +-sqrt3}";
  return o;
}

Outcome moduli_scan_data() {
  Outcome o;
  auto quarter = moduli_scan(1, 0, {Rational(1, 4)});
  o.require(quarter.size() == 1 && quarter[0].branch == "sphere" &&
                std::abs(quarter[0].r - 0.3535533906) <= kScanTol,
            "u=1/4 scan: " + scan_csv(quarter));

  double previous = 1;
  for (int e = 2; e <= 10; e += 2) {
    Rational u(1, static_cast<long>(std::pow(10, e)));
    auto rows = moduli_scan(-1, 0, {u});
    double r = -1;
    for (const auto& row : rows) {
      if (row.branch == "circle") r = row.r;
    }
    double gap = std::abs(r - 0.5);
    o.require(gap < previous, "circle radius not approaching 1/2 at u=" + format_rational(u));
    previous = gap;
  }
  o.require(previous < 1e-9, "circle radius at u=1e-10 off by " + format_double(previous));

  auto below = moduli_scan(-1, 0, parse_u_range("1/100:49/100:49"));
  int pairs_below = 0;
  for (const auto& row : below) pairs_below += row.branch == "point_pair";
  o.require(pairs_below == 49, "point pair missing below u = 1/2");
  auto above = moduli_scan(-1, 0, parse_u_range("1/2:4:71"));
  for (const auto& row : above) {
    o.require(row.branch != "point_pair", "point pair present at t=" + format_double(row.t));
  }
  if (o.passed) o.detail = "r(1/4) = " + format_double(quarter[0].r) + "; circle -> 1/2; no point pair for u >= 1/2";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"presentation validity", presentation_validity},
      {"psi closed", psi_closed},
      {"nearly-parallel locus", nearly_parallel},
      {"residual identities", residual_identities},
      {"classification tables", classification_tables},
      {"functional identity", functional_identity},
      {"gradient and Hessian", gradient_and_hessian},
      {"numeric-exact agreement", numeric_agreement},
      {"pullback lemmas", pullback_lemmas},
      {"moduli scan data", moduli_scan_data},
  };
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail << "\n";
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed in "
            << std::fixed << std::setprecision(2) << seconds << " s\n";
  return failed == 0 ? 0 : 1;
}

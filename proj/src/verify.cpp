#include "dg2/verify.hpp"

#include "dg2/functional.hpp"
#include "dg2/instanton.hpp"

namespace dg2 {

namespace {

void add_equal(Report& report, const std::string& name, const Form& got, const Form& want) {
  bool ok = got == want;
  report.add(name, ok, ok ? "" : (got - want).to_string());
}

void add_equal(Report& report, const std::string& name, const Poly& got, const Poly& want) {
  bool ok = got == want;
  report.add(name, ok, ok ? "" : (got - want).to_string());
}

Report sasakian_checks() {
  Report report;
  report.append(validate_presentation(make_sasakian(1).algebra));
  const Poly t = Poly::var(Symbol::t);

  for (int eps : {1, -1}) {
    const std::string prefix = "eps=" + std::to_string(eps) + ": ";
    SasakianPreset p = make_sasakian(eps);
    if (eps == 1) {
      add_equal(report, "d(eta1) = -2 omega1 - 2 eta23", differential(p.eta(1)),
                Poly(-2) * p.omega(1) - Poly(2) * p.eta_pair(1));
      Form eta123 = wedge(p.eta(1), p.eta_pair(1));
      Form want(p.algebra);
      for (int i = 1; i <= 3; ++i) want -= Poly(2) * wedge(p.omega(i), p.eta_pair(i));
      add_equal(report, "d(eta123) = -2(omega1 eta23 + omega2 eta31 + omega3 eta12)",
                differential(eta123), want);
    }
    Form phi = build_phi(p);
    Form psi = build_psi(p);
    add_equal(report, prefix + "d(psi) = 0", differential(psi), Form(p.algebra));
    add_equal(report, prefix + "phi has eta123 coefficient eps t^3",
              phi.coefficient(std::vector<std::string>{"eta1", "eta2", "eta3"}),
              Poly(eps) * t.pow(3));
    add_equal(report, prefix + "phi has eta3^omega3 coefficient -eps t",
              phi.coefficient(std::vector<std::string>{"eta3", "omega3"}), Poly(-eps) * t);
    add_equal(report, prefix + "psi has eta12^omega3 coefficient -t^2",
              psi.coefficient(std::vector<std::string>{"eta1", "eta2", "omega3"}),
              -t.pow(2));

    auto sols = solve_nearly_parallel(eps);
    Scalar want_t = eps == 1 ? Scalar::sqrt(Rational(1, 5)) : Scalar(1);
    Scalar want_lambda = eps == 1 ? Scalar(12) * Scalar::sqrt(Rational(1, 5)) : Scalar(4);
    bool np_ok = sols.size() == 1 && sols[0].t == want_t && sols[0].lambda == want_lambda;
    std::string listed;
    for (const auto& s : sols) listed += "(t=" + s.t.to_string() + ", lambda=" + s.lambda.to_string() + ") ";
    report.add(prefix + "nearly parallel only at (t, lambda) = (" + want_t.to_string() + ", " +
                   want_lambda.to_string() + ")",
               np_ok, np_ok ? "" : listed);
  }

  Form off = nearly_parallel_residual(make_sasakian(1)).map_coefficients([](const Poly& c) {
    return c.substitute(std::map<Symbol, Poly>{{Symbol::t, Poly(1)}, {Symbol::lambda, Poly(4)}});
  });
  report.add("eps=1: (t, lambda) = (1, 4) is not nearly parallel", !off.is_zero());

  report.append(functional_identities());
  for (auto [eps, t] : {std::pair{1, 0.4472135955}, {-1, 1.0}, {1, 1.0}}) {
    report.append(finite_difference_check(eps, t, 100));
  }

  struct Expected {
    int eps;
    Rational u;
    long k;
    std::vector<std::pair<Branch::Type, Rational>> branches;
  };
  const std::vector<Expected> table{
      {1, Rational(1, 5), 0, {{Branch::Type::sphere, Rational(3, 20)}}},
      {-1, Rational(1), 0, {{Branch::Type::circle, Rational(3, 4)}}},
      {-1, Rational(1), 2, {{Branch::Type::circle, Rational(7, 4)}, {Branch::Type::point_pair, Rational(3, 4)}}},
  };
  for (const auto& e : table) {
    SolutionSet set = classify_deformed(e.eps, e.u, e.k);
    bool ok = set.branches.size() == e.branches.size() + 1 &&
              set.branches.back().type == Branch::Type::trivial;
    for (std::size_t i = 0; ok && i < e.branches.size(); ++i) {
      ok = set.branches[i].type == e.branches[i].first && set.branches[i].value == e.branches[i].second;
    }
    report.add("classify eps=" + std::to_string(e.eps) + " u=" + format_rational(e.u) +
                   " k=" + std::to_string(e.k),
               ok, ok ? "" : to_json(set).dump());
    Report v = verify_solution_set(set, 16);
    report.add("solution set eps=" + std::to_string(e.eps) + " u=" + format_rational(e.u) +
                   " k=" + std::to_string(e.k) + " verified (" + std::to_string(v.checks.size()) +
                   " checks)",
               v.passed());
  }
  return report;
}

Report sasakian_asd_checks() {
  Report report;
  report.append(validate_presentation(make_sasakian(1, true).algebra));
  for (int eps : {1, -1}) {
    SasakianPreset p = make_sasakian(eps, true);
    add_equal(report, "sasakian-asd eps=" + std::to_string(eps) + ": d(psi) = 0",
              differential(build_psi(p)), Form(p.algebra));
    report.append(check_pullback_asd(p));
  }
  report.append(instanton_identities());
  return report;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"sasakian", "sasakian-asd", "cy3", "hypersymplectic"};
  return names;
}

Report verify_preset(const std::string& name, const RationalMatrix3& q) {
  if (name == "sasakian") return sasakian_checks();
  if (name == "sasakian-asd") return sasakian_asd_checks();
  if (name == "cy3") {
    CY3Preset p = make_cy3();
    Report report = validate_presentation(p.algebra);
    report.append(check_cy3_lemma(p).report);
    return report;
  }
  if (name == "hypersymplectic") {
    HypersymplecticPreset p = make_hypersymplectic(q);
    Report report = validate_presentation(p.algebra);
    report.append(check_pullback_asd(p));
    return report;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    if (!c.passed && !c.witness.empty()) j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  return checks;
}

}  // namespace dg2

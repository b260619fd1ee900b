#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dg2/functional.hpp"
#include "dg2/instanton.hpp"
#include "dg2/verify.hpp"

namespace dg2 {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  // verify
  std::string preset;
  bool all = false;
  std::vector<std::string> q;
  std::string q_file;
  // shared
  int epsilon = 0;
  std::string output;
  // moduli
  std::string u;
  long k = 0;
  std::string equation = "deformed";
  // functional
  double t = 0;
  std::string grid;
  bool critical = false;
  int seeds = 200;
  unsigned long long rng = 0;
  std::vector<double> hessian;
  double volume = 1.0;
  // scan
  std::string u_range;
};

void emit(const Options& opts, std::ostream& out, const std::string& text) {
  if (opts.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.output);
  if (!file) throw UsageError("cannot open output file " + opts.output);
  file << text;
}

RationalMatrix3 read_q(const Options& opts) {
  if (!opts.q.empty() && !opts.q_file.empty()) throw UsageError("give either --q or --q-file");
  if (!opts.q_file.empty()) {
    std::ifstream in(opts.q_file);
    if (!in) throw UsageError("cannot read " + opts.q_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_q_matrix(buf.str());
  }
  if (!opts.q.empty()) {
    std::string joined;
    for (const auto& v : opts.q) joined += v + " ";
    return parse_q_matrix(joined);
  }
  return identity_matrix();
}

int cmd_verify(const Options& opts, std::ostream& out) {
  if (opts.all == !opts.preset.empty()) throw UsageError("give exactly one of --preset or --all");
  std::vector<std::string> names = opts.all ? preset_names() : std::vector<std::string>{opts.preset};
  const auto& known = preset_names();
  for (const auto& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      throw UsageError("unknown preset '" + n + "'");
    }
  }
  RationalMatrix3 q = read_q(opts);
  json presets = json::array();
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& n : names) {
    Report r = verify_preset(n, q);
    total += r.checks.size();
    for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
    json p;
    p["preset"] = n;
    p["passed"] = r.passed();
    p["checks"] = to_json(r);
    presets.push_back(std::move(p));
  }
  json doc;
  doc["passed"] = failed == 0;
  doc["total"] = total;
  doc["failed"] = failed;
  doc["presets"] = std::move(presets);
  emit(opts, out, doc.dump(2) + "\n");
  return failed == 0 ? 0 : 1;
}

int cmd_nearly_parallel(const Options& opts, std::ostream& out) {
  std::vector<int> signs = opts.epsilon == 0 ? std::vector<int>{1, -1} : std::vector<int>{opts.epsilon};
  json list = json::array();
  for (int eps : signs) {
    for (const auto& s : solve_nearly_parallel(eps)) {
      json j;
      j["epsilon"] = s.epsilon;
      j["u"] = format_rational(s.u);
      j["t"] = s.t.to_string();
      j["lambda"] = s.lambda.to_string();
      j["t_float"] = s.t.to_double();
      j["lambda_float"] = s.lambda.to_double();
      list.push_back(std::move(j));
    }
  }
  emit(opts, out, list.dump(2) + "\n");
  return 0;
}

int cmd_moduli(const Options& opts, std::ostream& out) {
  Rational u = parse_rational(opts.u);
  if (sgn(u) <= 0) throw UsageError("--u must be positive");
  Equation eq = equation_from_name(opts.equation);
  SolutionSet set = eq == Equation::g2 ? classify_g2(opts.epsilon, u, opts.k)
                                       : classify_deformed(opts.epsilon, u, opts.k);
  Report v = verify_solution_set(set);
  json doc = to_json(set);
  doc["verified"] = v.passed();
  if (!v.passed()) doc["failures"] = to_json(v);
  emit(opts, out, doc.dump(2) + "\n");
  return v.passed() ? 0 : 1;
}

json point_json(const CriticalPoint& p) {
  json j;
  j["x"] = p.x;
  j["y"] = p.y;
  j["value"] = p.value;
  j["class"] = to_string(p.cls);
  if (p.transverse) j["transverse"] = to_string(*p.transverse);
  j["grad_norm"] = p.grad_norm;
  j["branch"] = p.branch;
  return j;
}

int cmd_functional(const Options& opts, std::ostream& out) {
  if (!(opts.t > 0)) throw UsageError("--t must be positive");
  int modes = (opts.grid.empty() ? 0 : 1) + (opts.critical ? 1 : 0) + (opts.hessian.empty() ? 0 : 1);
  if (modes != 1) throw UsageError("give exactly one of --grid, --critical or --hessian");

  if (!opts.grid.empty()) {
    emit(opts, out, grid_export(opts.epsilon, opts.t, parse_grid(opts.grid), opts.volume));
    return 0;
  }
  if (opts.critical) {
    if (opts.seeds < 1) throw UsageError("--seeds must be at least 1");
    NumericCriticalPoints found = critical_points_numeric(opts.epsilon, opts.t, opts.seeds, opts.rng);
    json doc;
    doc["epsilon"] = opts.epsilon;
    doc["t"] = opts.t;
    doc["seeds"] = found.seeds;
    doc["discarded"] = found.discarded;
    json points = json::array();
    bool on_branches = true;
    for (auto p : found.points) {
      p.value *= opts.volume;
      on_branches = on_branches && !p.branch.empty();
      points.push_back(point_json(p));
    }
    doc["points"] = std::move(points);
    emit(opts, out, doc.dump(2) + "\n");
    return on_branches ? 0 : 1;
  }
  CriticalPoint p = hessian_at(functional_direct(opts.epsilon), opts.hessian[0], opts.hessian[1], opts.t);
  json doc = point_json(p);
  doc.erase("branch");
  doc["value"] = p.value * opts.volume;
  doc["hessian"] = {{p.hessian[0][0] * opts.volume, p.hessian[0][1] * opts.volume},
                    {p.hessian[1][0] * opts.volume, p.hessian[1][1] * opts.volume}};
  doc["eigenvalues"] = {p.eigenvalues[0] * opts.volume, p.eigenvalues[1] * opts.volume};
  doc["degenerate"] = p.cls == CriticalClass::degenerate;
  doc["tolerance_based"] = true;
  emit(opts, out, doc.dump(2) + "\n");
  return 0;
}

int cmd_scan(const Options& opts, std::ostream& out) {
  emit(opts, out, scan_csv(moduli_scan(opts.epsilon, opts.k, parse_u_range(opts.u_range))));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact and numeric checks for invariant instantons on 3-Sasakian 7-manifolds",
               "dg2"};
  app.require_subcommand(1);
  const auto signs = CLI::IsMember({-1, 1});

  auto* verify = app.add_subcommand("verify", "Run the identity checks of one or all presets");
  verify->add_option("--preset", opts.preset, "sasakian, sasakian-asd, cy3 or hypersymplectic");
  verify->add_flag("--all", opts.all, "Run every preset");
  verify->add_option("--q", opts.q, "Hypersymplectic Q as nine rationals, row-major")->expected(9);
  verify->add_option("--q-file", opts.q_file, "File with nine whitespace-separated rationals");
  verify->add_option("--output", opts.output, "Write JSON here instead of stdout");

  auto* np = app.add_subcommand("nearly-parallel", "Solve d(phi) = lambda psi exactly");
  np->add_option("--epsilon", opts.epsilon, "Sign (both if omitted)")->check(signs);
  np->add_option("--output", opts.output, "Write JSON here instead of stdout");

  auto* moduli = app.add_subcommand("moduli", "Classify solutions within the invariant ansatz");
  moduli->add_option("--epsilon", opts.epsilon)->required()->check(signs);
  moduli->add_option("--u", opts.u, "t^2 as p/q")->required();
  moduli->add_option("--k", opts.k, "Degree of the line bundle O(k)");
  moduli->add_option("--equation", opts.equation, "g2 or deformed")
      ->check(CLI::IsMember({"g2", "deformed"}));
  moduli->add_option("--output", opts.output, "Write JSON here instead of stdout");

  auto* functional = app.add_subcommand("functional", "Landscape of the functional");
  functional->add_option("--epsilon", opts.epsilon)->required()->check(signs);
  functional->add_option("--t", opts.t)->required();
  functional->add_option("--grid", opts.grid, "xmin:xmax:ymin:ymax:n, CSV x,y,F");
  functional->add_flag("--critical", opts.critical, "Newton search for critical points");
  functional->add_option("--seeds", opts.seeds, "Number of Newton starts");
  functional->add_option("--rng", opts.rng, "Seed of the start generator");
  functional->add_option("--hessian", opts.hessian, "Second-derivative test at x y")->expected(2);
  functional->add_option("--volume", opts.volume, "Volume constant c multiplying F");
  functional->add_option("--output", opts.output, "Write output here instead of stdout");

  auto* scan = app.add_subcommand("scan", "Branch radii of the deformed solution set over u");
  scan->add_option("--epsilon", opts.epsilon)->required()->check(signs);
  scan->add_option("--k", opts.k, "Degree of the line bundle O(k)");
  scan->add_option("--u-range", opts.u_range, "a:b:n")->required();
  scan->add_option("--output", opts.output, "Write CSV here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "dg2: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(opts, out);
    if (np->parsed()) return cmd_nearly_parallel(opts, out);
    if (moduli->parsed()) return cmd_moduli(opts, out);
    if (functional->parsed()) return cmd_functional(opts, out);
    if (scan->parsed()) return cmd_scan(opts, out);
  } catch (const std::invalid_argument& e) {
    err << "dg2: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "dg2: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace dg2

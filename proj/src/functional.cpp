#include "dg2/functional.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "dg2/parallel.hpp"

namespace dg2 {

namespace {

Poly var(Symbol s) { return Poly::var(s); }

struct Derivatives {
  Poly f, gx, gy, hxx, hxy, hyy;
};

Derivatives derivatives(const Poly& f) {
  Poly gx = f.differentiate(sym::x);
  Poly gy = f.differentiate(sym::y);
  return {f, gx, gy, gx.differentiate(sym::x), gx.differentiate(sym::y), gy.differentiate(sym::y)};
}

// Float evaluator for a polynomial in x, y, t: coefficients and exponents
// flattened once so the Newton loop avoids map lookups.
class PlaneEvaluator {
 public:
  explicit PlaneEvaluator(const Poly& p) {
    for (const auto& [e, c] : p.terms()) {
      terms_.push_back({c.to_double(), e[static_cast<std::size_t>(sym::x)],
                        e[static_cast<std::size_t>(sym::y)],
                        e[static_cast<std::size_t>(Symbol::t)]});
      for (std::size_t i = 0; i < kSymbolCount; ++i) {
        auto s = static_cast<Symbol>(i);
        if (e[i] != 0 && s != sym::x && s != sym::y && s != Symbol::t) {
          throw UnboundSymbol("plane evaluator: unexpected symbol " + std::string(symbol_name(s)));
        }
      }
    }
  }

  double operator()(double x, double y, double t) const {
    double acc = 0;
    for (const auto& term : terms_) {
      acc += term.c * std::pow(x, term.ex) * std::pow(y, term.ey) * std::pow(t, term.et);
    }
    return acc;
  }

 private:
  struct Term {
    double c;
    int ex, ey, et;
  };
  std::vector<Term> terms_;
};

struct FloatModel {
  PlaneEvaluator f, gx, gy, hxx, hxy, hyy;
  explicit FloatModel(const Derivatives& d)
      : f(d.f), gx(d.gx), gy(d.gy), hxx(d.hxx), hxy(d.hxy), hyy(d.hyy) {}
};

Scalar evaluate(const Poly& p, const Scalar& x, const Scalar& y, const Rational& u) {
  return p.reduce_square(Symbol::t, Poly(u))
      .substitute(std::map<Symbol, Poly>{{sym::x, Poly(x)}, {sym::y, Poly(y)}})
      .constant_value();
}

std::array<double, 2> eigenvalues(const std::array<std::array<double, 2>, 2>& h) {
  double m = (h[0][0] + h[1][1]) / 2;
  double d = std::hypot((h[0][0] - h[1][1]) / 2, h[0][1]);
  return {m - d, m + d};
}

CriticalPoint float_point(const FloatModel& model, double x, double y, double t) {
  CriticalPoint cp;
  cp.x = x;
  cp.y = y;
  cp.value = model.f(x, y, t);
  cp.grad_norm = std::hypot(model.gx(x, y, t), model.gy(x, y, t));
  double hxy = model.hxy(x, y, t);
  cp.hessian = {{{model.hxx(x, y, t), hxy}, {hxy, model.hyy(x, y, t)}}};
  cp.eigenvalues = eigenvalues(cp.hessian);
  const double tol = 1e-9;
  auto sign_class = [](double e) { return e > 0 ? CriticalClass::min : CriticalClass::max; };
  bool zero0 = std::abs(cp.eigenvalues[0]) < tol;
  bool zero1 = std::abs(cp.eigenvalues[1]) < tol;
  if (zero0 || zero1) {
    cp.cls = CriticalClass::degenerate;
    if (zero0 != zero1) cp.transverse = sign_class(zero0 ? cp.eigenvalues[1] : cp.eigenvalues[0]);
  } else if (cp.eigenvalues[0] > 0) {
    cp.cls = CriticalClass::min;
  } else if (cp.eigenvalues[1] < 0) {
    cp.cls = CriticalClass::max;
  } else {
    cp.cls = CriticalClass::saddle;
  }
  return cp;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

int parse_count(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return static_cast<int>(v);
}

}  // namespace

ClosedForm reduce_to_plane(int epsilon, const Poly& full) {
  return {epsilon, full, full.substitute(std::map<Symbol, Poly>{{Symbol::a2, Poly()}})};
}

ClosedForm functional_direct(int epsilon) {
  SasakianPreset preset = make_sasakian(epsilon);
  Form a = connection_form(preset, ConnectionAnsatz::symbolic());
  Form da = differential(a);
  Form psi = build_psi(preset);
  Form inner = wedge(da, psi) - Poly(Rational(1, 12)) * wedge(da, wedge(da, da));
  Poly full = Poly(Rational(-1, 2)) * wedge(a, inner).top_coefficient();
  return reduce_to_plane(epsilon, full);
}

Poly functional_expected(int epsilon) {
  Poly x = var(sym::x);
  Poly y = var(sym::y);
  Poly r2 = x * x + y * y;
  Poly u = var(Symbol::t).pow(2);
  return -(r2 * (Poly(2) * r2 - Poly(1)) + Poly(2) * u * (x * x + Poly(epsilon) * y * y));
}

Poly functional_transgression(int epsilon, const ConnectionAnsatz& conn) {
  SasakianPreset preset = make_sasakian(epsilon, !conn.k.is_zero());
  ConnectionAnsatz perturbation{conn.a1, conn.a2, conn.a3, Poly()};
  Form a = connection_form(preset, perturbation);
  Form fs = Poly::var(Symbol::s) * differential(a);
  if (!conn.k.is_zero()) fs += conn.k * preset.alpha();
  auto integrate = [](const Form& f) {
    return f.map_coefficients([](const Poly& c) { return c.integrate_unit_interval(Symbol::s); });
  };
  // Real forms: A - A0 = i a and F_s = i(...), so cs2 = -cs2_real, cs4 = cs4_real.
  Form cs2 = Poly(2) * integrate(wedge(a, fs));
  Form cs4 = Poly(4) * integrate(wedge(a, wedge(fs, wedge(fs, fs))));
  Poly top2 = wedge(cs2, build_psi(preset)).top_coefficient();
  Poly top4 = cs4.top_coefficient();
  return Poly(Rational(1, 2)) * (-top2 + Poly(Rational(1, 12)) * top4);
}

std::pair<Poly, Poly> gradient(const ClosedForm& cf) {
  return {cf.reduced.differentiate(sym::x), cf.reduced.differentiate(sym::y)};
}

std::string to_string(CriticalClass c) {
  switch (c) {
    case CriticalClass::min: return "min";
    case CriticalClass::max: return "max";
    case CriticalClass::saddle: return "saddle";
    case CriticalClass::degenerate: return "degenerate";
  }
  return "?";
}

ExactCriticalPoint hessian_at(const ClosedForm& cf, const Scalar& x, const Scalar& y,
                              const Rational& u) {
  Derivatives d = derivatives(cf.reduced);
  ExactCriticalPoint cp;
  cp.x = x;
  cp.y = y;
  cp.value = evaluate(d.f, x, y, u);
  cp.gradient = {evaluate(d.gx, x, y, u), evaluate(d.gy, x, y, u)};
  Scalar hxy = evaluate(d.hxy, x, y, u);
  cp.hessian = {{{evaluate(d.hxx, x, y, u), hxy}, {hxy, evaluate(d.hyy, x, y, u)}}};
  Scalar det = cp.hessian[0][0] * cp.hessian[1][1] - hxy * hxy;
  Scalar trace = cp.hessian[0][0] + cp.hessian[1][1];
  if (det.sign() < 0) {
    cp.cls = CriticalClass::saddle;
  } else if (det.sign() == 0) {
    cp.cls = CriticalClass::degenerate;
  } else {
    cp.cls = trace.sign() > 0 ? CriticalClass::min : CriticalClass::max;
  }
  return cp;
}

CriticalPoint hessian_at(const ClosedForm& cf, double x, double y, double t) {
  FloatModel model(derivatives(cf.reduced));
  return float_point(model, x, y, t);
}

std::string match_branch(int epsilon, double t, double x, double y, double tol) {
  if (std::abs(x) < tol && std::abs(y) < tol) return "origin";
  SolutionSet set = classify_deformed(epsilon, Rational(t * t), 0);
  double r2 = x * x + y * y;
  for (const auto& b : set.branches) {
    double value = b.value.get_d();
    switch (b.type) {
      case Branch::Type::sphere:
        if (std::abs(r2 - value) < tol) return "sphere";
        break;
      case Branch::Type::circle:
        if (std::abs(x) < tol && std::abs(y * y - value) < tol) return "circle";
        break;
      case Branch::Type::point_pair:
        if (std::abs(y) < tol && std::abs(x * x - value) < tol) return "point_pair";
        break;
      default:
        break;
    }
  }
  return "";
}

NumericCriticalPoints critical_points_numeric(int epsilon, double t, int seeds,
                                              unsigned long long rng_seed) {
  if (!(t > 0)) throw std::invalid_argument("t must be positive");
  if (seeds < 1) throw std::invalid_argument("seeds must be at least 1");
  const ClosedForm cf = functional_direct(epsilon);
  const FloatModel model(derivatives(cf.reduced));

  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> start(-1.2, 1.2);
  std::vector<std::pair<double, double>> starts(static_cast<std::size_t>(seeds));
  for (auto& s : starts) {
    s.first = start(rng);
    s.second = start(rng);
  }

  std::vector<std::optional<std::pair<double, double>>> found(starts.size());
  parallel_for(starts.size(), [&](std::size_t i) {
    double x = starts[i].first;
    double y = starts[i].second;
    auto norm_at = [&](double px, double py) {
      return std::hypot(model.gx(px, py, t), model.gy(px, py, t));
    };
    double last_step = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 100; ++iter) {
      double gx = model.gx(x, y, t);
      double gy = model.gy(x, y, t);
      double gn = std::hypot(gx, gy);
      if (gn == 0 || (gn < 1e-13 && last_step < 1e-10)) break;
      double a = model.hxx(x, y, t);
      double b = model.hxy(x, y, t);
      double c = model.hyy(x, y, t);
      // Newton step through the symmetric eigendecomposition, skipping
      // directions with vanishing curvature.
      auto ev = eigenvalues({{{a, b}, {b, c}}});
      double theta = 0.5 * std::atan2(2 * b, a - c);
      std::array<std::array<double, 2>, 2> vec{{{std::cos(theta), std::sin(theta)},
                                                {-std::sin(theta), std::cos(theta)}}};
      // vec[0] has eigenvalue (a+c)/2 + d, vec[1] has (a+c)/2 - d.
      std::array<double, 2> lam{ev[1], ev[0]};
      double dx = 0;
      double dy = 0;
      for (int k = 0; k < 2; ++k) {
        if (std::abs(lam[k]) < 1e-12) continue;
        double proj = (vec[k][0] * gx + vec[k][1] * gy) / lam[k];
        dx -= proj * vec[k][0];
        dy -= proj * vec[k][1];
      }
      // Halve the step up to 20 times until |gradient| decreases.
      auto damped = [&](double sx, double sy, double& ox, double& oy) {
        double step = 1;
        for (int h = 0; h <= 20; ++h, step /= 2) {
          ox = x + step * sx;
          oy = y + step * sy;
          if (norm_at(ox, oy) < gn) return true;
        }
        return false;
      };
      double nx = x;
      double ny = y;
      // Near an inflection the Newton step is useless; descend |gradient|^2.
      if (!damped(dx, dy, nx, ny) && !damped(-(a * gx + b * gy), -(b * gx + c * gy), nx, ny)) {
        break;
      }
      last_step = std::hypot(nx - x, ny - y);
      x = nx;
      y = ny;
    }
    if (std::isfinite(x) && std::isfinite(y) && norm_at(x, y) < 1e-10) found[i] = {x, y};
  });

  NumericCriticalPoints out;
  out.seeds = seeds;
  for (const auto& f : found) {
    if (!f) {
      ++out.discarded;
      continue;
    }
    bool duplicate = false;
    for (const auto& p : out.points) {
      if (std::hypot(p.x - f->first, p.y - f->second) < 1e-7) duplicate = true;
    }
    if (duplicate) continue;
    CriticalPoint cp = float_point(model, f->first, f->second, t);
    cp.branch = match_branch(epsilon, t, cp.x, cp.y);
    out.points.push_back(cp);
  }
  // Order on coordinates rounded to the deduplication scale, so that
  // rounding noise around x = 0 does not decide the order.
  auto key = [](const CriticalPoint& p) {
    return std::pair{std::llround(p.x * 1e7), std::llround(p.y * 1e7)};
  };
  std::sort(out.points.begin(), out.points.end(),
            [&](const CriticalPoint& a, const CriticalPoint& b) { return key(a) < key(b); });
  return out;
}

Grid parse_grid(std::string_view text) {
  auto parts = split(text, ':');
  if (parts.size() != 5) throw std::invalid_argument("grid must be xmin:xmax:ymin:ymax:n");
  Grid g{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]),
         parse_double(parts[3]), parse_count(parts[4])};
  if (!(g.x_min < g.x_max) || !(g.y_min < g.y_max)) {
    throw std::invalid_argument("grid needs min < max on both axes");
  }
  if (g.n < 2) throw std::invalid_argument("grid needs n >= 2");
  return g;
}

std::string format_double(double v) {
  if (v == 0) v = 0;  // drops the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string grid_export(int epsilon, double t, const Grid& grid, double volume) {
  if (!(grid.x_min < grid.x_max) || !(grid.y_min < grid.y_max) || grid.n < 2) {
    throw std::invalid_argument("malformed grid");
  }
  const ClosedForm cf = functional_direct(epsilon);
  const PlaneEvaluator f(cf.reduced);
  const auto n = static_cast<std::size_t>(grid.n);
  std::vector<std::string> rows(n);
  parallel_for(n, [&](std::size_t iy) {
    double y = grid.y_min + (grid.y_max - grid.y_min) * static_cast<double>(iy) /
                                static_cast<double>(n - 1);
    std::string out;
    for (std::size_t ix = 0; ix < n; ++ix) {
      double x = grid.x_min + (grid.x_max - grid.x_min) * static_cast<double>(ix) /
                                  static_cast<double>(n - 1);
      out += format_double(x) + "," + format_double(y) + "," + format_double(volume * f(x, y, t)) +
             "\n";
    }
    rows[iy] = std::move(out);
  });
  std::string csv = "x,y,F\n";
  for (const auto& r : rows) csv += r;
  return csv;
}

std::vector<Rational> parse_u_range(std::string_view text) {
  auto parts = split(text, ':');
  if (parts.size() != 3) throw std::invalid_argument("range must be a:b:n");
  Rational a = parse_rational(parts[0]);
  Rational b = parse_rational(parts[1]);
  int n = parse_count(parts[2]);
  if (n < 1) throw std::invalid_argument("range needs n >= 1");
  if (sgn(a) <= 0 || sgn(b) <= 0) throw std::invalid_argument("range must be positive");
  if (n > 1 && !(a < b)) throw std::invalid_argument("range needs a < b");
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(n == 1 ? a : Rational(a + (b - a) * i / (n - 1)));
    out.back().canonicalize();
  }
  return out;
}

std::vector<ScanRow> moduli_scan(int epsilon, long k, const std::vector<Rational>& u_grid) {
  std::vector<ScanRow> rows;
  for (const auto& u : u_grid) {
    SolutionSet set = classify_deformed(epsilon, u, k);
    double t = std::sqrt(u.get_d());
    for (const auto& b : set.branches) {
      if (b.type == Branch::Type::trivial || b.type == Branch::Type::all) continue;
      rows.push_back({t, to_string(b.type), std::sqrt(b.value.get_d())});
    }
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string csv = "t,branch,r\n";
  for (const auto& row : rows) {
    csv += format_double(row.t) + "," + row.branch + "," + format_double(row.r) + "\n";
  }
  return csv;
}

Report functional_identities() {
  Report report;
  const Poly x = var(sym::x);
  const Poly y = var(sym::y);
  const Poly t = var(Symbol::t);
  const Poly u = t.pow(2);
  const Poly r2 = x * x + y * y;
  auto witness = [](bool ok, const Poly& diff) { return ok ? std::string() : diff.to_string(); };

  for (int eps : {1, -1}) {
    const std::string prefix = "eps=" + std::to_string(eps) + ": ";
    ClosedForm cf = functional_direct(eps);
    Poly expected = functional_expected(eps);
    bool direct_ok = cf.reduced == expected;
    report.add(prefix + "functional = -[(x^2+y^2)(2(x^2+y^2)-1) + 2t^2(x^2 + eps y^2)]", direct_ok,
               witness(direct_ok, cf.reduced - expected));

    Poly trans = functional_transgression(eps, ConnectionAnsatz::symbolic());
    bool trans_ok = trans == cf.full;
    report.add(prefix + "transgression (k=0) = direct functional", trans_ok,
               witness(trans_ok, trans - cf.full));

    Poly rotated = cf.full.substitute(std::map<Symbol, Poly>{
        {Symbol::a1, var(Symbol::a2)}, {Symbol::a2, -var(Symbol::a1)}});
    Poly swapped = cf.full.substitute(std::map<Symbol, Poly>{
        {Symbol::a1, var(Symbol::a2)}, {Symbol::a2, var(Symbol::a1)}});
    report.add(prefix + "invariant under (a1,a2) -> (a2,-a1) and a1 <-> a2",
               rotated == cf.full && swapped == cf.full);

    auto [gx, gy] = gradient(cf);
    Poly ex = Poly(-2) * x * (Poly(4) * r2 + Poly(2) * u - Poly(1));
    Poly ey = Poly(-2) * y * (Poly(4) * r2 + Poly(2 * eps) * u - Poly(1));
    report.add(prefix + "dF/dx = -2x(4(x^2+y^2) + 2t^2 - 1)", gx == ex, witness(gx == ex, gx - ex));
    report.add(prefix + "dF/dy = -2y(4(x^2+y^2) + 2 eps t^2 - 1)", gy == ey,
               witness(gy == ey, gy - ey));

    // Critical points of the functional are the deformed instantons, for every k.
    SasakianPreset asd = make_sasakian(eps, true);
    ConnectionAnsatz with_k = ConnectionAnsatz::symbolic(var(Symbol::k));
    Poly fk = functional_transgression(eps, with_k);
    Residual rk = deformed_residual(asd, with_k);
    bool crit_ok = true;
    const Symbol as[3] = {Symbol::a1, Symbol::a2, Symbol::a3};
    for (int i = 0; i < 3; ++i) {
      crit_ok = crit_ok && fk.differentiate(as[i]) == -rk.coefficients[i];
    }
    report.add(prefix + "dF/da_i = -(deformed residual)_i on O(k) (extension, symbolic k)",
               crit_ok);

    Poly k1 = functional_transgression(eps, {Poly(), Poly(), var(Symbol::a3), Poly(1)});
    Poly d3 = k1.differentiate(Symbol::a3).reduce_square(Symbol::a3, (Poly(2) - Poly(2) * u) * Poly(Rational(1, 4)));
    report.add(prefix + "k=1, a=(0,0,a3): critical at a3^2 = (2 - 2u)/4 (extension)", d3.is_zero(),
               witness(d3.is_zero(), d3));

    for (long k : {0L, 2L}) {
      Poly zero = functional_transgression(eps, {Poly(), Poly(), Poly(), Poly(k)});
      report.add(prefix + "transgression from A0 to itself vanishes (k=" + std::to_string(k) + ")",
                 zero.is_zero(), witness(zero.is_zero(), zero));
    }

    Derivatives d = derivatives(cf.reduced);
    std::map<Symbol, Poly> origin{{sym::x, Poly()}, {sym::y, Poly()}};
    Poly hxx = d.hxx.substitute(origin);
    Poly hyy = d.hyy.substitute(origin);
    Poly hxy = d.hxy.substitute(origin);
    bool eig_ok = hxx == Poly(2) * (Poly(1) - Poly(2) * u) &&
                  hyy == Poly(2) * (Poly(1) - Poly(2 * eps) * u) && hxy.is_zero();
    report.add(prefix + "Hessian at origin = diag(2(1-2t^2), 2(1-2 eps t^2))", eig_ok);

    for (auto uu : {Rational(1, 5), Rational(1, 2), Rational(1)}) {
      CriticalClass want = uu < Rational(1, 2)    ? CriticalClass::min
                           : uu == Rational(1, 2) ? CriticalClass::degenerate
                           : eps == 1             ? CriticalClass::max
                                                  : CriticalClass::saddle;
      auto cp = hessian_at(cf, Scalar(0), Scalar(0), uu);
      report.add(prefix + "origin at u=" + format_rational(uu) + " is " + to_string(want),
                 cp.cls == want, to_string(cp.cls));
    }

    // Zeros of the gradient: -2x Bx = -2y By = 0 with Bx = 4r^2 + 2u - 1,
    // By = 4r^2 + 2 eps u - 1. Off the axes Bx - By = 2u(1 - eps) must vanish,
    // so that case only occurs for eps = +1 and is the sphere again.
    bool cases_ok = true;
    std::string cases_witness;
    for (auto uu : {Rational(1, 5), Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)}) {
      SolutionSet set = classify_deformed(eps, uu, 0);
      auto has = [&](Branch::Type type, const Rational& value) {
        for (const auto& b : set.branches) {
          if (b.type == type && b.value == value) return true;
        }
        return false;
      };
      Rational on_y_axis = (1 - 2 * eps * uu) / 4;  // x = 0, By = 0
      Rational on_x_axis = (1 - 2 * uu) / 4;        // y = 0, Bx = 0
      if (sgn(on_y_axis) > 0 &&
          !has(eps == 1 ? Branch::Type::sphere : Branch::Type::circle, on_y_axis)) {
        cases_ok = false;
        cases_witness = "x=0 branch at u=" + format_rational(uu);
      }
      if (sgn(on_x_axis) > 0 &&
          !has(eps == 1 ? Branch::Type::sphere : Branch::Type::point_pair, on_x_axis)) {
        cases_ok = false;
        cases_witness = "y=0 branch at u=" + format_rational(uu);
      }
    }
    report.add(prefix + "every gradient zero is the origin or on a deformed branch", cases_ok,
               cases_witness);
  }

  ClosedForm plus = functional_direct(1);
  Poly special = plus.reduced.reduce_square(Symbol::t, Poly(Rational(1, 2)));
  Poly quartic = Poly(-2) * r2 * r2;
  report.add("eps=1 u=1/2: F = -2(x^2+y^2)^2", special == quartic,
             witness(special == quartic, special - quartic));

  ClosedForm minus = functional_direct(-1);
  Poly at_half = minus.reduced.reduce_square(Symbol::t, Poly(Rational(1, 2)));
  Poly x_axis = at_half.substitute(std::map<Symbol, Poly>{{sym::y, Poly()}});
  Poly y_axis = at_half.substitute(std::map<Symbol, Poly>{{sym::x, Poly()}});
  report.add("eps=-1 u=1/2: F(x,0) = -2x^4 (local max at 0)", x_axis == Poly(-2) * x.pow(4));
  report.add("eps=-1 u=1/2: F(0,y) = 2y^2 - 2y^4 (local min at 0)",
             y_axis == Poly(2) * y * y - Poly(2) * y.pow(4));

  auto ring = hessian_at(minus, Scalar(0), Scalar::sqrt(Rational(3, 4)), Rational(1));
  bool ring_ok = ring.value == Scalar(Rational(9, 8)) && ring.cls == CriticalClass::max &&
                 ring.gradient[0].is_zero() && ring.gradient[1].is_zero();
  report.add("eps=-1 u=1: (0, sqrt(3)/2) is a maximum with F = 9/8", ring_ok,
             ring_ok ? "" : ring.value.to_string() + " " + to_string(ring.cls));
  return report;
}

Report finite_difference_check(int epsilon, double t, int points, unsigned seed) {
  const ClosedForm cf = functional_direct(epsilon);
  const FloatModel model(derivatives(cf.reduced));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1, 1);
  const double h = 1e-6;
  double worst = 0;
  for (int i = 0; i < points; ++i) {
    double x = coord(rng);
    double y = coord(rng);
    double fdx = (model.f(x + h, y, t) - model.f(x - h, y, t)) / (2 * h);
    double fdy = (model.f(x, y + h, t) - model.f(x, y - h, t)) / (2 * h);
    worst = std::max({worst, std::abs(fdx - model.gx(x, y, t)), std::abs(fdy - model.gy(x, y, t))});
  }
  Report report;
  std::ostringstream name;
  name << "eps=" << epsilon << " t=" << t << ": central differences match the gradient on "
       << points << " points within 1e-6";
  report.add(name.str(), worst < 1e-6, worst < 1e-6 ? "" : "max error " + format_double(worst));
  return report;
}

}  // namespace dg2

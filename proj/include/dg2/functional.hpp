#ifndef DG2_FUNCTIONAL_HPP
#define DG2_FUNCTIONAL_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dg2/instanton.hpp"

namespace dg2 {

/// The functional on the invariant ansatz, with volume constant c = 1.
struct ClosedForm {
  int epsilon = 1;
  Poly full;     // in a1, a2, a3, t (and k, if symbolic)
  Poly reduced;  // a2 = 0, in x = a3, y = a1 and t
};

ClosedForm reduce_to_plane(int epsilon, const Poly& full);

/// -(1/2) top(a ^ (da^psi - (da)^3/12)) on the trivial bundle.
ClosedForm functional_direct(int epsilon);

/// -[(x^2+y^2)(2(x^2+y^2)-1) + 2t^2(x^2 + eps y^2)].
Poly functional_expected(int epsilon);

/// Transgression from the pullback connection A0 on O(k) (k = a.k) to
/// A = A0 + i a, with F_s = k alpha + s da integrated over s in [0, 1]:
/// (1/2) top(cs2 ^ psi + cs4/12), with cs2 and cs4 the imaginary-valued forms.
Poly functional_transgression(int epsilon, const ConnectionAnsatz& a);

/// (dF/dx, dF/dy) of the reduced closed form.
std::pair<Poly, Poly> gradient(const ClosedForm& cf);

enum class CriticalClass { min, max, saddle, degenerate };
std::string to_string(CriticalClass c);

struct ExactCriticalPoint {
  Scalar x;
  Scalar y;
  Scalar value;
  std::array<std::array<Scalar, 2>, 2> hessian;
  std::array<Scalar, 2> gradient;
  CriticalClass cls = CriticalClass::degenerate;
};

/// Exact second-derivative matrix at (x, y) with t^2 = u, classified by the
/// signs of its determinant and trace.
ExactCriticalPoint hessian_at(const ClosedForm& cf, const Scalar& x, const Scalar& y,
                              const Rational& u);

struct CriticalPoint {
  double x = 0;
  double y = 0;
  double value = 0;
  std::array<std::array<double, 2>, 2> hessian{};
  std::array<double, 2> eigenvalues{};  // ascending
  double grad_norm = 0;
  CriticalClass cls = CriticalClass::degenerate;
  /// For a degenerate point with one nonzero eigenvalue: its sign as a class.
  std::optional<CriticalClass> transverse;
  /// Branch of the deformed solution set the point lies on, if any.
  std::string branch;
};

/// Float second-derivative test; an eigenvalue below 1e-9 in magnitude
/// counts as zero.
CriticalPoint hessian_at(const ClosedForm& cf, double x, double y, double t);

struct NumericCriticalPoints {
  std::vector<CriticalPoint> points;
  int seeds = 0;
  int discarded = 0;  // seeds whose Newton iteration did not converge
};

/// Damped Newton from `seeds` uniform starts in [-1.2, 1.2]^2, at most 100
/// iterations each. A seed counts as converged when |gradient| < 1e-10;
/// converged points are deduplicated at 1e-7 and ordered by (x, y).
NumericCriticalPoints critical_points_numeric(int epsilon, double t, int seeds,
                                              unsigned long long rng_seed);

/// "origin", "sphere", "circle", "point_pair" or "" for a point (x, y) of
/// the reduced plane, within tol of the branches of classify_deformed.
std::string match_branch(int epsilon, double t, double x, double y, double tol = 1e-9);

struct Grid {
  double x_min = -1;
  double x_max = 1;
  double y_min = -1;
  double y_max = 1;
  int n = 2;
};

/// "xmin:xmax:ymin:ymax:n".
Grid parse_grid(std::string_view text);

/// CSV `x,y,F`, y-major, 17 significant digits, values multiplied by volume.
std::string grid_export(int epsilon, double t, const Grid& grid, double volume = 1.0);

/// n exact rationals from a to b inclusive, parsed from "a:b:n".
std::vector<Rational> parse_u_range(std::string_view text);

struct ScanRow {
  double t;
  std::string branch;
  double r;
};

std::vector<ScanRow> moduli_scan(int epsilon, long k, const std::vector<Rational>& u_grid);
std::string scan_csv(const std::vector<ScanRow>& rows);

std::string format_double(double v);

/// Exact identities of the functional and its critical-point analysis.
Report functional_identities();

/// Finite differences against the exact gradient at random points.
Report finite_difference_check(int epsilon, double t, int points, unsigned seed = 20240611);

}  // namespace dg2

#endif  // DG2_FUNCTIONAL_HPP

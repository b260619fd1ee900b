#ifndef DG2_INSTANTON_HPP
#define DG2_INSTANTON_HPP

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "dg2/models.hpp"

namespace dg2 {

/// A = i(a1 eta1 + a2 eta2 + a3 eta3) on the pullback of O(k). All forms here
/// are imaginary-valued forms divided by i, so F_A = i*F with F real.
struct ConnectionAnsatz {
  Poly a1;
  Poly a2;
  Poly a3;
  Poly k;  // 0 for the trivial bundle, an integer or the symbol k otherwise

  /// a_i symbolic, with the given k.
  static ConnectionAnsatz symbolic(Poly k = Poly());
  const Poly& coeff(int i) const;
};

/// a = a1 eta1 + a2 eta2 + a3 eta3 (the k*A0 part is not included).
Form connection_form(const SasakianPreset& preset, const ConnectionAnsatz& a);

/// F = da + k*alpha = -2 sum a_i (omega_i + eta_jk) + k*alpha.
Form curvature(const SasakianPreset& preset, const ConnectionAnsatz& a);

/// A degree-6 residual and its components along eta23^v, eta31^v, eta12^v.
struct Residual {
  Form form;
  std::array<Poly, 3> coefficients;

  Form rebuild() const;
};

Residual make_residual(const SasakianPreset& preset, Form form);

/// F^psi.
Residual g2_residual(const SasakianPreset& preset, const ConnectionAnsatz& a);
/// F^psi - F^3/6, the real form of F_A^3/6 + F_A^psi.
Residual deformed_residual(const SasakianPreset& preset, const ConnectionAnsatz& a);

enum class Equation { g2, deformed };

std::string to_string(Equation e);
Equation equation_from_name(std::string_view name);

struct Branch {
  enum class Type { trivial, sphere, circle, point_pair, all };
  Type type = Type::trivial;
  /// radius^2 for sphere and circle, a3^2 for a point pair.
  Rational value = 0;
  /// Set on the trivial point when a branch of radius^2 = 0 collapsed into it.
  bool degenerate = false;
  /// Point pair whose a3 is free (the whole a3-axis).
  bool line = false;
};

std::string to_string(Branch::Type t);

struct SolutionSet {
  int epsilon = 1;
  Rational u;
  long k = 0;
  Equation equation = Equation::deformed;
  std::vector<Branch> branches;
};

/// Solutions of F^psi = 0 within the ansatz. Throws if u <= 0.
SolutionSet classify_g2(int epsilon, const Rational& u, long k = 0);
/// Solutions of the deformed equation within the ansatz. Throws if u <= 0.
SolutionSet classify_deformed(int epsilon, const Rational& u, long k = 0);

nlohmann::ordered_json to_json(const SolutionSet& set);

/// Substitutes exact branch points, the symbolic branch constraint and
/// `samples` random float points per branch into the residual.
Report verify_solution_set(const SolutionSet& set, int samples = 16, unsigned seed = 20240611);

/// Exact identities of the instanton computations (curvature, residual
/// brackets, ASD pullbacks).
Report instanton_identities();

}  // namespace dg2

#endif  // DG2_INSTANTON_HPP

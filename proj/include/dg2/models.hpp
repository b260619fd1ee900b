#ifndef DG2_MODELS_HPP
#define DG2_MODELS_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dg2/cdga.hpp"

namespace dg2 {

/// Invariant forms on a 3-Sasakian 7-manifold, optionally extended by the
/// pulled-back ASD 2-form alpha with alpha^2 = -2v.
struct SasakianPreset {
  int epsilon = 1;
  bool with_asd = false;
  PresentationPtr algebra;

  Form eta(int i) const;
  Form omega(int i) const;
  /// eta_j ^ eta_k for (i, j, k) a cyclic permutation of (1, 2, 3).
  Form eta_pair(int i) const;
  Form v() const;
  Form alpha() const;
};

SasakianPreset make_sasakian(int epsilon, bool with_asd = false);

/// Product CY3 x S^1 (or a circle bundle with closed connection form).
struct CY3Preset {
  PresentationPtr algebra;
  Form gen(std::string_view name) const;
};

CY3Preset make_cy3();

using RationalMatrix3 = std::array<std::array<Rational, 3>, 3>;

/// Flat T^3 bundle over a hypersymplectic 4-manifold with Gram matrix Q.
struct HypersymplecticPreset {
  RationalMatrix3 q;
  PresentationPtr algebra;

  Form eta_pair(int i) const;
  Form omega(int i) const;
  Form alpha() const;
  Form v() const;
};

/// Throws std::invalid_argument unless q is symmetric positive definite.
HypersymplecticPreset make_hypersymplectic(const RationalMatrix3& q);

/// Nine whitespace-separated rationals in row-major order.
RationalMatrix3 parse_q_matrix(std::string_view text);
RationalMatrix3 identity_matrix();
Rational determinant(const RationalMatrix3& q);

Form build_phi(const SasakianPreset& preset);
Form build_phi(const CY3Preset& preset);
Form build_psi(const SasakianPreset& preset);
Form build_psi(const HypersymplecticPreset& preset);
Form build_psi(const CY3Preset& preset);

struct NearlyParallelSolution {
  Rational u;
  Scalar t;
  int epsilon = 1;
  Scalar lambda;
};

/// d(phi) - lambda*psi with t and lambda symbolic.
Form nearly_parallel_residual(const SasakianPreset& preset);

/// All t > 0 and lambda with d(phi) = lambda*psi, found exactly and
/// confirmed by back-substitution.
std::vector<NearlyParallelSolution> solve_nearly_parallel(int epsilon);

Report check_pullback_asd(const SasakianPreset& preset);
Report check_pullback_asd(const HypersymplecticPreset& preset);

struct Cy3LemmaResult {
  Report report;
  Poly residual;                // coefficient of vol6 in F^psi - F^3/6, F = c*omega
  std::vector<Scalar> roots;    // real values of c solving it
};

Cy3LemmaResult check_cy3_lemma(const CY3Preset& preset);

}  // namespace dg2

#endif  // DG2_MODELS_HPP

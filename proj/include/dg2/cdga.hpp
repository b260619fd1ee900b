#ifndef DG2_CDGA_HPP
#define DG2_CDGA_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dg2/poly.hpp"
#include "dg2/report.hpp"

namespace dg2 {

inline constexpr std::size_t kMaxGenerators = 10;

struct Generator {
  std::string name;
  int degree = 1;
};

/// Product of generators in the fixed generator order, stored as exponents.
struct Monomial {
  std::array<std::uint8_t, kMaxGenerators> exps{};
  auto operator<=>(const Monomial&) const = default;
};

/// Orders monomials so that earlier generators come first when rendering.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exps > b.exps; }
};

using LinearCombination = std::map<Monomial, Scalar, MonomialOrder>;

/// A product of generators written in any order, times a coefficient.
struct RawTerm {
  Scalar coeff;
  std::vector<std::string> word;
};

/// Rewriting exceeded its step budget; the preset's rewrite system loops.
class RewriteBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finitely presented graded-commutative differential algebra.
///
/// Relations are oriented rewrite rules `x*y -> rhs` (or powers such as
/// `x^3 -> rhs`) applied until no rule matches. Any monomial of degree above the top
/// degree is zero. The normal-form basis, its multiplication table and the
/// differential of every basis element are computed once, at construction.
class Presentation {
 public:
  /// Rewrite rule lhs -> rhs, where lhs is a product of generators
  /// (a pair, or a power such as omega^3).
  struct Relation {
    std::vector<std::string> lhs;
    std::vector<RawTerm> rhs;
  };

  Presentation(std::string name, std::vector<Generator> generators,
               std::vector<Relation> relations,
               std::map<std::string, std::vector<RawTerm>> differentials,
               std::vector<std::string> top);

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t generator_index(std::string_view name) const;
  const Monomial& top() const { return top_; }
  int top_degree() const { return top_degree_; }

  int degree(const Monomial& m) const;
  std::vector<std::size_t> word(const Monomial& m) const;
  Monomial monomial(const std::vector<std::string>& sorted_word) const;

  /// Koszul sorting followed by rewriting to normal form.
  LinearCombination normalize(const std::vector<std::size_t>& word) const;
  LinearCombination normalize(const std::vector<std::string>& word) const;

  const std::vector<Monomial>& basis() const { return basis_; }
  bool is_basis(const Monomial& m) const { return basis_index_.contains(m); }
  const LinearCombination& product(const Monomial& a, const Monomial& b) const;
  const LinearCombination& differential(const Monomial& m) const;

  const std::vector<Relation>& relations() const { return relations_; }
  const std::map<std::string, std::vector<RawTerm>>& generator_differentials() const {
    return differentials_;
  }

  std::string render(const Monomial& m) const;

 private:
  struct IndexedTerm {
    Scalar coeff;
    std::vector<std::size_t> word;
  };
  struct IndexedRelation {
    Monomial pattern;
    std::vector<IndexedTerm> rhs;
  };

  std::vector<std::size_t> indices(const std::vector<std::string>& word) const;
  LinearCombination rewrite(const Monomial& m, const Scalar& coeff, int& budget) const;
  LinearCombination normalize_budgeted(std::vector<std::size_t> word, int& budget) const;
  void build_tables();

  std::string name_;
  std::vector<Generator> generators_;
  std::vector<Relation> relations_;
  std::map<std::string, std::vector<RawTerm>> differentials_;
  std::vector<IndexedRelation> indexed_relations_;
  std::vector<std::vector<IndexedTerm>> indexed_differentials_;
  Monomial top_;
  int top_degree_ = 0;

  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> basis_index_;
  std::vector<LinearCombination> products_;  // row-major basis x basis
  std::vector<LinearCombination> differentials_table_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Homogeneous element of a presented algebra with polynomial coefficients.
class Form {
 public:
  using Terms = std::map<Monomial, Poly, MonomialOrder>;

  explicit Form(PresentationPtr algebra) : algebra_(std::move(algebra)) {}

  static Form constant(PresentationPtr algebra, const Poly& c);
  /// Product of the named generators in the given order, times c.
  static Form product(PresentationPtr algebra, const std::vector<std::string>& word,
                      const Poly& c = Poly(1));

  const PresentationPtr& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> degree() const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o) { return *this += -o; }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Poly& c, const Form& f);
  friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }

  /// Coefficient of the normal-form monomial; zero if absent.
  Poly coefficient(const Monomial& m) const;
  /// Coefficient of the product of generators written in the given order,
  /// e.g. {"eta3", "eta1", "v"} reads off the eta31^v component.
  Poly coefficient(const std::vector<std::string>& word) const;
  /// Coefficient of the designated top monomial; throws on a nonzero form
  /// of any other degree.
  Poly top_coefficient() const;

  template <class Fn>
  Form map_coefficients(Fn&& fn) const {
    Form r(algebra_);
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
  }

  std::string to_string() const;

  void add_term(const Monomial& m, const Poly& c);

 private:
  void require_same_algebra(const Form& o) const;

  PresentationPtr algebra_;
  Terms terms_;
};

Form wedge(const Form& a, const Form& b);
Form differential(const Form& a);

/// Consistency harness: d^2 = 0 on generators, relation degrees, d of each
/// relation, randomized Leibniz, associativity and graded commutativity.
Report validate_presentation(const PresentationPtr& algebra, unsigned seed = 20240611,
                             int leibniz_trials = 200, int associativity_trials = 500);

}  // namespace dg2

#endif  // DG2_CDGA_HPP

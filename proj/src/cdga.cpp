#include "dg2/cdga.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace dg2 {

namespace {

constexpr int kRewriteBudget = 1000;

}  // namespace

Presentation::Presentation(std::string name, std::vector<Generator> generators,
                           std::vector<Relation> relations,
                           std::map<std::string, std::vector<RawTerm>> differentials,
                           std::vector<std::string> top)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      relations_(std::move(relations)),
      differentials_(std::move(differentials)) {
  if (generators_.size() > kMaxGenerators) {
    throw std::invalid_argument("too many generators in presentation " + name_);
  }
  for (const auto& g : generators_) {
    if (g.degree < 1) throw std::invalid_argument("generator " + g.name + " has degree < 1");
  }
  for (const auto& rel : relations_) {
    if (rel.lhs.size() < 2) throw std::invalid_argument("relation lhs must be a product");
    IndexedRelation ir;
    ir.pattern = monomial(rel.lhs);
    for (const auto& term : rel.rhs) ir.rhs.push_back({term.coeff, indices(term.word)});
    indexed_relations_.push_back(std::move(ir));
  }
  indexed_differentials_.resize(generators_.size());
  for (const auto& [gen, terms] : differentials_) {
    auto& slot = indexed_differentials_[generator_index(gen)];
    for (const auto& term : terms) slot.push_back({term.coeff, indices(term.word)});
  }
  top_ = monomial(top);
  top_degree_ = degree(top_);
  build_tables();
}

std::size_t Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "' in " + name_);
}

std::vector<std::size_t> Presentation::indices(const std::vector<std::string>& word) const {
  std::vector<std::size_t> out;
  out.reserve(word.size());
  for (const auto& w : word) out.push_back(generator_index(w));
  return out;
}

int Presentation::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) d += m.exps[i] * generators_[i].degree;
  return d;
}

std::vector<std::size_t> Presentation::word(const Monomial& m) const {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < generators_.size(); ++i) w.insert(w.end(), m.exps[i], i);
  return w;
}

Monomial Presentation::monomial(const std::vector<std::string>& sorted_word) const {
  Monomial m;
  for (auto i : indices(sorted_word)) ++m.exps[i];
  return m;
}

LinearCombination Presentation::normalize(const std::vector<std::size_t>& word) const {
  int budget = kRewriteBudget;
  return normalize_budgeted(word, budget);
}

LinearCombination Presentation::normalize(const std::vector<std::string>& word) const {
  return normalize(indices(word));
}

LinearCombination Presentation::normalize_budgeted(std::vector<std::size_t> word,
                                                   int& budget) const {
  int total = 0;
  for (auto g : word) total += generators_[g].degree;
  if (total > top_degree_ && top_degree_ > 0) return {};

  // Insertion sort; each transposition of two odd generators flips the sign.
  int sign = 1;
  for (std::size_t i = 1; i < word.size(); ++i) {
    for (std::size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
      if (generators_[word[j - 1]].degree % 2 == 1 && generators_[word[j]].degree % 2 == 1) {
        sign = -sign;
      }
      std::swap(word[j - 1], word[j]);
    }
  }
  Monomial m;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && word[i] == word[i - 1] && generators_[word[i]].degree % 2 == 1) return {};
    ++m.exps[word[i]];
  }
  return rewrite(m, Scalar(sign), budget);
}

LinearCombination Presentation::rewrite(const Monomial& m, const Scalar& coeff,
                                        int& budget) const {
  if (top_degree_ > 0 && degree(m) > top_degree_) return {};
  for (const auto& rel : indexed_relations_) {
    bool matches = true;
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      if (m.exps[g] < rel.pattern.exps[g]) matches = false;
    }
    if (!matches) continue;
    if (--budget < 0) {
      throw RewriteBudgetExceeded("rewriting in " + name_ + " did not terminate at " +
                                  render(m));
    }
    Monomial rest = m;
    for (std::size_t g = 0; g < generators_.size(); ++g) rest.exps[g] -= rel.pattern.exps[g];
    std::vector<std::size_t> rest_word = word(rest);

    // lhs * rest = sigma * m, so m = sigma * rhs * rest.
    std::vector<std::size_t> lhs_rest = word(rel.pattern);
    lhs_rest.insert(lhs_rest.end(), rest_word.begin(), rest_word.end());
    int sigma = 1;
    for (std::size_t i = 0; i < lhs_rest.size(); ++i) {
      for (std::size_t j = i + 1; j < lhs_rest.size(); ++j) {
        if (lhs_rest[i] > lhs_rest[j] && generators_[lhs_rest[i]].degree % 2 == 1 &&
            generators_[lhs_rest[j]].degree % 2 == 1) {
          sigma = -sigma;
        }
      }
    }

    LinearCombination result;
    for (const auto& term : rel.rhs) {
      std::vector<std::size_t> w = term.word;
      w.insert(w.end(), rest_word.begin(), rest_word.end());
      Scalar factor = coeff * term.coeff * Scalar(sigma);
      for (const auto& [sub, c] : normalize_budgeted(w, budget)) {
        auto [it, inserted] = result.try_emplace(sub, factor * c);
        if (!inserted) {
          it->second += factor * c;
          if (it->second.is_zero()) result.erase(it);
        }
      }
    }
    return result;
  }
  return {{m, coeff}};
}

void Presentation::build_tables() {
  // Candidate monomials: odd generators at most once, total degree <= top.
  std::vector<Monomial> candidates;
  Monomial current;
  auto enumerate = [&](auto&& self, std::size_t g, int deg) -> void {
    if (g == generators_.size()) {
      candidates.push_back(current);
      return;
    }
    int d = generators_[g].degree;
    int max_power = d % 2 == 1 ? 1 : top_degree_ / d;
    for (int p = 0; p <= max_power && deg + p * d <= top_degree_; ++p) {
      current.exps[g] = static_cast<std::uint8_t>(p);
      self(self, g + 1, deg + p * d);
    }
    current.exps[g] = 0;
  };
  enumerate(enumerate, 0, 0);

  for (const auto& m : candidates) {
    LinearCombination nf = normalize(word(m));
    if (nf.size() == 1 && nf.begin()->first == m && nf.begin()->second == Scalar(1)) {
      basis_.push_back(m);
    }
  }
  std::stable_sort(basis_.begin(), basis_.end(), [&](const Monomial& a, const Monomial& b) {
    int da = degree(a);
    int db = degree(b);
    if (da != db) return da < db;
    return MonomialOrder{}(a, b);
  });
  for (std::size_t i = 0; i < basis_.size(); ++i) basis_index_.emplace(basis_[i], i);

  const std::size_t n = basis_.size();
  products_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto w = word(basis_[i]);
      auto wb = word(basis_[j]);
      w.insert(w.end(), wb.begin(), wb.end());
      products_[i * n + j] = normalize(w);
    }
  }

  // Graded Leibniz rule along the sorted word of each basis monomial.
  differentials_table_.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    auto w = word(basis_[b]);
    LinearCombination& out = differentials_table_[b];
    int prefix_degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int sign = prefix_degree % 2 == 0 ? 1 : -1;
      for (const auto& term : indexed_differentials_[w[i]]) {
        std::vector<std::size_t> expanded(w.begin(), w.begin() + static_cast<long>(i));
        expanded.insert(expanded.end(), term.word.begin(), term.word.end());
        expanded.insert(expanded.end(), w.begin() + static_cast<long>(i) + 1, w.end());
        Scalar factor = term.coeff * Scalar(sign);
        for (const auto& [m, c] : normalize(expanded)) {
          auto [it, inserted] = out.try_emplace(m, factor * c);
          if (!inserted) {
            it->second += factor * c;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      }
      prefix_degree += generators_[w[i]].degree;
    }
  }
}

const LinearCombination& Presentation::product(const Monomial& a, const Monomial& b) const {
  auto ia = basis_index_.find(a);
  auto ib = basis_index_.find(b);
  if (ia == basis_index_.end() || ib == basis_index_.end()) {
    throw std::invalid_argument("product of non-normal monomials in " + name_);
  }
  return products_[ia->second * basis_.size() + ib->second];
}

const LinearCombination& Presentation::differential(const Monomial& m) const {
  auto it = basis_index_.find(m);
  if (it == basis_index_.end()) {
    throw std::invalid_argument("differential of non-normal monomial " + render(m));
  }
  return differentials_table_[it->second];
}

std::string Presentation::render(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (int p = 0; p < m.exps[i]; ++p) {
      if (!out.empty()) out += "^";
      out += generators_[i].name;
    }
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

Form Form::constant(PresentationPtr algebra, const Poly& c) {
  Form f(std::move(algebra));
  f.add_term(Monomial{}, c);
  return f;
}

Form Form::product(PresentationPtr algebra, const std::vector<std::string>& word,
                   const Poly& c) {
  Form f(algebra);
  for (const auto& [m, s] : algebra->normalize(word)) f.add_term(m, Poly(s) * c);
  return f;
}

std::optional<int> Form::degree() const {
  if (terms_.empty()) return std::nullopt;
  return algebra_->degree(terms_.begin()->first);
}

void Form::add_term(const Monomial& m, const Poly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty() && algebra_->degree(m) != *degree()) {
    throw std::invalid_argument("mixed-degree form: " + algebra_->render(m) + " added to degree " +
                                std::to_string(*degree()));
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Form::require_same_algebra(const Form& o) const {
  if (algebra_ != o.algebra_) {
    throw std::invalid_argument("forms belong to different presentations");
  }
}

Form Form::operator-() const {
  Form r(algebra_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Form& Form::operator+=(const Form& o) {
  require_same_algebra(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form operator*(const Poly& c, const Form& f) {
  Form r(f.algebra_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : f.terms_) r.add_term(m, c * coeff);
  return r;
}

Poly Form::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Poly() : it->second;
}

Poly Form::coefficient(const std::vector<std::string>& word) const {
  LinearCombination nf = algebra_->normalize(word);
  if (nf.size() != 1) {
    throw std::invalid_argument("word does not name a single basis monomial");
  }
  const auto& [m, sign] = *nf.begin();
  // word = sign * m, so the coefficient of word is coefficient(m) / sign.
  return coefficient(m) * Poly(sign.inverse());
}

Poly Form::top_coefficient() const {
  if (!terms_.empty() && *degree() != algebra_->top_degree()) {
    throw std::invalid_argument("top_coefficient of a degree-" + std::to_string(*degree()) +
                                " form");
  }
  return coefficient(algebra_->top());
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*" << algebra_->render(m);
  }
  return out.str();
}

Form wedge(const Form& a, const Form& b) {
  if (a.algebra() != b.algebra()) {
    throw std::invalid_argument("forms belong to different presentations");
  }
  const Presentation& alg = *a.algebra();
  Form r(a.algebra());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const LinearCombination& lc = alg.product(ma, mb);
      if (lc.empty()) continue;
      Poly cc = ca * cb;
      for (const auto& [m, s] : lc) r.add_term(m, Poly(s) * cc);
    }
  }
  return r;
}

Form differential(const Form& a) {
  const Presentation& alg = *a.algebra();
  Form r(a.algebra());
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [dm, s] : alg.differential(m)) r.add_term(dm, Poly(s) * c);
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

class RandomForms {
 public:
  RandomForms(PresentationPtr algebra, unsigned seed) : algebra_(std::move(algebra)), rng_(seed) {
    for (const auto& m : algebra_->basis()) by_degree_[algebra_->degree(m)].push_back(m);
  }

  Poly coefficient() {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> shape(0, 3);
    long n = num(rng_);
    if (n == 0) n = 1;
    Poly c(Rational(n, den(rng_)));
    switch (shape(rng_)) {
      case 1: return c * Poly::var(Symbol::t);
      case 2: return c + Poly::var(Symbol::a1);
      default: return c;
    }
  }

  /// A random word's normal form plus a random basis element of equal degree.
  Form form() {
    const auto& gens = algebra_->generators();
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> length(1, 3);
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<std::string> word;
      int len = length(rng_);
      for (int i = 0; i < len; ++i) word.push_back(gens[pick(rng_)].name);
      Form f = Form::product(algebra_, word, coefficient());
      if (f.is_zero()) continue;
      const auto& same = by_degree_[*f.degree()];
      std::uniform_int_distribution<std::size_t> b(0, same.size() - 1);
      Form extra(algebra_);
      extra.add_term(same[b(rng_)], coefficient());
      return f + extra;
    }
    return Form::product(algebra_, {gens[pick(rng_)].name}, coefficient());
  }

 private:
  PresentationPtr algebra_;
  std::mt19937 rng_;
  std::map<int, std::vector<Monomial>> by_degree_;
};

std::string join(const std::vector<std::string>& word) {
  std::string out;
  for (const auto& w : word) out += (out.empty() ? "" : "*") + w;
  return out;
}

int degree_or_zero(const Form& f) { return f.degree().value_or(0); }

Form sign_times(int exponent, const Form& f) { return exponent % 2 == 0 ? f : -f; }

}  // namespace

Report validate_presentation(const PresentationPtr& algebra, unsigned seed, int leibniz_trials,
                             int associativity_trials) {
  Report report;
  const Presentation& alg = *algebra;
  const std::string prefix = alg.name() + ": ";

  for (const auto& g : alg.generators()) {
    Form x = Form::product(algebra, {g.name});
    Form dx = differential(x);
    if (!dx.is_zero() && *dx.degree() != g.degree + 1) {
      report.add(prefix + "d raises degree of " + g.name, false, "d(" + g.name + ") = " +
                 dx.to_string());
    }
    Form ddx = differential(dx);
    report.add(prefix + "d^2 " + g.name + " = 0", ddx.is_zero(),
               ddx.is_zero() ? "" : "d(d(" + g.name + ")) = " + ddx.to_string());
  }

  bool degrees_ok = true;
  std::string degree_witness;
  for (const auto& rel : alg.relations()) {
    int lhs = 0;
    for (const auto& w : rel.lhs) lhs += alg.generators()[alg.generator_index(w)].degree;
    for (const auto& term : rel.rhs) {
      int rhs = 0;
      for (const auto& w : term.word) rhs += alg.generators()[alg.generator_index(w)].degree;
      if (rhs != lhs) {
        degrees_ok = false;
        degree_witness = join(rel.lhs) + " has a degree-" +
                         std::to_string(rhs) + " right-hand term";
      }
    }
  }
  for (const auto& [gen, terms] : alg.generator_differentials()) {
    int target = alg.generators()[alg.generator_index(gen)].degree + 1;
    for (const auto& term : terms) {
      int deg = 0;
      for (const auto& w : term.word) deg += alg.generators()[alg.generator_index(w)].degree;
      if (deg != target) {
        degrees_ok = false;
        degree_witness = "d(" + gen + ") has a degree-" + std::to_string(deg) + " term";
      }
    }
  }
  report.add(prefix + "relation and differential degrees", degrees_ok, degree_witness);

  // d must be compatible with each relation: d(lhs) by Leibniz over the
  // generators of lhs equals d(rhs).
  bool compatible = true;
  std::string compat_witness;
  for (const auto& rel : alg.relations()) {
    Form lhs(algebra);
    int prefix_degree = 0;
    for (std::size_t i = 0; i < rel.lhs.size(); ++i) {
      std::vector<std::string> before(rel.lhs.begin(), rel.lhs.begin() + static_cast<long>(i));
      std::vector<std::string> after(rel.lhs.begin() + static_cast<long>(i) + 1, rel.lhs.end());
      Form dx = differential(Form::product(algebra, {rel.lhs[i]}));
      Form term = wedge(wedge(Form::product(algebra, before), dx), Form::product(algebra, after));
      lhs += sign_times(prefix_degree, term);
      prefix_degree += alg.generators()[alg.generator_index(rel.lhs[i])].degree;
    }
    Form rhs(algebra);
    for (const auto& term : rel.rhs) rhs += Form::product(algebra, term.word, Poly(term.coeff));
    Form diff = lhs - differential(rhs);
    if (!diff.is_zero()) {
      compatible = false;
      compat_witness = "d(" + join(rel.lhs) + ") - d(rhs) = " +
                       diff.to_string();
    }
  }
  report.add(prefix + "d compatible with relations", compatible, compat_witness);

  RandomForms random(algebra, seed);
  {
    std::string witness;
    bool ok = true;
    for (int i = 0; i < leibniz_trials && ok; ++i) {
      Form a = random.form();
      Form b = random.form();
      Form lhs = differential(wedge(a, b));
      Form rhs = wedge(differential(a), b) + sign_times(degree_or_zero(a), wedge(a, differential(b)));
      if (!(lhs == rhs)) {
        ok = false;
        witness = "a = " + a.to_string() + "; b = " + b.to_string() +
                  "; d(ab) - (da b +- a db) = " + (lhs - rhs).to_string();
      }
    }
    report.add(prefix + "Leibniz rule (" + std::to_string(leibniz_trials) + " random pairs)", ok,
               witness);
  }
  {
    std::string witness;
    bool ok = true;
    for (int i = 0; i < associativity_trials && ok; ++i) {
      Form a = random.form();
      Form b = random.form();
      Form c = random.form();
      Form lhs = wedge(wedge(a, b), c);
      Form rhs = wedge(a, wedge(b, c));
      if (!(lhs == rhs)) {
        ok = false;
        witness = "a = " + a.to_string() + "; b = " + b.to_string() + "; c = " + c.to_string();
      }
    }
    report.add(prefix + "associativity (" + std::to_string(associativity_trials) +
                   " random triples)",
               ok, witness);
  }
  {
    std::string witness;
    bool ok = true;
    for (int i = 0; i < leibniz_trials && ok; ++i) {
      Form a = random.form();
      Form b = random.form();
      Form ab = wedge(a, b);
      Form ba = sign_times(degree_or_zero(a) * degree_or_zero(b), wedge(b, a));
      if (!(ab == ba)) {
        ok = false;
        witness = "a = " + a.to_string() + "; b = " + b.to_string();
      }
    }
    report.add(prefix + "graded commutativity (" + std::to_string(leibniz_trials) +
                   " random pairs)",
               ok, witness);
  }
  return report;
}

}  // namespace dg2

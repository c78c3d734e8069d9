#include "bialint/catalog.hpp"

#include "bialint/errors.hpp"

namespace bialint {

namespace {

NcPoly word(std::initializer_list<Letter> letters, Scalar c = Scalar(1)) { return NcPoly(Word(letters), c); }

TensorPoly grouplike(Letter g) { return TensorPoly(TensorKey{Word{g}, Word{g}}); }

PresentationData skeleton(std::string name, std::vector<std::string> gens) {
  PresentationData d;
  d.name = std::move(name);
  const std::size_t n = gens.size();
  d.alphabet = Alphabet(std::move(gens));
  d.rules = ReductionSystem({}, MonomialOrder::deglex(n));
  return d;
}

void set_rules(PresentationData& d, std::vector<Rule> rules) {
  d.rules = ReductionSystem(std::move(rules), MonomialOrder::deglex(d.alphabet.size()));
}

// x group-like, y skew-primitive: Delta(y) = x (x) y + y (x) 1.
void quantum_coalgebra(PresentationData& d, Letter x, Letter y) {
  d.delta[x] = grouplike(x);
  TensorPoly dy(TensorKey{Word{x}, Word{y}});
  dy.add_term({Word{y}, Word{}}, Scalar(1));
  d.delta[y] = dy;
  d.counit[x] = Scalar(1);
  d.counit[y] = Scalar(0);
}

}  // namespace

Presentation poly_grouplike() {
  PresentationData d = skeleton("poly_grouplike", {"X"});
  d.delta[0] = grouplike(0);
  d.counit[0] = Scalar(1);
  d.flags.commutative = true;
  d.flags.cocommutative = true;
  return Presentation(std::move(d));
}

Presentation laurent() {
  PresentationData d = skeleton("laurent", {"X", "Xi"});
  set_rules(d, {Rule{Word{0, 1}, word({})}, Rule{Word{1, 0}, word({})}});
  for (Letter g : {0u, 1u}) {
    d.delta[g] = grouplike(g);
    d.counit[g] = Scalar(1);
  }
  d.antipode[0] = word({1});
  d.antipode[1] = word({0});
  d.flags.commutative = true;
  d.flags.cocommutative = true;
  return Presentation(std::move(d));
}

Presentation quantum_plane(const Scalar& q) {
  if (q.is_zero()) throw DomainError("quantum_plane needs q != 0");
  PresentationData d = skeleton("quantum_plane", {"x", "y"});
  d.q = q;
  set_rules(d, {Rule{Word{1, 0}, word({0, 1}, q)}});
  quantum_coalgebra(d, 0, 1);
  d.flags.commutative = q.is_one();
  return Presentation(std::move(d));
}

Presentation quantum_laurent(const Scalar& q) {
  if (q.is_zero()) throw DomainError("quantum_laurent needs q != 0");
  PresentationData d = skeleton("quantum_laurent", {"x", "xi", "y"});
  d.q = q;
  set_rules(d, {Rule{Word{2, 0}, word({0, 2}, q)}, Rule{Word{0, 1}, word({})}, Rule{Word{1, 0}, word({})},
                Rule{Word{2, 1}, word({1, 2}, q.inverse())}});
  quantum_coalgebra(d, 0, 2);
  d.delta[1] = grouplike(1);
  d.counit[1] = Scalar(1);
  d.antipode[0] = word({1});
  d.antipode[1] = word({0});
  d.antipode[2] = word({1, 2}, Scalar(-1));
  d.flags.commutative = q.is_one();
  return Presentation(std::move(d));
}

Presentation matrix_bialgebra(int n) {
  if (n < 1 || n > 9) throw MalformedInput("matrix_bialgebra needs 1 <= n <= 9");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  }
  PresentationData d = skeleton("matrix_bialgebra", names);
  const auto gen = [n](int i, int j) { return static_cast<Letter>(i * n + j); };
  const Letter count = static_cast<Letter>(n * n);
  std::vector<Rule> rules;
  for (Letter a = 0; a < count; ++a) {
    for (Letter b = 0; b < a; ++b) rules.push_back(Rule{Word{a, b}, word({b, a})});
  }
  set_rules(d, std::move(rules));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      TensorPoly t;
      for (int k = 0; k < n; ++k) t.add_term({Word{gen(i, k)}, Word{gen(k, j)}}, Scalar(1));
      d.delta[gen(i, j)] = t;
      d.counit[gen(i, j)] = Scalar(i == j ? 1 : 0);
    }
  }
  d.flags.commutative = true;
  return Presentation(std::move(d));
}

Presentation sixdim() {
  PresentationData d = skeleton("sixdim", {"x", "y"});
  d.q = Scalar(-1);
  set_rules(d, {Rule{Word{1, 0}, word({0, 1}, Scalar(-1))}, Rule{Word{0, 0, 0}, word({0})}, Rule{Word{1, 1}, NcPoly()}});
  quantum_coalgebra(d, 0, 1);
  d.flags.finite = true;
  return Presentation(std::move(d));
}

Presentation sweedler_h4() {
  PresentationData d = skeleton("sweedler_h4", {"x", "y"});
  d.q = Scalar(-1);
  set_rules(d, {Rule{Word{1, 0}, word({0, 1}, Scalar(-1))}, Rule{Word{0, 0}, word({})}, Rule{Word{1, 1}, NcPoly()}});
  quantum_coalgebra(d, 0, 1);
  d.antipode[0] = word({0});
  d.antipode[1] = word({0, 1}, Scalar(-1));
  d.flags.finite = true;
  return Presentation(std::move(d));
}

Presentation group_c2() {
  PresentationData d = skeleton("group_c2", {"g"});
  set_rules(d, {Rule{Word{0, 0}, word({})}});
  d.delta[0] = grouplike(0);
  d.counit[0] = Scalar(1);
  d.antipode[0] = word({0});
  d.flags = {true, true, true};
  return Presentation(std::move(d));
}

Presentation a_times_k(int dim) {
  if (dim < 1 || dim > 64) throw MalformedInput("a_times_k needs 1 <= dim <= 64");
  std::vector<std::string> names;
  for (int i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  PresentationData d = skeleton("a_times_k", names);
  const Letter count = static_cast<Letter>(dim);
  std::vector<Rule> rules;
  for (Letter a = 0; a < count; ++a) {
    for (Letter b = 0; b < count; ++b) rules.push_back(Rule{Word{a, b}, a == b ? word({a}) : NcPoly()});
  }
  set_rules(d, std::move(rules));
  for (Letter a = 0; a < count; ++a) {
    // Delta(a, 0) = (1, 1) (x) (a, 0) + (a, 0) (x) (0, 1) with (0, 1) = 1 - sum_j e_j.
    TensorPoly t(TensorKey{Word{}, Word{a}});
    t.add_term({Word{a}, Word{}}, Scalar(1));
    for (Letter b = 0; b < count; ++b) t.add_term({Word{a}, Word{b}}, Scalar(-1));
    d.delta[a] = t;
    d.counit[a] = Scalar(0);
  }
  d.flags.commutative = true;
  d.flags.finite = true;
  return Presentation(std::move(d));
}

Presentation trivial_bialgebra() {
  PresentationData d = skeleton("trivial", {});
  d.flags = {true, true, true};
  return Presentation(std::move(d));
}

std::vector<std::string> catalog_names() {
  return {"poly_grouplike", "laurent", "quantum_plane", "quantum_laurent", "matrix_bialgebra",
          "sixdim",         "sweedler_h4", "group_c2", "a_times_k",       "trivial"};
}

Presentation catalog_load(std::string_view name, const CatalogParams& params) {
  if (name == "poly_grouplike") return poly_grouplike();
  if (name == "laurent") return laurent();
  if (name == "quantum_plane") return quantum_plane(params.q);
  if (name == "quantum_laurent") return quantum_laurent(params.q);
  if (name == "matrix_bialgebra") return matrix_bialgebra(params.n);
  if (name == "sixdim") return sixdim();
  if (name == "sweedler_h4") return sweedler_h4();
  if (name == "group_c2") return group_c2();
  if (name == "a_times_k") return a_times_k(params.dim);
  if (name == "trivial") return trivial_bialgebra();
  throw MalformedInput("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace bialint

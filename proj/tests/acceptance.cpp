// Acceptance run: one line per criterion. Each line combines the library's
// verification suite with checks computed here from the defining identities.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "bialint/catalog.hpp"
#include "bialint/hopf.hpp"
#include "bialint/verify.hpp"

using namespace bialint;

namespace {

Word power(Letter g, int n) { return Word(std::vector<Letter>(static_cast<std::size_t>(n), g)); }

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void need(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back(what);
    }
  }
};

void suite(Outcome& o, const std::string& name, const VerifyOptions& opts = {}) {
  const Report r = run_verify(name, opts);
  for (const CheckResult& c : r.checks()) o.need(c.passed, name + ": " + c.name + " (" + c.detail + ")");
}

bool new_identity(const OslashSpace& os, const OslashFunctional& f, const std::vector<Word>& words, int d) {
  const Presentation& b = os.presentation();
  for (const Word& x : words) {
    for (const Word& y : words) {
      if (b.degree(x) + b.degree(y) > d) continue;
      NcPoly diff;
      for (const auto& [k, c] : b.delta(x)) diff.add_term(k.first, c * f(os.reduce_pair(k.second, y)));
      for (const auto& [k, c] : b.delta(y)) diff.add_term(k.second, -c * f(os.reduce_pair(x, k.first)));
      if (!map_iB(os, diff).is_zero()) return false;
    }
  }
  return true;
}

bool classical_identity(const Presentation& b, const std::function<Scalar(const Word&)>& tau,
                        const std::vector<Word>& words) {
  for (const Word& w : words) {
    NcPoly lhs;
    for (const auto& [k, c] : b.delta(w)) lhs.add_term(k.first, c * tau(k.second));
    if (lhs != NcPoly(Word{}, tau(w))) return false;
  }
  return true;
}

// dim of (B (x) B) modulo the relations, by elimination over word pairs.
std::size_t quotient_dimension(const Presentation& b) {
  const std::vector<Word> words = b.full_basis();
  std::map<TensorKey, std::size_t> index;
  for (const Word& u : words) {
    for (const Word& v : words) index.emplace(TensorKey{u, v}, index.size());
  }
  Echelon span;
  for (const Word& u : words) {
    for (const Word& v : words) {
      for (const Word& m : words) {
        TensorPoly rel = b.delta(m);
        rel.add_term({Word{}, Word{}}, -b.counit(m));
        SparseVector row;
        for (const auto& [k, c] : b.multiply(tensor(NcPoly(u), NcPoly(v)), rel)) row.add_term(index.at(k), c);
        span.insert(row);
      }
    }
  }
  return index.size() - span.rank();
}

bool proportional(const SparseVector& a, const SparseVector& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * (b.begin()->second / a.begin()->second) == b;
}

Outcome criterion_kx() {
  Outcome o;
  suite(o, "kx");
  const OslashSpace os = build_oslash(poly_grouplike(), 6, 2);
  const std::vector<Word> words = os.presentation().basis(6);
  OslashFunctional delta_mn;
  for (std::size_t i = 0; i < os.dimension(); ++i) {
    if (os.representative(i).first == os.representative(i).second) delta_mn.values.set(i, Scalar(1));
  }
  o.need(new_identity(os, delta_mn, words, 6), "delta_{m,n} is not a left integral");
  const SolutionSpace sol = solve_integrals(os, IntegralMode::oslash_new, 6, 2);
  o.need(sol.dimension() == 1, "dimension " + std::to_string(sol.dimension()));
  if (sol.total_integral) {
    const OslashFunctional lambda{*sol.total_integral};
    for (int k = 0; k <= 6; ++k) {
      const Scalar want(k == 0 ? 1 : 0);
      o.need(lambda(os.reduce_pair(power(0, k), Word{})) == want && lambda(os.reduce_pair(Word{}, power(0, k))) == want,
             "lambda(X^k (/) 1) at k = " + std::to_string(k));
    }
    const AlgebraFunctional om = omega(os, lambda, 6);
    for (const Word& w : words) o.need(om.at(w) == Scalar(w.empty() ? 1 : 0), "omega(lambda) at " + std::to_string(w.size()));
  } else {
    o.need(false, "no total integral");
  }
  auto tau = [](const Word& w) { return Scalar(w.empty() ? 1 : 0); };
  o.need(classical_identity(os.presentation(), tau, os.presentation().basis(4)), "tau is not a classical integral");
  o.need(solve_integrals(os, IntegralMode::classical, 6, 2).dimension() == 1, "classical dimension");
  return o;
}

Outcome criterion_quantum_plane() {
  Outcome o;
  suite(o, "quantum_plane");
  for (const Scalar& q : {Scalar(-1), Scalar(2), Scalar(1, 3)}) {
    const Presentation b = quantum_plane(q);
    const OslashSpace os = build_oslash(b, 5, 2);
    // (1 (x) 1)(Delta(y) - eps(y) 1 (x) 1) = y (x) 1 + x (x) y lies in the relations
    const OslashElement rel = os.reduce(b.delta(Word{1}));
    o.need(rel.is_zero(), "Delta(y) is not a relation");
    o.need(os.reduce_pair(Word{0}, Word{1}) == -os.reduce_pair(Word{1}, Word{}), "x (/) y != -(y (/) 1)");
    const SolutionSpace sol = solve_integrals(os, IntegralMode::oslash_new, 5, 2);
    o.need(sol.interior_dimension() == 0, "interior dimension at q = " + q.to_string());
    o.need(solve_integrals(os, IntegralMode::classical, 5, 2).dimension() == 0, "classical at q = " + q.to_string());
    o.need(check_quantum_envelope(os, q).ok(), "gamma / eta^ at q = " + q.to_string());
  }
  return o;
}

Outcome criterion_sixdim() {
  Outcome o;
  suite(o, "sixdim");
  const Presentation b = sixdim();
  const OslashSpace os = OslashSpace::build(b);
  o.need(quotient_dimension(b) == 4 && os.dimension() == 4, "dim B (/) B");
  auto formula = [](int m, int n, int s, int t) {
    if (n + t != 1 || (m + s + t) % 2 != 1) return Scalar(0);
    return Scalar((s + t) % 2 == 0 ? 1 : -1);
  };
  OslashFunctional f;
  for (std::size_t i = 0; i < os.dimension(); ++i) {
    const auto& [u, v] = os.representative(i);
    auto count = [](const Word& w, Letter g) { return static_cast<int>(std::count(w.begin(), w.end(), g)); };
    f.values.set(i, formula(count(u, 0), count(u, 1), count(v, 0), count(v, 1)));
  }
  std::size_t pairs = 0;
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 1; ++n) {
      for (int s = 0; s <= 2; ++s) {
        for (int t = 0; t <= 1; ++t) {
          ++pairs;
          o.need(f(os.reduce_pair(power(0, m) * power(1, n), power(0, s) * power(1, t))) == formula(m, n, s, t),
                 "formula is not constant on cosets");
        }
      }
    }
  }
  o.need(pairs == 36, "pair count");
  o.need(new_identity(os, f, b.full_basis(), os.window()), "formula is not a left integral");
  const SolutionSpace sol = solve_integrals(os, IntegralMode::oslash_new, 0, 0);
  o.need(sol.dimension() == 1 && proportional(sol.basis[0], f.values), "solver disagrees with the formula");
  o.need(solve_integrals(os, IntegralMode::classical, 0, 0).dimension() == 0, "classical integrals");
  const Envelope env = hopf_envelope_findim(b);
  GeneratorMap id;
  id.images.emplace(0, NcPoly(Word{0}));
  id.images.emplace(1, NcPoly(Word{1}));
  o.need(env.hopf.dimension() == 4 && compare_structure(env.hopf, sweedler_h4(), id).empty(), "envelope is not H4");
  return o;
}

Outcome criterion_a_times_k() {
  Outcome o;
  suite(o, "a_times_k");
  const Presentation b = a_times_k(2);
  const OslashSpace os = OslashSpace::build(b);
  o.need(quotient_dimension(b) == 1 && os.dimension() == 1, "dim B (/) B");
  o.need(solve_integrals(os, IntegralMode::oslash_new, 0, 0).dimension() == 1, "new integrals");
  const SolutionSpace cl = solve_integrals(os, IntegralMode::classical, 0, 0);
  for (std::size_t i = 0; i < cl.dimension(); ++i) {
    const AlgebraFunctional tau = cl.algebra_functional(i);
    o.need(classical_identity(b, [&](const Word& w) { return tau.at(w); }, b.full_basis()),
           "solver output is not a classical integral");
  }
  o.need(solve_integrals(os, IntegralMode::classical, 0, 0).dimension() == 2, "classical dimension");
  o.need(hopf_envelope_findim(b).hopf.dimension() == 1, "envelope dimension");
  return o;
}

Outcome criterion_h4() {
  Outcome o;
  suite(o, "h4");
  const Presentation b = sweedler_h4();
  const OslashSpace os = OslashSpace::build(b);
  std::size_t pairs = 0;
  for (const Word& x : b.full_basis()) {
    for (const Word& y : b.full_basis()) {
      ++pairs;
      o.need(map_iB(os, b.multiply(NcPoly(x), b.antipode(y))) == os.reduce_pair(x, y), "i_B(x S(y)) != x (/) y");
    }
  }
  o.need(pairs == 16, "pair count");
  auto tau = [](const Word& w) { return Scalar(w == Word{0, 1} ? 1 : 0); };
  o.need(classical_identity(b, tau, b.full_basis()), "tau is not a classical integral");
  o.need(check_right_hopf_identity(b, tau, 0).empty(), "right Hopf identity");
  const SolutionSpace sol = solve_integrals(os, IntegralMode::oslash_new, 0, 0);
  o.need(sol.dimension() == 1, "new integrals");
  if (sol.dimension() == 1) {
    o.need(OslashFunctional{sol.basis[0]}(os.reduce_pair(Word{}, Word{})).is_zero(), "lambda(1 (/) 1) != 0");
    // omega(lambda) is a nonzero multiple of tau
    const AlgebraFunctional om = omega(os, OslashFunctional{sol.basis[0]}, 0);
    const Scalar c = om.at(Word{0, 1});
    bool multiple = !c.is_zero();
    for (const Word& w : b.full_basis()) multiple = multiple && om.at(w) == c * tau(w);
    o.need(multiple, "omega(lambda) is not a multiple of tau");
  }
  const SmashReport sm = smash_products(os, 30, 99);
  o.need(sm.xi_multiplicative && sm.xi_pairs_checked == 256, "xi multiplicative");
  return o;
}

// Values of lambda(x11^t (/) x11^t) / lambda(1 (/) 1) determined by the
// interior of the window, or nothing when a needed coordinate lies outside.
std::vector<std::optional<Scalar>> matrix_ratios(int d, Outcome& o) {
  const Presentation b = matrix_bialgebra(2);
  const OslashSpace os = build_oslash(b, d, 2);
  const SolutionSpace sol = solve_integrals(os, IntegralMode::oslash_new, d, 1);
  const std::string at = " at d = " + std::to_string(d);
  o.need(sol.interior_dimension() == 1, "interior dimension" + at);
  o.need(sol.total_integral.has_value(), "no total integral" + at);
  std::vector<std::optional<Scalar>> out(3);
  if (!sol.total_integral) return out;
  const OslashFunctional lambda{*sol.total_integral};
  o.need(new_identity(os, lambda, b.basis(d), d), "left integral identity" + at);
  o.need(coseparability_witness(os, lambda, d).equation_holds, "coseparability identity" + at);
  const Letter x11 = b.alphabet().at("x11");
  for (int t = 0; t <= 2; ++t) {
    const OslashElement e = os.reduce_pair(power(x11, t), power(x11, t));
    bool inside = true;
    for (const auto& [k, c] : e) inside = inside && k < sol.labels.size() && sol.is_interior(k);
    if (inside) out[static_cast<std::size_t>(t)] = lambda(e);
  }
  return out;
}

Outcome criterion_matrix2() {
  Outcome o;
  suite(o, "matrix2");
  const auto r3 = matrix_ratios(3, o);
  const auto r4 = matrix_ratios(4, o);
  for (std::size_t t = 0; t < 3; ++t) {
    const Scalar want(1, static_cast<long>(t + 1));
    auto show = [](const std::optional<Scalar>& v) { return v ? v->to_string() : std::string("undetermined"); };
    o.need(r3[t] && r4[t] && *r3[t] == want && *r4[t] == want,
           "t = " + std::to_string(t) + ": d = 3 gives " + show(r3[t]) + ", d = 4 gives " + show(r4[t]));
  }
  return o;
}

Outcome criterion_properties() {
  Outcome o;
  suite(o, "properties");
  for (const std::string& name : catalog_names()) {
    const Presentation b = catalog_load(name);
    if (b.backend() == Backend::free_algebra) o.need(check_confluence(b.rules()).confluent, name + " confluence");
  }
  for (const char* name : {"sixdim", "sweedler_h4", "group_c2", "a_times_k"}) {
    const OslashSpace os = OslashSpace::build(catalog_load(name));
    o.need(solve_integrals(os, IntegralMode::oslash_new, 0, 0).dimension() == 1, std::string(name) + " dim-1 law");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"k[X]: one total integral delta_{m,n}, coseparable, classical tau", criterion_kx},
      {"quantum plane: integrals vanish, x (/) y = -(y (/) 1), envelope round trip", criterion_quantum_plane},
      {"sixdim: dim 4, closed-form integral, envelope H4", criterion_sixdim},
      {"A x k: dimensions 1, 1, 2 and envelope k", criterion_a_times_k},
      {"H4: i_B inverse, antipode, integrals, xi", criterion_h4},
      {"M(2): interior integral and ratios 1/(t+1)", criterion_matrix2},
      {"property suites", criterion_properties},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << ": " << (o.passed ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << static_cast<int>(secs * 10) / 10.0 << " s)";
    for (const std::string& n : o.notes) std::cout << "\n    " << n;
    std::cout << std::endl;
    all = all && o.passed;
  }
  return all ? 0 : 1;
}

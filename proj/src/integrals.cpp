#include "bialint/integrals.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "bialint/errors.hpp"

namespace bialint {

std::string to_string(IntegralMode mode) {
  switch (mode) {
    case IntegralMode::oslash_new:
      return "oslash_new";
    case IntegralMode::oslash_augmented:
      return "oslash_augmented";
    case IntegralMode::classical:
      return "classical";
    case IntegralMode::oslash_three_variable:
      return "oslash_three_variable";
    case IntegralMode::oslash_in_algebra:
      return "oslash_in_algebra";
  }
  return "unknown";
}

IntegralMode parse_integral_mode(std::string_view text) {
  if (text == "new" || text == "oslash_new") return IntegralMode::oslash_new;
  if (text == "augmented" || text == "oslash_augmented") return IntegralMode::oslash_augmented;
  if (text == "classical") return IntegralMode::classical;
  if (text == "three_variable" || text == "oslash_three_variable") return IntegralMode::oslash_three_variable;
  if (text == "in_algebra" || text == "oslash_in_algebra") return IntegralMode::oslash_in_algebra;
  throw MalformedInput("unknown integral mode '" + std::string(text) + "'");
}

Scalar AlgebraFunctional::operator()(const NcPoly& p) const {
  Scalar r(0);
  for (const auto& [w, c] : p) r += c * at(w);
  return r;
}

Scalar AlgebraFunctional::at(const Word& w) const {
  auto it = values.find(w);
  return it == values.end() ? Scalar(0) : it->second;
}

AlgebraFunctional SolutionSpace::algebra_functional(std::size_t i) const {
  AlgebraFunctional f;
  for (const auto& [j, c] : basis.at(i)) f.values[words.at(j)] = c;
  return f;
}

namespace {

nlohmann::json vector_json(const SparseVector& v, const std::vector<std::string>& labels) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [j, c] : v) out.push_back({labels.at(j), c.to_string()});
  return out;
}

// Memoised i_B and coset reductions.
class Reducer {
 public:
  explicit Reducer(const OslashSpace& os) : os_(os), b_(os.presentation()) {}

  const OslashElement& pair(const Word& x, const Word& y) {
    auto key = TensorKey{x, y};
    auto it = pairs_.find(key);
    if (it == pairs_.end()) it = pairs_.emplace(key, os_.reduce_pair(x, y)).first;
    return it->second;
  }
  OslashElement pair(const Word& x, const NcPoly& y) {
    OslashElement out;
    for (const auto& [w, c] : y) out.add_scaled(pair(x, w), c);
    return out;
  }
  const OslashElement& iB(const Word& x) { return pair(x, Word{}); }
  const Presentation& b() const { return b_; }
  const OslashSpace& os() const { return os_; }

 private:
  const OslashSpace& os_;
  const Presentation& b_;
  std::map<TensorKey, OslashElement> pairs_;
};

// Linear conditions on the unknown values of a functional, keyed by
// (constraint, output coordinate).
struct Conditions {
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> rows;
  std::map<std::size_t, std::string> constraint_names;
  // Unknowns that received a nonzero contribution, even if it later cancelled.
  std::set<std::size_t> involved;
  std::size_t next = 0;

  std::size_t open(std::string name) {
    constraint_names.emplace(next, std::move(name));
    return next++;
  }
  void add(std::size_t constraint, std::size_t output, std::size_t unknown, const Scalar& c) {
    if (c.is_zero()) return;
    involved.insert(unknown);
    rows[{constraint, output}].add_term(unknown, c);
  }
  // output coordinate(s) times f(input)
  void add_product(std::size_t constraint, const SparseVector& output, const SparseVector& input, const Scalar& c) {
    for (const auto& [k, ck] : output) {
      for (const auto& [j, cj] : input) add(constraint, k, j, c * ck * cj);
    }
  }
};

std::vector<Word> constraint_words(const OslashSpace& os, int d) {
  return os.exact() ? os.presentation().full_basis() : os.presentation().basis(d);
}

Conditions oslash_conditions(Reducer& r, IntegralMode mode, int d) {
  const OslashSpace& os = r.os();
  const Presentation& b = r.b();
  const Alphabet& a = b.alphabet();
  Conditions cond;
  const std::vector<Word> words = constraint_words(os, d);
  auto fits = [&](int deg) { return os.exact() || deg <= d; };

  switch (mode) {
    case IntegralMode::oslash_new:
    case IntegralMode::oslash_in_algebra: {
      const bool in_algebra = mode == IntegralMode::oslash_in_algebra;
      // Outputs of the in-algebra variant are words of B, numbered on first use.
      std::map<Word, std::size_t> word_index;
      for (const Word& x : words) {
        for (const Word& y : words) {
          if (!fits(b.degree(x) + b.degree(y))) continue;
          const std::size_t id = cond.open("(" + a.format(x) + ", " + a.format(y) + ")");
          auto output = [&](const Word& w) -> SparseVector {
            if (!in_algebra) return r.iB(w);
            return SparseVector(word_index.try_emplace(w, word_index.size()).first->second);
          };
          for (const auto& [k, c] : b.delta(x)) cond.add_product(id, output(k.first), r.pair(k.second, y), c);
          for (const auto& [k, c] : b.delta(y)) cond.add_product(id, output(k.second), r.pair(x, k.first), -c);
        }
      }
      break;
    }
    case IntegralMode::oslash_augmented: {
      for (std::size_t u = 0; u < os.dimension(); ++u) {
        if (!fits(os.filtration_degree(u))) continue;
        const TensorKey& rep = os.representative(u);
        const std::size_t id = cond.open(a.format(rep.first) + " (/) " + a.format(rep.second));
        for (const auto& [lr, c] : oslash_comult(os, OslashElement(u))) cond.add(id, lr.first, lr.second, c);
        cond.add(id, os.unit_index(), u, Scalar(-1));
      }
      break;
    }
    case IntegralMode::oslash_three_variable: {
      for (const Word& x : words) {
        for (const Word& y : words) {
          for (const Word& z : words) {
            if (!fits(b.degree(x) + b.degree(y) + b.degree(z))) continue;
            const std::size_t id = cond.open("(" + a.format(x) + ", " + a.format(y) + ", " + a.format(z) + ")");
            for (const auto& [kx, cx] : b.delta(x)) {
              for (const auto& [kz, cz] : b.delta(z)) {
                cond.add_product(id, r.pair(kx.first, kz.second), r.pair(kx.second, b.multiply(y, kz.first)), cx * cz);
              }
            }
            for (const auto& [ky, cy] : b.delta(y)) {
              cond.add_product(id, r.iB(ky.second), r.pair(x, b.multiply(ky.first, z)), -cy);
            }
          }
        }
      }
      break;
    }
    case IntegralMode::classical:
      throw InternalConsistencyError("classical conditions are not oslash conditions");
  }
  return cond;
}

Conditions classical_conditions(const Presentation& b, const std::vector<Word>& words) {
  const Alphabet& a = b.alphabet();
  Conditions cond;
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  auto idx = [&](const Word& w) {
    auto it = index.find(w);
    if (it == index.end()) throw WindowOverflow("coproduct component " + a.format(w) + " is outside the window");
    return it->second;
  };
  for (const Word& w : words) {
    const std::size_t id = cond.open(a.format(w));
    for (const auto& [k, c] : b.delta(w)) cond.add(id, idx(k.first), idx(k.second), c);
    cond.add(id, 0, idx(w), Scalar(-1));
  }
  return cond;
}

}  // namespace

SolutionSpace solve_integrals(const OslashSpace& os, IntegralMode mode, const SolveOptions& options) {
  const Presentation& b = os.presentation();
  const Alphabet& a = b.alphabet();
  SolutionSpace sol;
  sol.mode = mode;
  sol.exact = os.exact();
  sol.window = os.window();
  sol.margin = options.margin;
  sol.degree = os.exact() ? os.window() : options.degree;
  if (!os.exact() && (options.degree > os.window() || options.degree < 0)) {
    throw UnsupportedMode("degree " + std::to_string(options.degree) + " exceeds the window " +
                          std::to_string(os.window()));
  }
  if (options.margin < 0) throw PreconditionError("margin must be non-negative");

  Conditions cond;
  std::size_t unknowns = 0;
  if (mode == IntegralMode::classical) {
    sol.words = os.exact() ? b.full_basis() : b.basis(sol.degree);
    for (const Word& w : sol.words) {
      sol.labels.push_back(a.format(w));
      sol.coordinate_degree.push_back(b.degree(w));
    }
    unknowns = sol.words.size();
    cond = classical_conditions(b, sol.words);
  } else {
    unknowns = os.exact() ? os.dimension() : os.dimension_up_to(sol.degree);
    for (std::size_t j = 0; j < unknowns; ++j) {
      const TensorKey& rep = os.representative(j);
      sol.labels.push_back(a.format(rep.first) + " (/) " + a.format(rep.second));
      sol.coordinate_degree.push_back(os.filtration_degree(j));
    }
    Reducer r(os);
    cond = oslash_conditions(r, mode, sol.degree);
  }

  sol.touched.assign(unknowns, false);
  for (std::size_t j : cond.involved) {
    if (j >= unknowns) throw InternalConsistencyError("a condition reaches beyond the unknowns");
    sol.touched[j] = true;
  }
  std::vector<SparseVector> equations;
  equations.reserve(cond.rows.size());
  for (auto& [key, row] : cond.rows) {
    if (!row.is_zero()) equations.push_back(std::move(row));
  }
  sol.num_constraints = cond.constraint_names.size();
  sol.basis = nullspace(equations, unknowns);

  std::vector<SparseVector> projected;
  for (const SparseVector& v : sol.basis) {
    SparseVector p;
    for (const auto& [j, c] : v) {
      if (sol.is_interior(j)) p.add_term(j, c);
    }
    projected.push_back(std::move(p));
  }
  sol.interior_basis = echelon_basis(projected, PivotRule::least);

  if (!sol.basis.empty() && sol.basis.front().begin()->first == 0) sol.total_integral = sol.basis.front();
  return sol;
}

std::string SolutionSpace::to_json() const {
  nlohmann::json j;
  j["mode"] = bialint::to_string(mode);
  j["exact"] = exact;
  j["d"] = degree;
  j["D"] = window;
  j["margin"] = margin;
  j["dimension"] = dimension();
  j["interior_dimension"] = interior_dimension();
  nlohmann::json basis_json = nlohmann::json::array();
  for (const SparseVector& v : basis) basis_json.push_back(vector_json(v, labels));
  j["basis"] = basis_json;
  nlohmann::json touched_json = nlohmann::json::array();
  for (std::size_t i = 0; i < touched.size(); ++i) touched_json.push_back({labels[i], bool(touched[i])});
  j["touched"] = touched_json;
  j["total_integral"] = total_integral ? vector_json(*total_integral, labels) : nlohmann::json(nullptr);
  return j.dump(2);
}

std::vector<std::string> integral_residuals(const OslashSpace& os, IntegralMode mode, const OslashFunctional& f,
                                            int degree) {
  if (mode == IntegralMode::classical) throw UnsupportedMode("classical residuals need an algebra functional");
  Reducer r(os);
  const Conditions cond = oslash_conditions(r, mode, os.exact() ? os.window() : degree);
  std::vector<std::string> out;
  for (const auto& [key, row] : cond.rows) {
    const Scalar v = dot(row, f.values);
    if (!v.is_zero()) out.push_back(cond.constraint_names.at(key.first) + " at coordinate " + std::to_string(key.second));
  }
  return out;
}

AlgebraFunctional omega(const OslashSpace& os, const OslashFunctional& f, int d) {
  AlgebraFunctional out;
  const std::vector<Word> words = os.exact() ? os.presentation().full_basis() : os.presentation().basis(d);
  for (const Word& w : words) out.values[w] = f(map_iB(os, NcPoly(w)));
  return out;
}

OslashFunctional convolve(const OslashSpace& os, const OslashFunctional& f, const OslashFunctional& g) {
  OslashFunctional out;
  for (std::size_t i = 0; i < os.dimension(); ++i) {
    Scalar v(0);
    for (const auto& [lr, c] : oslash_comult(os, OslashElement(i))) v += c * f.at(lr.second) * g.at(lr.first);
    out.values.set(i, v);
  }
  return out;
}

OslashFunctional convolve_plain(const OslashSpace& os, const OslashFunctional& f, const OslashFunctional& g) {
  return convolve(os, g, f);
}

OslashFunctional conv_unit(const OslashSpace& os) {
  OslashFunctional out;
  for (std::size_t i = 0; i < os.dimension(); ++i) out.values.set(i, oslash_counit(os, OslashElement(i)));
  return out;
}

ConvolutionTable::ConvolutionTable(const OslashSpace& os, int max_degree) {
  for (std::size_t i = 0; i < os.dimension(); ++i) {
    if (max_degree >= 0 && os.filtration_degree(i) > max_degree) break;
    comult_.push_back(oslash_comult(os, OslashElement(i)));
    unit_.values.set(i, oslash_counit(os, OslashElement(i)));
  }
}

OslashFunctional ConvolutionTable::convolve(const OslashFunctional& f, const OslashFunctional& g) const {
  OslashFunctional out;
  for (std::size_t i = 0; i < comult_.size(); ++i) {
    Scalar v(0);
    for (const auto& [lr, c] : comult_[i]) v += c * f.at(lr.second) * g.at(lr.first);
    out.values.set(i, v);
  }
  return out;
}

AlgebraFunctional convolve_algebra(const Presentation& b, const AlgebraFunctional& f, const AlgebraFunctional& g,
                                   const std::vector<Word>& words) {
  AlgebraFunctional out;
  for (const Word& w : words) {
    Scalar v(0);
    for (const auto& [k, c] : b.delta(w)) v += c * f.at(k.first) * g.at(k.second);
    if (!v.is_zero()) out.values[w] = v;
  }
  return out;
}

CosepWitness coseparability_witness(const OslashSpace& os, const OslashFunctional& f, int d) {
  const Presentation& b = os.presentation();
  const Alphabet& a = b.alphabet();
  CosepWitness w;
  Reducer r(os);
  w.total = f(r.pair(Word{}, Word{})).is_one();
  if (!w.total) w.failures.push_back("f(1 (/) 1) = " + f(r.pair(Word{}, Word{})).to_string());

  auto theta = [&](const Word& x, const Word& y) {
    auto it = w.theta.find({x, y});
    if (it != w.theta.end()) return it->second;
    NcPoly t;
    for (const auto& [k, c] : b.delta(x)) t.add_term(k.first, c * f(r.pair(k.second, y)));
    w.theta.emplace(TensorKey{x, y}, t);
    return t;
  };

  const std::vector<Word> words = constraint_words(os, d);
  const int limit = os.exact() ? os.window() : d;
  w.equation_holds = true;
  for (const Word& x : words) {
    for (const Word& y : words) {
      if (b.degree(x) + b.degree(y) > limit) continue;
      NcPoly rhs;
      for (const auto& [k, c] : b.delta(y)) rhs.add_term(k.second, c * f(r.pair(x, k.first)));
      const NcPoly diff = theta(x, y) - rhs;
      if (!diff.is_zero()) {
        w.equation_holds = false;
        w.failures.push_back("x1 f(x2 (/) y) - f(x (/) y1) y2 = " + format_poly(diff, a) + " at (" + a.format(x) + ", " +
                             a.format(y) + ")");
      }
    }
  }
  w.splits_delta = true;
  for (const Word& x : words) {
    // both tensor factors of delta(x) can carry the full degree of x
    if (2 * b.degree(x) > limit) continue;
    NcPoly total;
    for (const auto& [k, c] : b.delta(x)) total.add_scaled(theta(k.first, k.second), c);
    if (total != NcPoly(x)) {
      w.splits_delta = false;
      w.failures.push_back("theta(delta(" + a.format(x) + ")) = " + format_poly(total, a));
    }
  }
  return w;
}

std::vector<std::string> check_right_hopf_identity(const Presentation& b, const std::function<Scalar(const Word&)>& tau,
                                                   int d, std::size_t* pairs_checked) {
  const Alphabet& a = b.alphabet();
  auto tau_of = [&](const NcPoly& p) {
    Scalar v(0);
    for (const auto& [w, c] : p) v += c * tau(w);
    return v;
  };
  std::vector<std::string> failures;
  const std::vector<Word> words = b.finite_dimensional() ? b.full_basis() : b.basis(d);
  const int limit = b.finite_dimensional() ? 2 * b.top_degree() : d;
  std::size_t count = 0;
  for (const Word& x : words) {
    for (const Word& y : words) {
      if (b.degree(x) + b.degree(y) > limit) continue;
      ++count;
      const NcPoly sy = b.antipode(y);
      NcPoly lhs, rhs;
      for (const auto& [k, c] : b.delta(x)) lhs.add_term(k.first, c * tau_of(b.multiply(NcPoly(k.second), sy)));
      for (const auto& [k, c] : b.delta(y)) {
        rhs.add_term(k.second, c * tau_of(b.multiply(NcPoly(x), b.antipode(k.first))));
      }
      if (lhs != rhs) {
        failures.push_back("(" + a.format(x) + ", " + a.format(y) + "): " + format_poly(lhs, a) + " vs " +
                           format_poly(rhs, a));
      }
    }
  }
  if (pairs_checked) *pairs_checked = count;
  return failures;
}

RightHopfCertificate right_hopf_translate(const OslashSpace& os, const OslashFunctional& f, int d) {
  const Presentation& b = os.presentation();
  if (!b.has_antipode()) throw PreconditionError(b.name() + " has no declared antipode");
  const Alphabet& a = b.alphabet();
  RightHopfCertificate cert;
  cert.antipode_ok = true;
  const std::vector<Word> words = os.exact() ? b.full_basis() : b.basis(d);
  for (const Word& w : words) {
    // Only the right antipode identity x1 S(x2) = eps(x) 1 is needed.
    NcPoly right;
    for (const auto& [k, c] : b.delta(w)) right.add_scaled(b.multiply(NcPoly(k.first), b.antipode(k.second)), c);
    if (right != NcPoly(Word{}, b.counit(w))) {
      cert.antipode_ok = false;
      cert.failures.push_back("x1 S(x2) = " + format_poly(right, a) + " at " + a.format(w));
    }
  }
  if (!cert.antipode_ok) throw PreconditionError("declared antipode is not a right antipode: " + cert.failures.front());
  std::map<Word, Scalar> cache;
  auto tau = [&](const Word& w) {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    const Scalar v = f(map_iB(os, NcPoly(w)));
    cache.emplace(w, v);
    return v;
  };
  const std::vector<std::string> failures = check_right_hopf_identity(b, tau, d, &cert.pairs_checked);
  cert.identity_holds = failures.empty();
  cert.failures.insert(cert.failures.end(), failures.begin(), failures.end());
  for (const Word& w : words) cert.tau.values[w] = tau(w);
  return cert;
}

OslashFunctional oslash_from_algebra(const OslashSpace& os, const std::function<Scalar(const Word&)>& tau) {
  const Presentation& b = os.presentation();
  OslashFunctional f;
  for (std::size_t i = 0; i < os.dimension(); ++i) {
    const TensorKey& rep = os.representative(i);
    Scalar v(0);
    for (const auto& [w, c] : b.multiply(NcPoly(rep.first), b.antipode(rep.second))) v += c * tau(w);
    f.values.set(i, v);
  }
  return f;
}

}  // namespace bialint

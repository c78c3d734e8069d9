#include "bialint/hopf.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "bialint/catalog.hpp"
#include "bialint/errors.hpp"

namespace bialint {

NcPoly LinearEndo::apply(const Word& w) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || *it != w) throw DomainError("word outside the domain of the linear map");
  return images[static_cast<std::size_t>(it - basis.begin())];
}

NcPoly LinearEndo::apply(const NcPoly& p) const {
  NcPoly out;
  for (const auto& [w, c] : p) out.add_scaled(apply(w), c);
  return out;
}

LinearEndo LinearEndo::compose(const LinearEndo& other) const {
  LinearEndo out;
  out.basis = other.basis;
  for (const NcPoly& img : other.images) out.images.push_back(apply(img));
  return out;
}

std::size_t LinearEndo::rank() const {
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  Echelon e;
  for (const NcPoly& img : images) {
    SparseVector v;
    for (const auto& [w, c] : img) v.add_term(index.try_emplace(w, index.size()).first->second, c);
    e.insert(std::move(v));
  }
  return e.rank();
}

bool LinearEndo::is_identity() const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (images[i] != NcPoly(basis[i])) return false;
  }
  return true;
}

std::string LinearEndo::format(const Alphabet& a) const {
  std::string out;
  for (std::size_t i = 0; i < basis.size(); ++i) out += a.format(basis[i]) + " -> " + format_poly(images[i], a) + "\n";
  return out;
}

LinearEndo LinearEndo::from_map(const std::vector<Word>& basis, const std::map<Word, NcPoly>& images) {
  LinearEndo out;
  out.basis = basis;
  std::sort(out.basis.begin(), out.basis.end());
  for (const Word& w : out.basis) {
    auto it = images.find(w);
    out.images.push_back(it == images.end() ? NcPoly() : it->second);
  }
  return out;
}

LinearEndo LinearEndo::identity(const std::vector<Word>& basis) {
  LinearEndo out;
  out.basis = basis;
  std::sort(out.basis.begin(), out.basis.end());
  for (const Word& w : out.basis) out.images.emplace_back(w);
  return out;
}

std::string to_string(AntipodeSide side) {
  switch (side) {
    case AntipodeSide::two_sided:
      return "two_sided";
    case AntipodeSide::right:
      return "right";
    case AntipodeSide::left:
      return "left";
  }
  return "unknown";
}

AntipodeSide parse_antipode_side(std::string_view text) {
  if (text == "two_sided" || text == "two-sided" || text == "both") return AntipodeSide::two_sided;
  if (text == "right") return AntipodeSide::right;
  if (text == "left") return AntipodeSide::left;
  throw MalformedInput("unknown antipode side '" + std::string(text) + "'");
}

namespace {

bool keeps_degrees(const Presentation& b) {
  if (b.backend() != Backend::free_algebra) return false;
  for (const Rule& r : b.rules().rules()) {
    for (const auto& [w, c] : r.rhs) {
      if (b.degree(w) != b.degree(r.lhs)) return false;
    }
  }
  return true;
}

std::vector<Word> window_words(const Presentation& b, int d) {
  return b.finite_dimensional() ? b.full_basis() : b.basis(d);
}

std::map<Word, std::size_t> index_words(const std::vector<Word>& words) {
  std::map<Word, std::size_t> out;
  for (std::size_t i = 0; i < words.size(); ++i) out.emplace(words[i], i);
  return out;
}

}  // namespace

AntipodeResult solve_antipode(const Presentation& b, AntipodeSide side) {
  AntipodeResult result;
  const Alphabet& a = b.alphabet();
  if (!b.finite_dimensional()) {
    if (keeps_degrees(b)) {
      for (Letter g = 0; g < a.size(); ++g) {
        const Word w = Word::letter(g);
        if (b.degree(w) > 0 && b.counit(w).is_one() && b.delta(w) == TensorPoly(TensorKey{w, w})) {
          result.note = a.format(w) + " is group-like of positive degree, so it is not invertible";
          return result;
        }
      }
    }
    throw UnsupportedMode("antipodes are only solved for finite-dimensional presentations; declare one instead");
  }

  const std::vector<Word> words = b.full_basis();
  const std::size_t n = words.size();
  const auto index = index_words(words);
  auto unknown = [&](const Word& w, std::size_t j) { return index.at(w) * n + j; };

  // One equation per (basis word, output word); the unit row always exists
  // so that eps(b) != 0 with nothing on the left is seen as inconsistent.
  std::map<std::pair<std::size_t, Word>, std::pair<SparseVector, Scalar>> rows;
  auto add_side = [&](std::size_t tag, const Word& w, bool right) {
    rows[{tag, Word{}}].second = b.counit(w);
    for (const auto& [k, c] : b.delta(w)) {
      const Word& fixed = right ? k.first : k.second;
      const Word& solved = right ? k.second : k.first;
      for (std::size_t j = 0; j < n; ++j) {
        const NcPoly prod = right ? b.multiply(fixed, words[j]) : b.multiply(words[j], fixed);
        for (const auto& [out, cp] : prod) rows[{tag, out}].first.add_term(unknown(solved, j), c * cp);
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (side != AntipodeSide::left) add_side(2 * i, words[i], true);
    if (side != AntipodeSide::right) add_side(2 * i + 1, words[i], false);
  }
  std::vector<SparseVector> eqs;
  std::vector<Scalar> rhs;
  for (auto& [key, row] : rows) {
    eqs.push_back(std::move(row.first));
    rhs.push_back(row.second);
  }
  result.equations = eqs.size();
  const std::optional<SparseVector> sol = solve_linear(eqs, rhs, n * n);
  if (!sol) {
    result.note = "the " + to_string(side) + " convolution-inverse system is inconsistent";
    return result;
  }
  result.unique = nullspace(eqs, n * n).empty();
  LinearEndo s;
  s.basis = words;
  s.images.assign(n, NcPoly());
  for (const auto& [col, c] : *sol) s.images[col / n].add_term(words[col % n], c);
  result.antipode = std::move(s);
  if (!result.unique) result.note = "the solution is not unique; free unknowns were set to zero";
  return result;
}

LinearEndo declared_antipode(const Presentation& b, int d) {
  if (!b.has_antipode()) throw PreconditionError(b.name() + " has no declared antipode");
  LinearEndo s;
  s.basis = window_words(b, d);
  for (const Word& w : s.basis) s.images.push_back(b.antipode(w));
  return s;
}

AntipodeReport check_antipode_properties(const LinearEndo& s, const OslashSpace& os, int d) {
  const Presentation& b = os.presentation();
  const Alphabet& a = b.alphabet();
  const bool finite = os.exact();
  const int limit = finite ? os.window() : std::min(d, os.degree());
  const std::vector<Word> words = finite ? b.full_basis() : b.basis(limit);
  AntipodeReport rep;

  rep.right_identity = true;
  rep.anti_comultiplicative = true;
  for (const Word& w : words) {
    NcPoly conv;
    for (const auto& [k, c] : b.delta(w)) conv.add_scaled(b.multiply(NcPoly(k.first), s.apply(k.second)), c);
    if (conv != NcPoly(Word{}, b.counit(w))) {
      rep.right_identity = false;
      rep.failures.push_back("x1 S(x2) = " + format_poly(conv, a) + " at " + a.format(w));
    }
    TensorPoly lhs = b.delta(s.apply(w));
    TensorPoly rhs;
    for (const auto& [k, c] : flip(b.delta(w))) rhs.add_scaled(tensor(s.apply(k.first), s.apply(k.second)), c);
    if (lhs != rhs) {
      rep.anti_comultiplicative = false;
      rep.failures.push_back("delta(S(" + a.format(w) + ")) = " + format_tensor(lhs, a) + " but (S (x) S) flip delta = " +
                             format_tensor(rhs, a));
    }
  }

  auto j_map = [&](const OslashElement& e) {
    NcPoly out;
    for (const auto& [idx, c] : e) {
      const TensorKey& r = os.representative(idx);
      out.add_scaled(b.multiply(NcPoly(r.first), s.apply(r.second)), c);
    }
    return out;
  };

  rep.anti_multiplicative = true;
  rep.inverts_iB = true;
  for (const Word& w : words) {
    const NcPoly back = j_map(map_iB(os, NcPoly(w)));
    if (back != NcPoly(w)) {
      rep.inverts_iB = false;
      rep.failures.push_back("j(i_B(" + a.format(w) + ")) = " + format_poly(back, a));
    }
  }
  for (const Word& x : words) {
    for (const Word& y : words) {
      if (!finite && b.degree(x) + b.degree(y) > limit) continue;
      ++rep.pairs_checked;
      const NcPoly sxy = s.apply(b.multiply(x, y));
      const NcPoly sysx = b.multiply(s.apply(y), s.apply(x));
      if (sxy != sysx) {
        rep.anti_multiplicative = false;
        rep.failures.push_back("S(" + a.format(x) + "." + a.format(y) + ") = " + format_poly(sxy, a) +
                               " but S(y) S(x) = " + format_poly(sysx, a));
      }
      const NcPoly xsy = b.multiply(NcPoly(x), s.apply(y));
      if (map_iB(os, xsy) != os.reduce_pair(x, y)) {
        rep.inverts_iB = false;
        rep.failures.push_back("x S(y) (/) 1 differs from x (/) y at (" + a.format(x) + ", " + a.format(y) + ")");
      }
    }
  }
  return rep;
}

std::vector<std::string> check_iB_section(const OslashSpace& os, const std::map<Word, NcPoly>& section) {
  const Alphabet& a = os.presentation().alphabet();
  std::vector<std::string> failures;
  for (const auto& [y, sy] : section) {
    if (os.reduce_pair(Word{}, y) != map_iB(os, sy)) {
      failures.push_back("1 (/) " + a.format(y) + " differs from " + format_poly(sy, a) + " (/) 1");
    }
  }
  return failures;
}

namespace {

bool is_commutative(const Presentation& p) {
  const std::vector<Word> words = p.full_basis();
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (p.multiply(u, v) != p.multiply(v, u)) return false;
    }
  }
  return true;
}

bool is_cocommutative(const Presentation& p) {
  for (const Word& w : p.full_basis()) {
    if (p.delta(w) != flip(p.delta(w))) return false;
  }
  return true;
}

}  // namespace

Envelope hopf_envelope_findim(const Presentation& b) {
  if (!b.finite_dimensional()) throw UnsupportedMode("the Hopf envelope is only computed for finite-dimensional input");
  const OslashSpace os = OslashSpace::build(b);
  std::vector<NcPoly> kernel = kernel_iB(os);

  // Each kernel vector is led by its greatest word with coefficient 1 and
  // has no other leading words, so lead = -(rest) in the quotient.
  std::map<Word, NcPoly> lead_image;
  for (const NcPoly& k : kernel) {
    const Word lead = k.leading().first;
    NcPoly rest = k;
    rest.erase(lead);
    lead_image.emplace(lead, -rest);
  }
  std::map<Word, NcPoly> projection;
  std::vector<Word> complement;
  for (const Word& w : b.full_basis()) {
    auto it = lead_image.find(w);
    if (it == lead_image.end()) {
      complement.push_back(w);
      projection.emplace(w, NcPoly(w));
    } else {
      projection.emplace(w, it->second);
    }
  }
  auto proj = [&](const NcPoly& p) {
    NcPoly out;
    for (const auto& [w, c] : p) out.add_scaled(projection.at(w), c);
    return out;
  };
  auto proj2 = [&](const TensorPoly& t) {
    TensorPoly out;
    for (const auto& [k, c] : t) out.add_scaled(tensor(projection.at(k.first), projection.at(k.second)), c);
    return out;
  };

  PresentationData data;
  data.name = b.name() + "_envelope";
  data.alphabet = b.alphabet();
  data.q = b.q();
  data.backend = Backend::structure_constants;
  data.flags.finite = true;
  data.basis = complement;
  for (const Word& u : complement) {
    if (u.empty()) continue;
    for (const Word& v : complement) {
      if (v.empty()) continue;
      const NcPoly p = proj(b.multiply(u, v));
      if (!p.is_zero()) data.mult.emplace(TensorKey{u, v}, p);
    }
    data.basis_delta.emplace(u, proj2(b.delta(u)));
    const Scalar e = b.counit(u);
    if (!e.is_zero()) data.basis_counit.emplace(u, e);
  }
  Presentation draft{data};
  data.flags.commutative = is_commutative(draft);
  data.flags.cocommutative = is_cocommutative(draft);
  draft = Presentation(data);

  AntipodeResult antipode = solve_antipode(draft, AntipodeSide::two_sided);
  if (!antipode.antipode) {
    throw InternalConsistencyError("the envelope of " + b.name() + " has no antipode: " + antipode.note);
  }
  for (std::size_t i = 0; i < antipode.antipode->basis.size(); ++i) {
    const Word& w = antipode.antipode->basis[i];
    if (!w.empty()) data.basis_antipode.emplace(w, antipode.antipode->images[i]);
  }
  Presentation hopf{data};
  AxiomReport axioms = check_axioms(hopf, hopf.top_degree());
  if (!axioms.passed()) {
    throw InternalConsistencyError("the envelope of " + b.name() + " fails the bialgebra axioms: " + axioms.summary());
  }
  return Envelope{std::move(hopf), std::move(kernel), std::move(projection), std::move(antipode), std::move(axioms)};
}

std::vector<std::string> compare_structure(const Presentation& from, const Presentation& to, const GeneratorMap& map) {
  const Alphabet& a = from.alphabet();
  std::vector<std::string> failures;
  const std::vector<Word> words = from.full_basis();
  if (words.size() != to.full_basis().size()) {
    failures.push_back("dimensions differ: " + std::to_string(words.size()) + " vs " +
                       std::to_string(to.full_basis().size()));
    return failures;
  }
  auto f = [&](const NcPoly& p) {
    NcPoly out;
    for (const auto& [w, c] : p) out.add_scaled(apply_generator_map(map, to, w), c);
    return out;
  };
  LinearEndo images;
  images.basis = words;
  for (const Word& w : words) images.images.push_back(f(NcPoly(w)));
  if (!images.invertible()) failures.push_back("the map is not bijective on bases");
  for (const Word& u : words) {
    TensorPoly dt;
    for (const auto& [k, c] : from.delta(u)) dt.add_scaled(tensor(f(NcPoly(k.first)), f(NcPoly(k.second))), c);
    if (to.delta(f(NcPoly(u))) != dt) failures.push_back("coproduct differs on " + a.format(u));
    if (to.counit(f(NcPoly(u))) != from.counit(u)) failures.push_back("counit differs on " + a.format(u));
    if (from.has_antipode() && to.has_antipode() && to.antipode(f(NcPoly(u))) != f(from.antipode(u))) {
      failures.push_back("antipode differs on " + a.format(u));
    }
    for (const Word& v : words) {
      if (f(from.multiply(u, v)) != to.multiply(f(NcPoly(u)), f(NcPoly(v)))) {
        failures.push_back("product differs on " + a.format(u) + " * " + a.format(v));
      }
    }
  }
  return failures;
}

EnvelopeIntegral integral_via_envelope(const OslashSpace& os, const Presentation& target, const FHat& fhat,
                                       const AlgebraFunctional& tau, int d) {
  if (!fhat.well_defined || !fhat.bijective) throw PreconditionError("f^ is not bijective: " + fhat.note);
  const Alphabet& at = target.alphabet();
  EnvelopeIntegral out;
  for (const Word& w : window_words(target, d)) {
    NcPoly lhs;
    for (const auto& [k, c] : target.delta(w)) lhs.add_term(k.first, c * tau.at(k.second));
    const NcPoly rhs(Word{}, tau.at(w));
    if (lhs != rhs) out.tau_residuals.push_back("b1 tau(b2) = " + format_poly(lhs, at) + " at " + at.format(w));
  }
  for (std::size_t i = 0; i < fhat.images.size(); ++i) out.lambda.values.set(i, tau(fhat.images[i]));
  out.residuals = integral_residuals(os, IntegralMode::oslash_new, out.lambda, os.exact() ? os.window() : d);
  return out;
}

QuantumEnvelopeCheck check_quantum_envelope(const OslashSpace& os, const Scalar& q) {
  const Presentation& b = os.presentation();
  const Presentation target = quantum_laurent(q);
  const Alphabet& ab = b.alphabet();
  const Alphabet& at = target.alphabet();
  const Letter bx = ab.find("x").value(), by = ab.find("y").value();
  const Letter tx = at.find("x").value(), txi = at.find("xi").value(), ty = at.find("y").value();

  QuantumEnvelopeCheck check;
  GeneratorMap eta;
  eta.images.emplace(bx, NcPoly(Word::letter(tx)));
  eta.images.emplace(by, NcPoly(Word::letter(ty)));
  const FHat fhat = build_fhat(os, target, eta);
  check.fhat_well_defined = fhat.well_defined;
  check.fhat_bijective = fhat.bijective;
  if (!fhat.well_defined) {
    check.failures.push_back(fhat.note);
    return check;
  }

  auto power = [](Letter g, std::size_t n) { return Word(std::vector<Letter>(n, g)); };
  auto gamma_word = [&](const Word& t) {
    std::size_t n = 0;
    bool inverse = false;
    while (n < t.size() && (t[n] == tx || t[n] == txi)) {
      inverse = t[n] == txi;
      ++n;
    }
    const std::size_t m = t.size() - n;
    for (std::size_t i = n; i < t.size(); ++i) {
      if (t[i] != ty) throw InternalConsistencyError("unexpected normal form " + at.format(t));
    }
    if (!inverse) return os.reduce_pair(power(bx, n) * power(by, m), Word{});
    OslashElement e = os.reduce_pair(power(by, m), power(bx, n));
    e *= q.pow(static_cast<long>(n * m));
    return e;
  };
  auto gamma = [&](const NcPoly& p) {
    OslashElement out;
    for (const auto& [w, c] : p) out.add_scaled(gamma_word(w), c);
    return out;
  };

  check.gamma_then_eta = true;
  for (const Word& t : target.basis(os.degree())) {
    ++check.checked;
    const NcPoly back = fhat.apply(gamma_word(t));
    if (back != NcPoly(t)) {
      check.gamma_then_eta = false;
      check.failures.push_back("eta^(gamma(" + at.format(t) + ")) = " + format_poly(back, at));
    }
  }
  check.eta_then_gamma = true;
  for (std::size_t i = 0; i < os.dimension(); ++i) {
    if (os.filtration_degree(i) > os.degree()) continue;
    // S(y) = -x^-1 y raises degrees, so gamma may leave the trusted range.
    if (target.degree(fhat.images[i]) > os.degree()) {
      ++check.skipped;
      continue;
    }
    ++check.checked;
    const OslashElement back = gamma(fhat.images[i]);
    if (back != OslashElement(i)) {
      check.eta_then_gamma = false;
      check.failures.push_back("gamma(eta^(" + os.format(OslashElement(i)) + ")) = " + os.format(back));
    }
  }
  return check;
}

DualVector harpoon(const Presentation& b, const Word& x, const DualVector& phi) {
  const std::vector<Word> words = b.full_basis();
  const auto index = index_words(words);
  DualVector out;
  for (std::size_t j = 0; j < words.size(); ++j) {
    Scalar v(0);
    for (const auto& [w, c] : b.multiply(words[j], x)) v += c * phi.coefficient(index.at(w));
    out.set(j, v);
  }
  return out;
}

DualVector convolve_op(const Presentation& b, const DualVector& phi, const DualVector& psi) {
  const std::vector<Word> words = b.full_basis();
  const auto index = index_words(words);
  DualVector out;
  for (std::size_t j = 0; j < words.size(); ++j) {
    Scalar v(0);
    for (const auto& [k, c] : b.delta(words[j])) {
      v += c * phi.coefficient(index.at(k.second)) * psi.coefficient(index.at(k.first));
    }
    out.set(j, v);
  }
  return out;
}

DualVector chi(const OslashSpace& os, const OslashFunctional& f) {
  const std::vector<Word> words = os.presentation().full_basis();
  DualVector out;
  for (std::size_t j = 0; j < words.size(); ++j) out.set(j, f(map_iB(os, NcPoly(words[j]))));
  return out;
}

OslashFunctional right_action(const OslashSpace& os, const OslashFunctional& f, const Word& x) {
  const Presentation& b = os.presentation();
  OslashFunctional out;
  for (std::size_t i = 0; i < os.dimension(); ++i) {
    const TensorKey& r = os.representative(i);
    out.values.set(i, f(os.reduce(tensor(NcPoly(r.first), b.multiply(x, r.second)))));
  }
  return out;
}

NcPoly module_action(const OslashSpace& os, const Word& x, const OslashFunctional& f) {
  const Presentation& b = os.presentation();
  NcPoly out;
  for (const auto& [k, c] : b.delta(x)) out.add_term(k.first, c * f(os.reduce_pair(k.second, Word{})));
  return out;
}

namespace {

// Dual basis vector e_j.
DualVector dual_basis(std::size_t j) { return DualVector(j); }

SmashElement scaled_pairs(const SparseVector& left, std::size_t right, const Scalar& c, bool left_first) {
  SmashElement out;
  for (const auto& [i, ci] : left) out.add_term(left_first ? std::make_pair(i, right) : std::make_pair(right, i), c * ci);
  return out;
}

}  // namespace

SmashAlgebra::SmashAlgebra(const OslashSpace& os, SmashKind kind) : os_(&os), kind_(kind) {
  const Presentation& b = os.presentation();
  if (!os.exact()) throw UnsupportedMode("smash products need a finite-dimensional bialgebra");
  const std::vector<Word> words = b.full_basis();
  const auto index = index_words(words);
  const std::size_t n = words.size();
  const std::size_t m = os.dimension();

  auto word_vector = [&](const NcPoly& p) {
    SparseVector v;
    for (const auto& [w, c] : p) v.add_term(index.at(w), c);
    return v;
  };

  if (kind == SmashKind::semidirect) {
    left_dim_ = n;
    right_dim_ = m;
    const OslashFunctional eps = conv_unit(os);
    for (const auto& [k, c] : eps.values) unit_.add_term({0, k}, c);
    // (f <| w) for every dual basis functional, computed once.
    std::vector<std::vector<OslashFunctional>> acted(m, std::vector<OslashFunctional>(n));
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < n; ++j) acted[k][j] = right_action(os, OslashFunctional{SparseVector(k)}, words[j]);
    }
    products_.resize(dimension() * dimension());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
          const TensorPoly dj = b.delta(words[j]);
          for (std::size_t l = 0; l < m; ++l) {
            SmashElement prod;
            for (const auto& [t, c] : dj) {
              const SparseVector left = word_vector(b.multiply(words[i], t.first));
              const OslashFunctional right =
                  convolve(os, acted[k][index.at(t.second)], OslashFunctional{SparseVector(l)});
              for (const auto& [li, cl] : left) {
                for (const auto& [rk, cr] : right.values) prod.add_term({li, rk}, c * cl * cr);
              }
            }
            products_[(i * m + k) * dimension() + (j * m + l)] = std::move(prod);
          }
        }
      }
    }
  } else {
    left_dim_ = n;
    right_dim_ = n;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar e = b.counit(words[j]);
      if (!e.is_zero()) unit_.add_term({j, 0}, e);
    }
    products_.resize(dimension() * dimension());
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t i = 0; i < n; ++i) {
        const TensorPoly di = b.delta(words[i]);
        for (std::size_t l = 0; l < n; ++l) {
          for (std::size_t j = 0; j < n; ++j) {
            SmashElement prod;
            for (const auto& [t, c] : di) {
              const DualVector left = convolve_op(b, dual_basis(p), harpoon(b, t.second, dual_basis(l)));
              const SparseVector right = word_vector(b.multiply(t.first, words[j]));
              for (const auto& [lp, cl] : left) {
                for (const auto& [rj, cr] : right) prod.add_term({lp, rj}, c * cl * cr);
              }
            }
            products_[(p * n + i) * dimension() + (l * n + j)] = std::move(prod);
          }
        }
      }
    }
  }
}

SmashAlgebra SmashAlgebra::semidirect(const OslashSpace& os) { return SmashAlgebra(os, SmashKind::semidirect); }
SmashAlgebra SmashAlgebra::psi_smash(const OslashSpace& os) { return SmashAlgebra(os, SmashKind::psi_smash); }

SmashElement SmashAlgebra::multiply(const SmashElement& a, const SmashElement& b) const {
  SmashElement out;
  for (const auto& [ka, ca] : a) {
    const std::size_t ia = ka.first * right_dim_ + ka.second;
    for (const auto& [kb, cb] : b) {
      const std::size_t ib = kb.first * right_dim_ + kb.second;
      out.add_scaled(products_.at(ia * dimension() + ib), ca * cb);
    }
  }
  return out;
}

std::string SmashAlgebra::format(const SmashElement& e) const {
  if (e.is_zero()) return "0";
  const Presentation& b = os_->presentation();
  const Alphabet& a = b.alphabet();
  const std::vector<Word> words = b.full_basis();
  std::string out;
  for (const auto& [k, c] : e) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") ";
    if (kind_ == SmashKind::semidirect) {
      out += a.format(words[k.first]) + " x| e^" + std::to_string(k.second);
    } else {
      out += "e_" + a.format(words[k.first]) + " # " + a.format(words[k.second]);
    }
  }
  return out;
}

SmashElement xi(const OslashSpace& os, const SmashElement& e) {
  const Presentation& b = os.presentation();
  const std::vector<Word> words = b.full_basis();
  const auto index = index_words(words);
  SmashElement out;
  for (const auto& [key, c] : e) {
    const DualVector chi_f = chi(os, OslashFunctional{SparseVector(key.second)});
    for (const auto& [t, ct] : b.delta(words[key.first])) {
      const DualVector acted = harpoon(b, t.second, chi_f);
      for (const auto& [j, cj] : acted) out.add_term({j, index.at(t.first)}, c * ct * cj);
    }
  }
  return out;
}

SmashReport smash_products(const OslashSpace& os, std::size_t samples, std::uint64_t seed) {
  const Presentation& b = os.presentation();
  const Alphabet& a = b.alphabet();
  const std::vector<Word> words = b.full_basis();
  const auto index = index_words(words);
  const std::size_t n = words.size();
  const SmashAlgebra semi = SmashAlgebra::semidirect(os);
  const SmashAlgebra psi = SmashAlgebra::psi_smash(os);
  SmashReport rep;

  auto basis_element = [](const SmashAlgebra& alg, std::size_t i) {
    const std::size_t cols = alg.shape().second;
    return SmashElement({i / cols, i % cols});
  };

  auto check_unit = [&](const SmashAlgebra& alg, const std::string& name) {
    bool ok = true;
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
      const SmashElement e = basis_element(alg, i);
      if (alg.multiply(alg.unit(), e) != e || alg.multiply(e, alg.unit()) != e) {
        ok = false;
        rep.failures.push_back(name + ": the unit fails on " + alg.format(e));
        break;
      }
    }
    return ok;
  };
  rep.semidirect_unit = check_unit(semi, "semidirect");
  rep.psi_unit = check_unit(psi, "psi smash");

  std::mt19937_64 rng(seed);
  auto check_assoc = [&](const SmashAlgebra& alg, const std::string& name) {
    std::uniform_int_distribution<std::size_t> pick(0, alg.dimension() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      const SmashElement x = basis_element(alg, pick(rng));
      const SmashElement y = basis_element(alg, pick(rng));
      const SmashElement z = basis_element(alg, pick(rng));
      if (alg.multiply(alg.multiply(x, y), z) != alg.multiply(x, alg.multiply(y, z))) {
        rep.failures.push_back(name + ": (xy)z != x(yz) for " + alg.format(x) + ", " + alg.format(y) + ", " +
                               alg.format(z));
        return false;
      }
    }
    return true;
  };
  rep.semidirect_associative = check_assoc(semi, "semidirect");
  rep.psi_associative = check_assoc(psi, "psi smash");
  rep.triples_checked = 2 * samples;

  // psi(x (x) phi) = (x2 -> phi) (x) x1 with keys (dual index, word index).
  auto psi_map = [&](const Word& x, const DualVector& phi) {
    SmashElement out;
    for (const auto& [t, c] : b.delta(x)) out += scaled_pairs(harpoon(b, t.second, phi), index.at(t.first), c, true);
    return out;
  };
  DualVector eps;
  for (std::size_t j = 0; j < n; ++j) eps.set(j, b.counit(words[j]));

  rep.tambara = true;
  auto tambara_fail = [&](const std::string& what) {
    rep.tambara = false;
    if (rep.failures.size() < 20) rep.failures.push_back("psi: " + what);
  };
  for (std::size_t j = 0; j < n; ++j) {
    ++rep.tambara_checked;
    if (psi_map(Word{}, dual_basis(j)) != SmashElement({j, 0})) tambara_fail("psi(1 (x) e_j) != e_j (x) 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    ++rep.tambara_checked;
    if (psi_map(words[i], eps) != scaled_pairs(eps, i, Scalar(1), true)) {
      tambara_fail("psi(" + a.format(words[i]) + " (x) eps) != eps (x) " + a.format(words[i]));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t j = 0; j < n; ++j) {
        ++rep.tambara_checked;
        // psi(xy (x) phi) = (A (x) m)(psi (x) B)(x (x) psi(y (x) phi))
        SmashElement lhs;
        for (const auto& [w, c] : b.multiply(words[x], words[y])) lhs.add_scaled(psi_map(w, dual_basis(j)), c);
        SmashElement rhs;
        for (const auto& [k, c] : psi_map(words[y], dual_basis(j))) {
          for (const auto& [k2, c2] : psi_map(words[x], dual_basis(k.first))) {
            for (const auto& [w, cw] : b.multiply(words[k2.second], words[k.second])) {
              rhs.add_term({k2.first, index.at(w)}, c * c2 * cw);
            }
          }
        }
        if (lhs != rhs) tambara_fail("multiplicativity in B fails at (" + a.format(words[x]) + ", " + a.format(words[y]) + ")");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        ++rep.tambara_checked;
        // psi(x (x) phi *op phi') = (m (x) B)(A (x) psi)(psi(x (x) phi) (x) phi')
        const SmashElement lhs = psi_map(words[x], convolve_op(b, dual_basis(j), dual_basis(l)));
        SmashElement rhs;
        for (const auto& [k, c] : psi_map(words[x], dual_basis(j))) {
          for (const auto& [k2, c2] : psi_map(words[k.second], dual_basis(l))) {
            const DualVector prod = convolve_op(b, dual_basis(k.first), dual_basis(k2.first));
            for (const auto& [p, cp] : prod) rhs.add_term({p, k2.second}, c * c2 * cp);
          }
        }
        if (lhs != rhs) tambara_fail("multiplicativity in B*op fails at " + a.format(words[x]));
      }
    }
  }

  rep.chi_algebra_map = true;
  const std::size_t m = os.dimension();
  for (std::size_t k = 0; k < m && rep.chi_algebra_map; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      const OslashFunctional f{SparseVector(k)}, g{SparseVector(l)};
      if (chi(os, convolve(os, f, g)) != convolve_op(b, chi(os, f), chi(os, g))) {
        rep.chi_algebra_map = false;
        rep.failures.push_back("chi(f * g) != chi(f) *op chi(g) for dual cosets " + std::to_string(k) + ", " +
                               std::to_string(l));
        break;
      }
    }
  }

  rep.xi_unital = xi(os, semi.unit()) == psi.unit();
  if (!rep.xi_unital) rep.failures.push_back("xi(1 x| eps) = " + psi.format(xi(os, semi.unit())));
  rep.xi_multiplicative = true;
  for (std::size_t i = 0; i < semi.dimension(); ++i) {
    const SmashElement u = basis_element(semi, i);
    const SmashElement xu = xi(os, u);
    for (std::size_t j = 0; j < semi.dimension(); ++j) {
      ++rep.xi_pairs_checked;
      const SmashElement v = basis_element(semi, j);
      if (xi(os, semi.multiply(u, v)) != psi.multiply(xu, xi(os, v))) {
        if (rep.xi_multiplicative) {
          rep.failures.push_back("xi(uv) != xi(u) xi(v) for u = " + semi.format(u) + ", v = " + semi.format(v));
        }
        rep.xi_multiplicative = false;
      }
    }
  }
  return rep;
}

}  // namespace bialint

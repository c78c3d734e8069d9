#include "bialint/oslash.hpp"

#include <algorithm>
#include <sstream>

#include "bialint/errors.hpp"

namespace bialint {

namespace {

struct PairOrder {
  const Presentation* b;
  bool operator()(const TensorKey& p, const TensorKey& q) const {
    const int dp = b->degree(p.first) + b->degree(p.second);
    const int dq = b->degree(q.first) + b->degree(q.second);
    if (dp != dq) return dp < dq;
    return p < q;
  }
};

// True when every rule keeps the degree, so products add degrees exactly.
bool degree_additive(const Presentation& b) {
  if (b.backend() != Backend::free_algebra) return false;
  for (const Rule& r : b.rules().rules()) {
    const int d = b.degree(r.lhs);
    for (const auto& [w, c] : r.rhs) {
      if (b.degree(w) != d) return false;
    }
  }
  return true;
}

int max_total_degree(const Presentation& b, const TensorPoly& t) {
  int d = 0;
  for (const auto& [k, c] : t) d = std::max(d, b.degree(k.first) + b.degree(k.second));
  return d;
}

}  // namespace

OslashSpace OslashSpace::build(const Presentation& b, const OslashOptions& options) {
  OslashSpace os(b);
  if (b.finite_dimensional()) {
    os.construct(0, 0, true);
    return os;
  }
  if (options.degree < 0 || options.slack < 0) throw PreconditionError("degree and slack must be non-negative");
  os.construct(options.degree, options.slack, false);
  if (options.check_stability) {
    OslashSpace wider(b);
    wider.construct(options.degree, options.slack + 1, false);
    const auto mine = os.dimensions_per_degree();
    const auto theirs = wider.dimensions_per_degree();
    for (int d = 0; d <= options.degree; ++d) {
      if (mine[static_cast<std::size_t>(d)] != theirs[static_cast<std::size_t>(d)]) os.stable_ = false;
    }
  }
  return os;
}

void OslashSpace::construct(int degree, int slack, bool exact) {
  exact_ = exact;
  std::vector<Word> basis;
  if (exact) {
    basis = b_.full_basis();
    const int top = b_.top_degree();
    degree_ = 2 * top;
    slack_ = 0;
    window_ = 2 * top;
  } else {
    degree_ = degree;
    slack_ = slack;
    window_ = degree + slack;
    basis = b_.basis(window_);
  }

  for (const Word& u : basis) {
    for (const Word& v : basis) {
      if (b_.degree(u) + b_.degree(v) <= window_) pairs_.emplace_back(u, v);
    }
  }
  std::sort(pairs_.begin(), pairs_.end(), PairOrder{&b_});
  for (std::size_t i = 0; i < pairs_.size(); ++i) pair_index_.emplace(pairs_[i], i);

  const bool additive = degree_additive(b_);
  std::vector<std::pair<Word, TensorPoly>> generators;
  for (const Word& m : basis) {
    if (m.empty()) continue;
    TensorPoly rel = b_.delta(m);
    rel.add_term({Word{}, Word{}}, -b_.counit(m));
    if (rel.is_zero()) continue;
    generators.emplace_back(m, std::move(rel));
  }

  for (const auto& [m, rel] : generators) {
    const int top = max_total_degree(b_, rel);
    for (const Word& u : basis) {
      for (const Word& v : basis) {
        const int base = b_.degree(u) + b_.degree(v);
        if (!exact && additive && base + top > window_) continue;
        if (!exact && base > window_) continue;
        const TensorPoly t = b_.multiply(TensorPoly(TensorKey{u, v}), rel);
        SparseVector row;
        bool fits = true;
        for (const auto& [k, c] : t) {
          auto it = pair_index_.find(k);
          if (it == pair_index_.end()) {
            fits = false;
            break;
          }
          row.add_term(it->second, c);
        }
        if (fits && !row.is_zero()) relations_.insert(std::move(row));
      }
    }
  }
  relations_.reduce_rows();

  canonical_of_pair_.assign(pairs_.size(), -1);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (relations_.is_pivot(i)) continue;
    canonical_of_pair_[i] = static_cast<std::ptrdiff_t>(canonical_.size());
    canonical_.push_back(pairs_[i]);
    canonical_degree_.push_back(b_.degree(pairs_[i].first) + b_.degree(pairs_[i].second));
  }
  if (canonical_.empty() || !canonical_.front().first.empty() || !canonical_.front().second.empty()) {
    throw InternalConsistencyError("1 (/) 1 is not a canonical basis element");
  }
}

std::vector<std::size_t> OslashSpace::dimensions_per_degree() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(window_) + 1, 0);
  for (int d : canonical_degree_) ++out[static_cast<std::size_t>(d)];
  return out;
}

std::size_t OslashSpace::dimension_up_to(int d) const {
  return static_cast<std::size_t>(
      std::count_if(canonical_degree_.begin(), canonical_degree_.end(), [d](int x) { return x <= d; }));
}

std::optional<std::size_t> OslashSpace::index_of(const TensorKey& pair) const {
  auto it = pair_index_.find(pair);
  if (it == pair_index_.end() || canonical_of_pair_[it->second] < 0) return std::nullopt;
  return static_cast<std::size_t>(canonical_of_pair_[it->second]);
}

SparseVector OslashSpace::pair_vector(const TensorPoly& t) const {
  SparseVector v;
  for (const auto& [k, c] : b_.reduce(t)) {
    auto it = pair_index_.find(k);
    if (it == pair_index_.end()) {
      const int d = b_.degree(k.first) + b_.degree(k.second);
      const std::string pair = b_.alphabet().format(k.first) + " (x) " + b_.alphabet().format(k.second);
      if (d > window_) {
        throw WindowOverflow("tensor pair " + pair + " of degree " + std::to_string(d) + " is outside the window " +
                             std::to_string(window_));
      }
      throw InternalConsistencyError("tensor pair " + pair + " is missing from the index");
    }
    v.add_term(it->second, c);
  }
  return v;
}

OslashElement OslashSpace::reduce(const TensorPoly& t) const {
  const SparseVector r = relations_.reduce(pair_vector(t));
  OslashElement out;
  for (const auto& [col, c] : r) {
    const std::ptrdiff_t idx = canonical_of_pair_[col];
    if (idx < 0) throw InternalConsistencyError("reduction left a pivot column");
    out.add_term(static_cast<std::size_t>(idx), c);
  }
  return out;
}

OslashElement OslashSpace::reduce_pair(const Word& x, const Word& y) const {
  auto it = pair_index_.find(TensorKey{x, y});
  if (it != pair_index_.end() && canonical_of_pair_[it->second] >= 0) {
    return OslashElement(static_cast<std::size_t>(canonical_of_pair_[it->second]));
  }
  return reduce(TensorPoly(TensorKey{x, y}));
}

TensorPoly OslashSpace::lift(const OslashElement& e) const {
  TensorPoly out;
  for (const auto& [idx, c] : e) out.add_term(canonical_.at(idx), c);
  return out;
}

std::vector<TensorPoly> OslashSpace::relation_tensors() const {
  std::vector<TensorPoly> out;
  for (const SparseVector& row : relations_.rows()) {
    TensorPoly t;
    for (const auto& [col, c] : row) t.add_term(pairs_[col], c);
    out.push_back(std::move(t));
  }
  return out;
}

std::string OslashSpace::format(const OslashElement& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  const Alphabet& a = b_.alphabet();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const Scalar& c = it->second;
    const Scalar mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.to_string() + " ";
    const TensorKey& k = canonical_[it->first];
    out += a.format(k.first) + " (/) " + a.format(k.second);
  }
  return out;
}

OslashElement map_iB(const OslashSpace& os, const NcPoly& b) { return os.reduce(tensor(b, NcPoly(Word{}))); }

namespace {

std::vector<Word> trusted_basis(const OslashSpace& os) {
  return os.exact() ? os.presentation().full_basis() : os.presentation().basis(os.degree());
}

}  // namespace

std::vector<NcPoly> kernel_iB(const OslashSpace& os) {
  const std::vector<Word> words = trusted_basis(os);
  std::map<std::size_t, SparseVector> equations;
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (const auto& [k, c] : map_iB(os, NcPoly(words[j]))) equations[k].add_term(j, c);
  }
  std::vector<SparseVector> eqs;
  for (auto& kv : equations) eqs.push_back(std::move(kv.second));
  std::vector<SparseVector> kernel = echelon_basis(nullspace(eqs, words.size()), PivotRule::greatest);
  std::vector<NcPoly> out;
  for (const SparseVector& v : kernel) {
    NcPoly p;
    for (const auto& [j, c] : v) p.add_term(words[j], c);
    out.push_back(std::move(p));
  }
  return out;
}

IBProbe probe_iB(const OslashSpace& os) {
  IBProbe probe;
  const Presentation& b = os.presentation();
  probe.injective = kernel_iB(os).empty();

  const std::vector<Word> sources = os.exact() ? b.full_basis() : b.basis(os.window());
  std::vector<SparseVector> images;
  Echelon span(PivotRule::least);
  for (const Word& w : sources) {
    images.push_back(map_iB(os, NcPoly(w)));
    span.insert(images.back());
  }
  probe.surjective = true;
  for (std::size_t k = 0; k < os.dimension(); ++k) {
    if (!os.exact() && os.filtration_degree(k) > os.degree()) continue;
    if (!span.reduce(SparseVector(k)).is_zero()) {
      probe.surjective = false;
      const TensorKey& rep = os.representative(k);
      probe.note = b.alphabet().format(rep.first) + " (/) " + b.alphabet().format(rep.second) +
                   " is not in the image of i_B";
      break;
    }
  }
  if (!probe.surjective) return probe;

  // Transpose once: equation k reads sum_j c_j i_B(w_j)[k] = target[k].
  std::map<std::size_t, SparseVector> rows;
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (const auto& [k, c] : images[j]) rows[k].add_term(j, c);
  }
  for (const Word& y : trusted_basis(os)) {
    const OslashElement target = os.reduce_pair(Word{}, y);
    std::vector<SparseVector> eqs;
    std::vector<Scalar> rhs;
    for (const auto& [k, row] : rows) {
      eqs.push_back(row);
      rhs.push_back(target.coefficient(k));
    }
    for (const auto& [k, c] : target) {
      if (!rows.count(k)) throw InternalConsistencyError("image of i_B misses a coordinate it should span");
    }
    auto solution = solve_linear(eqs, rhs, sources.size());
    if (!solution) throw InternalConsistencyError("surjective i_B without a preimage");
    NcPoly s;
    for (const auto& [j, c] : *solution) s.add_term(sources[j], c);
    probe.section.emplace(y, std::move(s));
  }
  return probe;
}

OslashTensor oslash_comult(const OslashSpace& os, const OslashElement& e) {
  const Presentation& b = os.presentation();
  OslashTensor out;
  for (const auto& [idx, c] : e) {
    const TensorKey& rep = os.representative(idx);
    const TensorPoly dx = b.delta(rep.first);
    const TensorPoly dy = b.delta(rep.second);
    for (const auto& [kx, cx] : dx) {
      for (const auto& [ky, cy] : dy) {
        const OslashElement left = os.reduce_pair(kx.first, ky.second);
        const OslashElement right = os.reduce_pair(kx.second, ky.first);
        const Scalar coef = c * cx * cy;
        for (const auto& [l, cl] : left) {
          for (const auto& [r, cr] : right) out.add_term({l, r}, coef * cl * cr);
        }
      }
    }
  }
  return out;
}

Scalar oslash_counit(const OslashSpace& os, const OslashElement& e) {
  const Presentation& b = os.presentation();
  Scalar r(0);
  for (const auto& [idx, c] : e) {
    const TensorKey& rep = os.representative(idx);
    r += c * b.counit(rep.first) * b.counit(rep.second);
  }
  return r;
}

NcPoly apply_generator_map(const GeneratorMap& f, const Presentation& target, const Word& w) {
  NcPoly out(Word{});
  for (Letter g : w) {
    auto it = f.images.find(g);
    if (it == f.images.end()) throw MalformedInput("generator map has no image for generator " + std::to_string(g));
    out = target.multiply(out, it->second);
  }
  return out;
}

namespace {

NcPoly apply_map(const GeneratorMap& f, const Presentation& target, const NcPoly& p) {
  NcPoly out;
  for (const auto& [w, c] : p) out.add_scaled(apply_generator_map(f, target, w), c);
  return out;
}

}  // namespace

NcPoly FHat::apply(const OslashElement& e) const {
  NcPoly out;
  for (const auto& [idx, c] : e) out.add_scaled(images.at(idx), c);
  return out;
}

FHat build_fhat(const OslashSpace& os, const Presentation& target, const GeneratorMap& f) {
  const Presentation& b = os.presentation();
  if (!target.has_antipode()) throw PreconditionError("target " + target.name() + " has no antipode");
  const Alphabet& ab = b.alphabet();

  // f must be a bialgebra map on the trusted window.
  const std::vector<Word> words = trusted_basis(os);
  for (const Word& u : words) {
    const NcPoly fu = apply_generator_map(f, target, u);
    const TensorPoly lhs = target.delta(fu);
    TensorPoly rhs;
    for (const auto& [k, c] : b.delta(u)) {
      rhs.add_scaled(tensor(apply_generator_map(f, target, k.first), apply_generator_map(f, target, k.second)), c);
    }
    if (target.reduce(lhs) != target.reduce(rhs)) {
      throw ValidationError("f does not commute with the coproduct on " + ab.format(u));
    }
    if (target.counit(fu) != b.counit(u)) throw ValidationError("f does not preserve the counit on " + ab.format(u));
    for (const Word& v : words) {
      if (!os.exact() && b.degree(u) + b.degree(v) > os.degree()) continue;
      if (apply_map(f, target, b.multiply(u, v)) != target.multiply(fu, apply_generator_map(f, target, v))) {
        throw ValidationError("f is not multiplicative on " + ab.format(u) + " * " + ab.format(v));
      }
    }
  }
  if (b.backend() == Backend::free_algebra) {
    for (const Rule& r : b.rules().rules()) {
      if (apply_generator_map(f, target, r.lhs) != apply_map(f, target, r.rhs)) {
        throw ValidationError("f does not respect the rule " + format_rule(r, ab));
      }
    }
  }

  FHat fhat;
  auto image_of_pair = [&](const Word& x, const Word& y) {
    return target.multiply(apply_generator_map(f, target, x), target.antipode(apply_generator_map(f, target, y)));
  };
  for (const TensorKey& rep : os.canonical_basis()) fhat.images.push_back(image_of_pair(rep.first, rep.second));

  fhat.well_defined = true;
  for (const TensorPoly& rel : os.relation_tensors()) {
    NcPoly total;
    for (const auto& [k, c] : rel) total.add_scaled(image_of_pair(k.first, k.second), c);
    if (!total.is_zero()) {
      fhat.well_defined = false;
      fhat.note = "f^ does not vanish on the relation " + format_tensor(rel, ab);
      return fhat;
    }
  }

  // Rank check: images of trusted cosets must be independent and span the
  // target words of the same degrees.
  std::map<Word, std::size_t> index;
  auto to_vector = [&](const NcPoly& p) {
    SparseVector v;
    for (const auto& [w, c] : p) v.add_term(index.try_emplace(w, index.size()).first->second, c);
    return v;
  };
  Echelon span(PivotRule::least);
  std::size_t trusted = 0;
  bool independent = true;
  for (std::size_t i = 0; i < os.dimension(); ++i) {
    if (!os.exact() && os.filtration_degree(i) > os.degree()) continue;
    ++trusted;
    if (!span.insert(to_vector(fhat.images[i]))) independent = false;
  }
  bool spanning = true;
  const std::vector<Word> target_words =
      os.exact() ? (target.finite_dimensional() ? target.full_basis() : std::vector<Word>{}) : target.basis(os.degree());
  if (os.exact() && !target.finite_dimensional()) spanning = false;
  for (const Word& w : target_words) {
    if (!span.reduce(to_vector(NcPoly(w))).is_zero()) {
      spanning = false;
      fhat.note = "target word " + target.alphabet().format(w) + " is not in the image";
      break;
    }
  }
  if (!independent) fhat.note = "images of the " + std::to_string(trusted) + " trusted cosets are dependent";
  fhat.bijective = independent && spanning;
  return fhat;
}

std::string oslash_report(const OslashSpace& os) {
  const Presentation& b = os.presentation();
  std::ostringstream out;
  out << "B (/) B for " << b.name() << "\n";
  if (os.exact()) {
    out << "mode: exact\n";
  } else {
    out << "mode: windowed, degree " << os.degree() << ", slack " << os.slack() << ", window " << os.window() << "\n";
    out << "stable: " << (os.stable() ? "yes" : "no") << "\n";
  }
  out << "tensor pairs: " << os.num_pairs() << ", independent relations: " << os.num_relations() << "\n";
  out << "dimension: " << os.dimension() << "\n";
  const auto dims = os.dimensions_per_degree();
  out << "dimensions per degree:";
  for (std::size_t d = 0; d < dims.size(); ++d) out << " " << dims[d];
  out << "\n";
  out << "basis:\n";
  const Alphabet& a = b.alphabet();
  for (std::size_t i = 0; i < os.dimension(); ++i) {
    if (!os.exact() && os.filtration_degree(i) > os.degree()) continue;
    const TensorKey& k = os.representative(i);
    out << "  " << a.format(k.first) << " (/) " << a.format(k.second) << "\n";
  }
  return out.str();
}

}  // namespace bialint

#include "bialint/presentation.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "bialint/errors.hpp"

namespace bialint {

struct Presentation::Cache {
  std::mutex mutex;
  std::map<TensorKey, NcPoly> products;
  std::map<Word, TensorPoly> coproducts;
  std::map<int, std::vector<Word>> bases;
  bool finiteness_known = false;
  std::optional<int> top_degree;
};

namespace {

constexpr std::size_t kMaxProbeLength = 32;
constexpr std::size_t kMaxProbeWords = 20000;

void check_letters(const Word& w, const Alphabet& a, const std::string& where) {
  for (Letter g : w) {
    if (g >= a.size()) throw MalformedInput(where + ": unknown generator index " + std::to_string(g));
  }
}

}  // namespace

Presentation::Presentation(PresentationData data) : data_(std::move(data)), cache_(std::make_shared<Cache>()) {
  const Alphabet& a = data_.alphabet;
  const std::size_t n = a.size();
  if (data_.backend == Backend::free_algebra) {
    if (data_.rules.order().num_generators() == 0 && data_.rules.rules().empty()) {
      data_.rules = ReductionSystem({}, MonomialOrder::deglex(n));
    }
    if (data_.rules.order().num_generators() != n) throw MalformedInput("order does not match the generators");
    order_ = data_.rules.order();
    for (const Rule& r : data_.rules.rules()) {
      check_letters(r.lhs, a, "rule");
      for (const auto& [w, c] : r.rhs) check_letters(w, a, "rule");
    }
    for (Letter g = 0; g < n; ++g) {
      if (!data_.delta.count(g)) throw MalformedInput("no coproduct for generator " + a.name(g));
      if (!data_.counit.count(g)) throw MalformedInput("no counit for generator " + a.name(g));
    }
    for (const auto& [g, t] : data_.delta) {
      if (g >= n) throw MalformedInput("coproduct of an unknown generator");
      for (const auto& [k, c] : t) {
        check_letters(k.first, a, "coproduct");
        check_letters(k.second, a, "coproduct");
      }
    }
    for (const auto& [g, c] : data_.counit) {
      if (g >= n) throw MalformedInput("counit of an unknown generator");
    }
    for (const auto& [g, s] : data_.antipode) {
      if (g >= n) throw MalformedInput("antipode of an unknown generator");
      for (const auto& [w, c] : s) check_letters(w, a, "antipode");
    }
    return;
  }

  order_ = MonomialOrder::deglex(n);
  std::sort(data_.basis.begin(), data_.basis.end());
  if (std::adjacent_find(data_.basis.begin(), data_.basis.end()) != data_.basis.end()) {
    throw MalformedInput("repeated basis word");
  }
  if (data_.basis.empty() || !data_.basis.front().empty()) throw MalformedInput("basis must contain the unit 1");
  auto in_basis = [&](const Word& w) { return std::binary_search(data_.basis.begin(), data_.basis.end(), w); };
  auto check_poly = [&](const NcPoly& p, const std::string& where) {
    for (const auto& [w, c] : p) {
      if (!in_basis(w)) throw MalformedInput(where + ": " + a.format(w) + " is not a basis word");
    }
  };
  for (const Word& w : data_.basis) check_letters(w, a, "basis");
  for (const auto& [k, p] : data_.mult) {
    if (!in_basis(k.first) || !in_basis(k.second)) throw MalformedInput("product of non-basis words");
    check_poly(p, "product");
  }
  for (const auto& [w, t] : data_.basis_delta) {
    if (!in_basis(w)) throw MalformedInput("coproduct of non-basis word " + a.format(w));
    for (const auto& [k, c] : t) {
      if (!in_basis(k.first) || !in_basis(k.second)) throw MalformedInput("coproduct: non-basis word");
    }
  }
  for (const auto& [w, c] : data_.basis_counit) {
    if (!in_basis(w)) throw MalformedInput("counit of non-basis word " + a.format(w));
  }
  for (const auto& [w, s] : data_.basis_antipode) {
    if (!in_basis(w)) throw MalformedInput("antipode of non-basis word " + a.format(w));
    check_poly(s, "antipode");
  }
  for (const Word& w : data_.basis) {
    if (!w.empty() && !data_.basis_delta.count(w)) throw MalformedInput("no coproduct for basis word " + a.format(w));
  }
}

int Presentation::degree(const NcPoly& p) const {
  int d = -1;
  for (const auto& [w, c] : p) d = std::max(d, degree(w));
  return d;
}

bool Presentation::is_basis_word(const Word& w) const {
  if (data_.backend == Backend::free_algebra) {
    for (Letter g : w) {
      if (g >= data_.alphabet.size()) return false;
    }
    return data_.rules.is_irreducible(w);
  }
  return std::binary_search(data_.basis.begin(), data_.basis.end(), w);
}

NcPoly Presentation::reduce(const NcPoly& p) const {
  if (data_.backend == Backend::free_algebra) return data_.rules.normal_form(p);
  for (const auto& [w, c] : p) {
    if (!is_basis_word(w)) throw MalformedInput(data_.alphabet.format(w) + " is not a basis word");
  }
  return p;
}

TensorPoly Presentation::reduce(const TensorPoly& t) const {
  TensorPoly out;
  for (const auto& [k, c] : t) out.add_scaled(tensor(reduce(NcPoly(k.first)), reduce(NcPoly(k.second))), c);
  return out;
}

NcPoly Presentation::multiply(const Word& a, const Word& b) const {
  if (a.empty()) return reduce(NcPoly(b));
  if (b.empty()) return reduce(NcPoly(a));
  const TensorKey key{a, b};
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->products.find(key);
    if (it != cache_->products.end()) return it->second;
  }
  NcPoly result;
  if (data_.backend == Backend::free_algebra) {
    result = data_.rules.normal_form(a * b);
  } else {
    if (!is_basis_word(a) || !is_basis_word(b)) throw MalformedInput("product of non-basis words");
    auto it = data_.mult.find(key);
    if (it != data_.mult.end()) result = it->second;
  }
  std::lock_guard lock(cache_->mutex);
  cache_->products.emplace(key, result);
  return result;
}

NcPoly Presentation::multiply(const NcPoly& a, const NcPoly& b) const {
  NcPoly out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) out.add_scaled(multiply(u, v), cu * cv);
  }
  return out;
}

TensorPoly Presentation::multiply(const TensorPoly& a, const TensorPoly& b) const {
  TensorPoly out;
  for (const auto& [k1, c1] : a) {
    for (const auto& [k2, c2] : b) {
      out.add_scaled(tensor(multiply(k1.first, k2.first), multiply(k1.second, k2.second)), c1 * c2);
    }
  }
  return out;
}

TensorPoly Presentation::delta(const Word& w) const {
  if (w.empty()) return TensorPoly(TensorKey{Word{}, Word{}});
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->coproducts.find(w);
    if (it != cache_->coproducts.end()) return it->second;
  }
  TensorPoly result;
  if (data_.backend == Backend::free_algebra) {
    const Letter last = w[w.size() - 1];
    if (last >= data_.alphabet.size()) throw MalformedInput("unknown generator index");
    const TensorPoly& dg = data_.delta.at(last);
    result = w.size() == 1 ? reduce(dg) : multiply(delta(w.prefix(w.size() - 1)), dg);
  } else {
    if (!is_basis_word(w)) throw MalformedInput(data_.alphabet.format(w) + " is not a basis word");
    result = data_.basis_delta.at(w);
  }
  std::lock_guard lock(cache_->mutex);
  cache_->coproducts.emplace(w, result);
  return result;
}

TensorPoly Presentation::delta(const NcPoly& p) const {
  TensorPoly out;
  for (const auto& [w, c] : p) out.add_scaled(delta(w), c);
  return out;
}

Scalar Presentation::counit(const Word& w) const {
  if (data_.backend == Backend::free_algebra) {
    Scalar r(1);
    for (Letter g : w) {
      auto it = data_.counit.find(g);
      if (it == data_.counit.end()) throw MalformedInput("unknown generator index");
      r *= it->second;
    }
    return r;
  }
  if (w.empty()) return Scalar(1);
  if (!is_basis_word(w)) throw MalformedInput(data_.alphabet.format(w) + " is not a basis word");
  auto it = data_.basis_counit.find(w);
  return it == data_.basis_counit.end() ? Scalar(0) : it->second;
}

Scalar Presentation::counit(const NcPoly& p) const {
  Scalar r(0);
  for (const auto& [w, c] : p) r += c * counit(w);
  return r;
}

bool Presentation::has_antipode() const {
  if (data_.backend == Backend::free_algebra) return data_.antipode.size() == data_.alphabet.size();
  return !data_.basis_antipode.empty() || data_.basis.size() == 1;
}

NcPoly Presentation::antipode(const Word& w) const {
  if (!has_antipode()) throw PreconditionError(data_.name + " has no declared antipode");
  if (w.empty()) return NcPoly(Word{});
  if (data_.backend == Backend::free_algebra) {
    NcPoly out(Word{});
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out = multiply(out, data_.antipode.at(*it));
    }
    return out;
  }
  if (!is_basis_word(w)) throw MalformedInput(data_.alphabet.format(w) + " is not a basis word");
  auto it = data_.basis_antipode.find(w);
  return it == data_.basis_antipode.end() ? NcPoly() : it->second;
}

NcPoly Presentation::antipode(const NcPoly& p) const {
  NcPoly out;
  for (const auto& [w, c] : p) out.add_scaled(antipode(w), c);
  return out;
}

std::vector<Word> Presentation::basis(int max_degree) const {
  if (max_degree < 0) return {};
  if (data_.backend == Backend::structure_constants) {
    std::vector<Word> out;
    for (const Word& w : data_.basis) {
      if (degree(w) <= max_degree) out.push_back(w);
    }
    return out;
  }
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(max_degree);
    if (it != cache_->bases.end()) return it->second;
  }
  // Subwords of irreducible words are irreducible, so it is enough to extend
  // irreducible words and test the rules that end at the new letter.
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int base = degree(out[i]);
    for (Letter g = 0; g < data_.alphabet.size(); ++g) {
      if (base + order_.weight(g) > max_degree) continue;
      Word next = out[i] * Word::letter(g);
      bool reducible = false;
      for (const Rule& r : data_.rules.rules()) {
        if (r.lhs.size() <= next.size() && next.matches_at(r.lhs, next.size() - r.lhs.size())) {
          reducible = true;
          break;
        }
      }
      if (!reducible) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  std::lock_guard lock(cache_->mutex);
  cache_->bases.emplace(max_degree, out);
  return out;
}

bool Presentation::finite_dimensional() const {
  if (data_.backend == Backend::structure_constants) return true;
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->finiteness_known) return cache_->top_degree.has_value();
  }
  std::optional<int> top;
  std::vector<Word> level{Word{}};
  std::size_t total = 1;
  int max_deg = 0;
  for (std::size_t len = 1; len <= kMaxProbeLength && total <= kMaxProbeWords; ++len) {
    std::vector<Word> next_level;
    for (const Word& w : level) {
      for (Letter g = 0; g < data_.alphabet.size(); ++g) {
        Word next = w * Word::letter(g);
        bool reducible = false;
        for (const Rule& r : data_.rules.rules()) {
          if (r.lhs.size() <= next.size() && next.matches_at(r.lhs, next.size() - r.lhs.size())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) {
          max_deg = std::max(max_deg, degree(next));
          next_level.push_back(std::move(next));
        }
      }
    }
    if (next_level.empty()) {
      top = max_deg;
      break;
    }
    total += next_level.size();
    level = std::move(next_level);
  }
  std::lock_guard lock(cache_->mutex);
  cache_->finiteness_known = true;
  cache_->top_degree = top;
  return top.has_value();
}

int Presentation::top_degree() const {
  if (!finite_dimensional()) throw UnsupportedMode(data_.name + " is not finite-dimensional");
  if (data_.backend == Backend::structure_constants) {
    int d = 0;
    for (const Word& w : data_.basis) d = std::max(d, degree(w));
    return d;
  }
  std::lock_guard lock(cache_->mutex);
  return *cache_->top_degree;
}

std::vector<Word> Presentation::full_basis() const { return basis(top_degree()); }

Tensor3Poly delta_left(const Presentation& p, const TensorPoly& t) {
  Tensor3Poly out;
  for (const auto& [k, c] : t) {
    for (const auto& [k1, c1] : p.delta(k.first)) out.add_term({k1.first, k1.second, k.second}, c * c1);
  }
  return out;
}

Tensor3Poly delta_right(const Presentation& p, const TensorPoly& t) {
  Tensor3Poly out;
  for (const auto& [k, c] : t) {
    for (const auto& [k2, c2] : p.delta(k.second)) out.add_term({k.first, k2.first, k2.second}, c * c2);
  }
  return out;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  os << (passed() ? "axioms hold" : "axioms fail") << " up to degree " << degree << " (" << checked << " checks";
  if (!passed()) os << ", " << failures.size() << " failures";
  os << ")";
  for (const AxiomFailure& f : failures) os << "\n  " << f.identity << ": " << f.witness;
  return os.str();
}

AxiomReport check_axioms(const Presentation& p, int d) {
  AxiomReport report;
  report.degree = d;
  const Alphabet& a = p.alphabet();
  auto fail = [&](std::string identity, std::string witness) {
    report.failures.push_back({std::move(identity), std::move(witness)});
  };

  if (p.backend() == Backend::free_algebra) {
    for (const Rule& r : p.rules().rules()) {
      ++report.checked;
      const TensorPoly diff = p.delta(r.lhs) - p.delta(r.rhs);
      if (!diff.is_zero()) {
        fail("bi-ideal", "delta(" + a.format(r.lhs) + ") - delta(" + format_poly(r.rhs, a) + ") reduces to " +
                             format_tensor(diff, a));
      }
      const Scalar ediff = p.counit(r.lhs) - p.counit(r.rhs);
      if (!ediff.is_zero()) {
        fail("bi-ideal", "counit(" + a.format(r.lhs) + ") - counit(" + format_poly(r.rhs, a) + ") = " +
                             ediff.to_string());
      }
    }
  }

  const std::vector<Word> basis = p.basis(d);
  for (const Word& b : basis) {
    ++report.checked;
    const TensorPoly db = p.delta(b);
    const Tensor3Poly diff = delta_left(p, db) - delta_right(p, db);
    if (!diff.is_zero()) fail("coassociativity", "fails on " + a.format(b));
    NcPoly left, right;
    for (const auto& [k, c] : db) {
      left.add_term(k.second, c * p.counit(k.first));
      right.add_term(k.first, c * p.counit(k.second));
    }
    if (left != NcPoly(b)) fail("counit", "(counit (x) id) delta(" + a.format(b) + ") = " + format_poly(left, a));
    if (right != NcPoly(b)) fail("counit", "(id (x) counit) delta(" + a.format(b) + ") = " + format_poly(right, a));
    if (p.flags().cocommutative && flip(db) != db) fail("cocommutative", "delta(" + a.format(b) + ") is not symmetric");
  }

  for (const Word& u : basis) {
    for (const Word& v : basis) {
      if (p.degree(u) + p.degree(v) > d) continue;
      ++report.checked;
      const NcPoly uv = p.multiply(u, v);
      const std::string name = a.format(u) + " * " + a.format(v);
      const TensorPoly diff = p.delta(uv) - p.multiply(p.delta(u), p.delta(v));
      if (!diff.is_zero()) fail("multiplicative coproduct", "delta(" + name + ") differs by " + format_tensor(diff, a));
      if (p.counit(uv) != p.counit(u) * p.counit(v)) fail("multiplicative counit", "counit(" + name + ")");
      if (p.flags().commutative && uv != p.multiply(v, u)) fail("commutative", name);
      if (p.backend() == Backend::structure_constants) {
        for (const Word& w : basis) {
          if (p.degree(u) + p.degree(v) + p.degree(w) > d) continue;
          if (p.multiply(uv, NcPoly(w)) != p.multiply(NcPoly(u), p.multiply(v, w))) {
            fail("associativity", name + " * " + a.format(w));
          }
        }
      }
    }
  }

  if (p.flags().finite && !p.finite_dimensional()) fail("finite", "no bound on irreducible word length was found");
  return report;
}

}  // namespace bialint

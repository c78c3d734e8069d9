#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bialint/linear_combination.hpp"
#include "bialint/rewrite.hpp"

namespace bialint {

struct BialgebraFlags {
  bool commutative = false;
  bool cocommutative = false;
  bool finite = false;

  friend bool operator==(const BialgebraFlags&, const BialgebraFlags&) = default;
};

enum class Backend {
  /// Generators, a reduction system, and coproduct/counit on generators.
  free_algebra,
  /// Finite basis of words with explicit multiplication and coproduct tables.
  structure_constants,
};

/// Raw description of a bialgebra. Presentation validates it.
struct PresentationData {
  std::string name;
  Alphabet alphabet;
  std::optional<Scalar> q;
  BialgebraFlags flags;
  Backend backend = Backend::free_algebra;

  // free_algebra backend
  ReductionSystem rules;
  std::map<Letter, TensorPoly> delta;
  std::map<Letter, Scalar> counit;
  std::map<Letter, NcPoly> antipode;

  // structure_constants backend; products, coproducts and counits of the
  // unit (the empty word) are implied and need not be listed.
  std::vector<Word> basis;
  std::map<TensorKey, NcPoly> mult;
  std::map<Word, TensorPoly> basis_delta;
  std::map<Word, Scalar> basis_counit;
  std::map<Word, NcPoly> basis_antipode;

  friend bool operator==(const PresentationData&, const PresentationData&) = default;
};

/// A bialgebra with a basis of words.
///
/// Both backends expose the same operations on basis words: products,
/// coproducts and counits come back expressed in basis words again. For the
/// free-algebra backend the basis is the set of irreducible words; the
/// reduction system is expected to be confluent.
class Presentation {
 public:
  /// Throws MalformedInput when tables refer to unknown generators or
  /// non-basis words, or when a generator lacks a coproduct or counit.
  explicit Presentation(PresentationData data);

  const PresentationData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  const Alphabet& alphabet() const { return data_.alphabet; }
  Backend backend() const { return data_.backend; }
  const BialgebraFlags& flags() const { return data_.flags; }
  const std::optional<Scalar>& q() const { return data_.q; }
  const ReductionSystem& rules() const { return data_.rules; }
  const MonomialOrder& order() const { return order_; }

  int degree(const Word& w) const { return order_.degree(w); }
  /// Largest degree of a term; -1 for zero.
  int degree(const NcPoly& p) const;

  /// Rewrites to basis coordinates (normal form, or a membership check for
  /// structure constants).
  NcPoly reduce(const NcPoly& p) const;
  TensorPoly reduce(const TensorPoly& t) const;
  bool is_basis_word(const Word& w) const;

  NcPoly multiply(const Word& a, const Word& b) const;
  NcPoly multiply(const NcPoly& a, const NcPoly& b) const;
  TensorPoly multiply(const TensorPoly& a, const TensorPoly& b) const;

  /// Coproduct of a word; for the free backend the word need not be reduced.
  TensorPoly delta(const Word& w) const;
  TensorPoly delta(const NcPoly& p) const;
  Scalar counit(const Word& w) const;
  Scalar counit(const NcPoly& p) const;

  /// Declared antipode, extended anti-multiplicatively.
  bool has_antipode() const;
  NcPoly antipode(const Word& w) const;
  NcPoly antipode(const NcPoly& p) const;

  /// Basis words of degree <= max_degree in ascending order.
  std::vector<Word> basis(int max_degree) const;
  bool finite_dimensional() const;
  /// Whole basis; throws UnsupportedMode when infinite.
  std::vector<Word> full_basis() const;
  /// Largest basis degree of a finite-dimensional presentation.
  int top_degree() const;
  std::size_t dimension() const { return full_basis().size(); }

  friend bool operator==(const Presentation& a, const Presentation& b) { return a.data_ == b.data_; }

 private:
  struct Cache;

  PresentationData data_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
  std::optional<int> finite_top_;
};

/// One failed identity with a human-readable witness.
struct AxiomFailure {
  std::string identity;
  std::string witness;
};

struct AxiomReport {
  int degree = 0;
  std::size_t checked = 0;
  std::vector<AxiomFailure> failures;

  bool passed() const { return failures.empty(); }
  std::string summary() const;
};

/// Bi-ideal condition for every rule, coassociativity, counit laws,
/// multiplicativity of coproduct and counit and the declared flags, all on
/// basis words of degree <= d.
AxiomReport check_axioms(const Presentation& p, int d);

/// Basis words of degree <= d.
inline std::vector<Word> basis_window(const Presentation& p, int d) { return p.basis(d); }
inline TensorPoly delta_element(const Presentation& p, const NcPoly& x) { return p.delta(x); }
inline Scalar epsilon_element(const Presentation& p, const NcPoly& x) { return p.counit(x); }

/// (Delta (x) id) and (id (x) Delta) applied to a tensor.
Tensor3Poly delta_left(const Presentation& p, const TensorPoly& t);
Tensor3Poly delta_right(const Presentation& p, const TensorPoly& t);

}  // namespace bialint

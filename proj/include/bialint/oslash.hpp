#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bialint/linalg.hpp"
#include "bialint/presentation.hpp"

namespace bialint {

/// Coordinates of an element of B (/) B over the canonical coset basis.
using OslashElement = SparseVector;
/// Element of (B (/) B) (x) (B (/) B), keyed by pairs of canonical indices.
using OslashTensor = LinearCombination<std::pair<std::size_t, std::size_t>>;

struct OslashOptions {
  /// Degree up to which cosets are trusted.
  int degree = 5;
  /// Extra degrees of relations above `degree`.
  int slack = 2;
  /// Rebuild with slack + 1 and compare per-degree dimensions.
  bool check_stability = true;
};

/// The quotient (B (x) B) / span{(u (x) v)(Delta(m) - eps(m) 1 (x) 1)}.
///
/// Finite-dimensional B is handled exactly. Otherwise only tensor pairs of
/// total degree <= window() = degree + slack enter, a relation is kept only
/// when all its terms fit, and the result is trusted up to degree().
///
/// Relations are put in reduced row echelon form with each row led by its
/// greatest tensor pair, ordered by (total degree, left word, right word).
/// Tensor pairs that lead no row form the canonical basis, ascending.
class OslashSpace {
 public:
  /// Throws WindowOverflow if a needed tensor pair leaves the window.
  static OslashSpace build(const Presentation& b, const OslashOptions& options = {});

  const Presentation& presentation() const { return b_; }
  bool exact() const { return exact_; }
  int degree() const { return degree_; }
  int slack() const { return slack_; }
  int window() const { return window_; }
  /// Per-degree dimensions agree at slack and slack + 1 (always true when exact).
  bool stable() const { return stable_; }

  std::size_t dimension() const { return canonical_.size(); }
  /// Number of canonical cosets of each filtration degree 0..window().
  std::vector<std::size_t> dimensions_per_degree() const;
  /// Number of canonical cosets of filtration degree <= d.
  std::size_t dimension_up_to(int d) const;

  /// Canonical representatives, ascending.
  const std::vector<TensorKey>& canonical_basis() const { return canonical_; }
  const TensorKey& representative(std::size_t index) const { return canonical_.at(index); }
  int filtration_degree(std::size_t index) const { return canonical_degree_.at(index); }
  std::optional<std::size_t> index_of(const TensorKey& pair) const;
  /// Index of 1 (/) 1.
  std::size_t unit_index() const { return 0; }
  std::size_t num_relations() const { return relations_.rank(); }
  std::size_t num_pairs() const { return pairs_.size(); }

  /// Canonical coordinates of the coset of t. Throws WindowOverflow for
  /// pairs above the window.
  OslashElement reduce(const TensorPoly& t) const;
  OslashElement reduce_pair(const Word& x, const Word& y) const;
  /// Tensor representative of a coset element.
  TensorPoly lift(const OslashElement& e) const;

  /// Relation rows in the space of tensor pairs, for checking that maps
  /// vanish on them. Each row is given as a TensorPoly.
  std::vector<TensorPoly> relation_tensors() const;

  /// Text form of a coset element, e.g. "x (/) 1 - y (/) x".
  std::string format(const OslashElement& e) const;

 private:
  OslashSpace(Presentation b) : b_(std::move(b)) {}
  void construct(int degree, int slack, bool exact);
  SparseVector pair_vector(const TensorPoly& t) const;

  Presentation b_;
  bool exact_ = false;
  int degree_ = 0;
  int slack_ = 0;
  int window_ = 0;
  bool stable_ = true;
  std::vector<TensorKey> pairs_;
  std::map<TensorKey, std::size_t> pair_index_;
  Echelon relations_{PivotRule::greatest};
  std::vector<TensorKey> canonical_;
  std::vector<int> canonical_degree_;
  std::vector<std::ptrdiff_t> canonical_of_pair_;
};

/// Free-function form of OslashSpace::build.
inline OslashSpace build_oslash(const Presentation& b, int d = 5, int slack = 2) {
  return OslashSpace::build(b, OslashOptions{d, slack, true});
}

/// i_B(b) = b (/) 1.
OslashElement map_iB(const OslashSpace& os, const NcPoly& b);

/// Kernel of i_B on the basis words of degree <= os.degree() (all of B when
/// exact), in reduced echelon form with each vector led by its greatest word.
std::vector<NcPoly> kernel_iB(const OslashSpace& os);

struct IBProbe {
  bool injective = false;
  bool surjective = false;
  /// When surjective: S(y) with 1 (/) y = S(y) (/) 1 for each basis word y of
  /// degree <= os.degree(), built from the smallest possible words.
  std::map<Word, NcPoly> section;
  std::string note;
};

/// Injectivity and surjectivity of i_B on the trusted range of degrees.
IBProbe probe_iB(const OslashSpace& os);

/// Delta(x (/) y) = (x1 (/) y2) (x) (x2 (/) y1).
OslashTensor oslash_comult(const OslashSpace& os, const OslashElement& e);
/// eps(x (/) y) = eps(x) eps(y).
Scalar oslash_counit(const OslashSpace& os, const OslashElement& e);

/// A bialgebra map f: B -> target given on generators.
struct GeneratorMap {
  std::map<Letter, NcPoly> images;
};

/// Applies f to a word of B by multiplying generator images in the target.
NcPoly apply_generator_map(const GeneratorMap& f, const Presentation& target, const Word& w);

/// f^(x (/) y) = f(x) S(f(y)) with S the target antipode.
struct FHat {
  /// Image of each canonical coset.
  std::vector<NcPoly> images;
  bool well_defined = false;
  bool bijective = false;
  std::string note;

  NcPoly apply(const OslashElement& e) const;
};

/// Checks that f respects the rules of B, the coproduct and the counit, that
/// f^ vanishes on every relation, and whether f^ is bijective (per degree up
/// to os.degree() when B is infinite). Throws PreconditionError when the
/// target has no antipode and ValidationError when f is not a bialgebra map.
FHat build_fhat(const OslashSpace& os, const Presentation& target, const GeneratorMap& f);

/// Plain-text summary: dimensions, basis, stability.
std::string oslash_report(const OslashSpace& os);

}  // namespace bialint

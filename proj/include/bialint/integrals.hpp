#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bialint/oslash.hpp"

namespace bialint {

enum class IntegralMode {
  /// x1 f(x2 (/) y) (/) 1 = f(x (/) y1) y2 (/) 1 for basis pairs (x, y).
  oslash_new,
  /// u1 f(u2) = f(u) (1 (/) 1) for cosets u, with the coproduct of B (/) B.
  oslash_augmented,
  /// b1 lambda(b2) = lambda(b) 1 on B.
  classical,
  /// f(x2 (/) y z1) x1 (/) z2 = f(x (/) y1 z) y2 (/) 1 for basis triples.
  oslash_three_variable,
  /// x1 f(x2 (/) y) = f(x (/) y1) y2 as elements of B.
  oslash_in_algebra,
};

std::string to_string(IntegralMode mode);
/// Accepts "new", "augmented", "classical" and the enum names.
IntegralMode parse_integral_mode(std::string_view text);

/// Functional on B (/) B by its values on canonical cosets.
struct OslashFunctional {
  SparseVector values;

  Scalar operator()(const OslashElement& e) const { return dot(values, e); }
  Scalar at(std::size_t index) const { return values.coefficient(index); }
};

/// Functional on B by its values on basis words.
struct AlgebraFunctional {
  std::map<Word, Scalar> values;

  Scalar operator()(const NcPoly& p) const;
  Scalar at(const Word& w) const;
};

struct SolveOptions {
  /// Constraints use tensor pairs (or words) of degree <= degree.
  int degree = 5;
  /// Interior coordinates have degree <= degree - margin.
  int margin = 2;
};

/// Integrals found by solve_integrals.
///
/// Unknowns are the coordinates of degree <= degree (all coordinates when the
/// space is exact). basis is the reduced row echelon basis of the solutions
/// (earliest pivot, pivot value 1). interior_basis is the echelon basis of
/// their restrictions to coordinates of degree <= degree - margin.
struct SolutionSpace {
  IntegralMode mode = IntegralMode::oslash_new;
  bool exact = false;
  int degree = 0;
  int window = 0;
  int margin = 0;

  /// Coordinate labels, "x (/) y" for the oslash modes and words for classical.
  std::vector<std::string> labels;
  std::vector<int> coordinate_degree;
  /// Whether some constraint involved the coordinate.
  std::vector<bool> touched;
  /// Words of B for classical mode (coordinate i is words[i]).
  std::vector<Word> words;

  std::vector<SparseVector> basis;
  std::vector<SparseVector> interior_basis;
  /// Solution with value 1 at the unit coordinate, when one exists.
  std::optional<SparseVector> total_integral;
  std::size_t num_constraints = 0;

  std::size_t dimension() const { return basis.size(); }
  std::size_t interior_dimension() const { return interior_basis.size(); }
  bool is_interior(std::size_t coordinate) const {
    return exact || coordinate_degree.at(coordinate) <= degree - margin;
  }

  OslashFunctional oslash_functional(std::size_t i) const { return {basis.at(i)}; }
  AlgebraFunctional algebra_functional(std::size_t i) const;
  /// {mode, d, D, margin, dimension, interior_dimension, basis, touched, total_integral};
  /// touched is a list of [label, flag] pairs.
  std::string to_json() const;
};

/// Solves the linear integral conditions of the chosen mode.
/// Throws UnsupportedMode when the degrees exceed the space's window.
SolutionSpace solve_integrals(const OslashSpace& os, IntegralMode mode, const SolveOptions& options);
inline SolutionSpace solve_integrals(const OslashSpace& os, IntegralMode mode, int d, int margin = 2) {
  return solve_integrals(os, mode, SolveOptions{d, margin});
}

/// Evaluates the integral condition of `mode` for a candidate functional and
/// returns the residuals that do not vanish (empty when f is an integral).
std::vector<std::string> integral_residuals(const OslashSpace& os, IntegralMode mode, const OslashFunctional& f,
                                            int degree);

/// omega(f) = f o i_B on basis words of degree <= d.
AlgebraFunctional omega(const OslashSpace& os, const OslashFunctional& f, int d);

/// (f * g)(x (/) y) = f(x2 (/) y1) g(x1 (/) y2).
OslashFunctional convolve(const OslashSpace& os, const OslashFunctional& f, const OslashFunctional& g);
/// Ordinary convolution (f g)(u) = f(u1) g(u2) with the coproduct of B (/) B.
OslashFunctional convolve_plain(const OslashSpace& os, const OslashFunctional& f, const OslashFunctional& g);
/// The unit of both products, eps (x) eps.
OslashFunctional conv_unit(const OslashSpace& os);
/// Cached coproducts of the cosets of degree <= max_degree (all when
/// negative) for repeated convolution. Results are restricted to those cosets.
class ConvolutionTable {
 public:
  explicit ConvolutionTable(const OslashSpace& os, int max_degree = -1);

  std::size_t size() const { return comult_.size(); }
  OslashFunctional convolve(const OslashFunctional& f, const OslashFunctional& g) const;
  OslashFunctional unit() const { return unit_; }

 private:
  std::vector<OslashTensor> comult_;
  OslashFunctional unit_;
};

/// Ordinary convolution on B*: (f g)(b) = f(b1) g(b2).
AlgebraFunctional convolve_algebra(const Presentation& b, const AlgebraFunctional& f, const AlgebraFunctional& g,
                                   const std::vector<Word>& words);

/// theta_f(x (x) y) = x1 f(x2 (/) y) together with the checks that make f a
/// coseparability witness.
struct CosepWitness {
  bool total = false;
  bool equation_holds = false;
  bool splits_delta = false;
  std::map<TensorKey, NcPoly> theta;
  std::vector<std::string> failures;

  bool ok() const { return total && equation_holds && splits_delta; }
};

/// Checks f(1 (/) 1) = 1, x1 f(x2 (/) y) = f(x (/) y1) y2 in B for pairs of
/// degree <= d and theta_f o Delta = id on words of degree <= d / 2.
CosepWitness coseparability_witness(const OslashSpace& os, const OslashFunctional& f, int d);

/// tau = f o i_B, certified against x1 tau(x2 S(y)) = tau(x S(y1)) y2 with S
/// the declared antipode of B.
struct RightHopfCertificate {
  bool antipode_ok = false;
  bool identity_holds = false;
  std::size_t pairs_checked = 0;
  AlgebraFunctional tau;
  std::vector<std::string> failures;

  bool ok() const { return antipode_ok && identity_holds; }
};

/// Throws PreconditionError when B has no declared antipode or it fails
/// x1 S(x2) = eps(x) 1 on the window.
RightHopfCertificate right_hopf_translate(const OslashSpace& os, const OslashFunctional& f, int d);

/// Checks x1 tau(x2 S(y)) = tau(x S(y1)) y2 on basis pairs of degree <= d.
/// tau is given as a callable on basis words.
std::vector<std::string> check_right_hopf_identity(const Presentation& b, const std::function<Scalar(const Word&)>& tau,
                                                   int d, std::size_t* pairs_checked = nullptr);

/// f(x (/) y) = tau(x S(y)), the oslash functional matching a functional on B
/// when S is a declared antipode.
OslashFunctional oslash_from_algebra(const OslashSpace& os, const std::function<Scalar(const Word&)>& tau);

}  // namespace bialint

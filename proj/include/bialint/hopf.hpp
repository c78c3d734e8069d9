#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bialint/integrals.hpp"
#include "bialint/oslash.hpp"

namespace bialint {

/// Linear map B -> B given by the images of basis words.
struct LinearEndo {
  std::vector<Word> basis;
  std::vector<NcPoly> images;

  /// Throws DomainError for a word outside the basis.
  NcPoly apply(const Word& w) const;
  NcPoly apply(const NcPoly& p) const;
  /// (*this) o other.
  LinearEndo compose(const LinearEndo& other) const;
  std::size_t rank() const;
  bool invertible() const { return rank() == basis.size(); }
  bool is_identity() const;
  std::string format(const Alphabet& a) const;

  /// The map w -> images(w) on the given words; missing words go to zero.
  static LinearEndo from_map(const std::vector<Word>& basis, const std::map<Word, NcPoly>& images);
  static LinearEndo identity(const std::vector<Word>& basis);
};

enum class AntipodeSide { two_sided, right, left };

std::string to_string(AntipodeSide side);
AntipodeSide parse_antipode_side(std::string_view text);

struct AntipodeResult {
  std::optional<LinearEndo> antipode;
  /// The solution set is a single point.
  bool unique = false;
  std::size_t equations = 0;
  std::string note;
};

/// Solves x1 S(x2) = eps(x) 1 (right), S(x1) x2 = eps(x) 1 (left) or both.
///
/// Needs a finite-dimensional presentation. For an infinite one whose rules
/// keep degrees, a group-like generator of positive degree cannot be
/// invertible, so no antipode exists and the result says so; any other
/// infinite presentation throws UnsupportedMode.
AntipodeResult solve_antipode(const Presentation& b, AntipodeSide side);

/// The declared antipode as a linear map on basis words of degree <= d
/// (all words when finite).
LinearEndo declared_antipode(const Presentation& b, int d);

struct AntipodeReport {
  bool right_identity = false;
  bool anti_multiplicative = false;
  bool anti_comultiplicative = false;
  /// x (/) y -> x S(y) is inverse to i_B in both orders.
  bool inverts_iB = false;
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return right_identity && anti_multiplicative && anti_comultiplicative && inverts_iB; }
};

/// Checks S on basis words and pairs of degree <= d (everything when finite).
AntipodeReport check_antipode_properties(const LinearEndo& s, const OslashSpace& os, int d);

/// Checks 1 (/) y = S(y) (/) 1 for every word in the section.
std::vector<std::string> check_iB_section(const OslashSpace& os, const std::map<Word, NcPoly>& section);

struct Envelope {
  /// B / ker(i_B) on the complement of the kernel's leading words.
  Presentation hopf;
  std::vector<NcPoly> kernel;
  /// Image of each basis word of B in the envelope.
  std::map<Word, NcPoly> projection;
  AntipodeResult antipode;
  AxiomReport axioms;
};

/// Hopf envelope of a finite-dimensional bialgebra. Throws UnsupportedMode
/// for infinite input and InternalConsistencyError when the quotient fails
/// the axioms or has no antipode.
Envelope hopf_envelope_findim(const Presentation& b);

/// Checks that `map` sends generators to generators and yields identical
/// structure constants between two finite-dimensional presentations.
std::vector<std::string> compare_structure(const Presentation& from, const Presentation& to, const GeneratorMap& map);

/// The integral of B (/) B obtained by pulling back a classical integral tau
/// of the Hopf target along f^.
struct EnvelopeIntegral {
  OslashFunctional lambda;
  /// Classical integral conditions violated by tau on the target.
  std::vector<std::string> tau_residuals;
  /// oslash_new conditions violated by lambda.
  std::vector<std::string> residuals;

  bool ok() const { return tau_residuals.empty() && residuals.empty(); }
};

/// lambda = tau o f^. Throws PreconditionError unless f^ is bijective.
EnvelopeIntegral integral_via_envelope(const OslashSpace& os, const Presentation& target, const FHat& fhat,
                                       const AlgebraFunctional& tau, int d);

/// Quantum plane against k_q[x, x^-1, y]: eta^ from x -> x, y -> y and
/// gamma(x^n y^m) = x^n y^m (/) 1, gamma(x^-n y^m) = q^{nm} y^m (/) x^n.
struct QuantumEnvelopeCheck {
  bool fhat_well_defined = false;
  bool fhat_bijective = false;
  bool gamma_then_eta = false;
  bool eta_then_gamma = false;
  std::size_t checked = 0;
  /// Cosets whose image under eta^ has degree above os.degree().
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  bool ok() const { return fhat_well_defined && fhat_bijective && gamma_then_eta && eta_then_gamma; }
};

/// os must be built from quantum_plane(q).
QuantumEnvelopeCheck check_quantum_envelope(const OslashSpace& os, const Scalar& q);

// Functionals on B by their values on the basis words, indexed as in
// full_basis().
using DualVector = SparseVector;

/// (b -> phi)(a) = phi(a b).
DualVector harpoon(const Presentation& b, const Word& x, const DualVector& phi);
/// (phi *op psi)(c) = phi(c2) psi(c1).
DualVector convolve_op(const Presentation& b, const DualVector& phi, const DualVector& psi);
/// chi(f)(b) = f(b (/) 1).
DualVector chi(const OslashSpace& os, const OslashFunctional& f);
/// (f <| b)(x (/) y) = f(x (/) b y).
OslashFunctional right_action(const OslashSpace& os, const OslashFunctional& f, const Word& b);
/// b <| f = b1 f(b2 (/) 1).
NcPoly module_action(const OslashSpace& os, const Word& b, const OslashFunctional& f);

enum class SmashKind {
  /// B x| *B with (a x| f)(b x| g) = a b1 x| (f <| b2) * g; keys (word, coset).
  semidirect,
  /// B*op #psi B with (phi # a)(phi' # b) = (phi *op (a2 -> phi')) # a1 b;
  /// keys (dual basis index, word).
  psi_smash,
};

/// Element of a smash algebra over pairs of basis indices.
using SmashElement = LinearCombination<std::pair<std::size_t, std::size_t>>;

/// Smash product of a finite-dimensional bialgebra; basis products are
/// computed once.
class SmashAlgebra {
 public:
  static SmashAlgebra semidirect(const OslashSpace& os);
  static SmashAlgebra psi_smash(const OslashSpace& os);

  SmashKind kind() const { return kind_; }
  std::size_t dimension() const { return left_dim_ * right_dim_; }
  std::pair<std::size_t, std::size_t> shape() const { return {left_dim_, right_dim_}; }
  SmashElement unit() const { return unit_; }
  SmashElement multiply(const SmashElement& a, const SmashElement& b) const;
  std::string format(const SmashElement& e) const;

 private:
  SmashAlgebra(const OslashSpace& os, SmashKind kind);

  const OslashSpace* os_;
  SmashKind kind_;
  std::size_t left_dim_ = 0;
  std::size_t right_dim_ = 0;
  SmashElement unit_;
  // products_[i * dimension() + j] for basis elements i, j
  std::vector<SmashElement> products_;
};

/// xi(b x| f) = (b2 -> chi(f)) # b1.
SmashElement xi(const OslashSpace& os, const SmashElement& e);

struct SmashReport {
  bool semidirect_unit = false;
  bool psi_unit = false;
  bool semidirect_associative = false;
  bool psi_associative = false;
  std::size_t triples_checked = 0;
  bool tambara = false;
  std::size_t tambara_checked = 0;
  bool xi_unital = false;
  bool xi_multiplicative = false;
  std::size_t xi_pairs_checked = 0;
  bool chi_algebra_map = false;
  std::vector<std::string> failures;

  bool ok() const {
    return semidirect_unit && psi_unit && semidirect_associative && psi_associative && tambara && xi_unital &&
           xi_multiplicative && chi_algebra_map;
  }
};

/// Builds both smash products of a finite-dimensional bialgebra, checks
/// units, associativity on `samples` random basis triples, the twisting map
/// axioms of psi on all basis pairs, chi as an algebra map, and xi unital
/// and multiplicative on all basis pairs.
SmashReport smash_products(const OslashSpace& os, std::size_t samples = 100, std::uint64_t seed = 1);

}  // namespace bialint

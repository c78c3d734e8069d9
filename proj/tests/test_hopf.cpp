#include <catch_amalgamated.hpp>

#include <random>

#include "bialint/catalog.hpp"
#include "bialint/errors.hpp"
#include "bialint/hopf.hpp"
#include "bialint/presentation_io.hpp"

using namespace bialint;

namespace {

DualVector random_dual(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> v(-3, 3);
  DualVector d;
  for (std::size_t i = 0; i < n; ++i) d.set(i, Scalar(v(rng)));
  return d;
}

Scalar eval(const Presentation& b, const DualVector& phi, const NcPoly& p) {
  const std::vector<Word> basis = b.full_basis();
  Scalar out(0);
  for (const auto& [w, c] : p) {
    const auto it = std::find(basis.begin(), basis.end(), w);
    REQUIRE(it != basis.end());
    out += c * phi.coefficient(static_cast<std::size_t>(it - basis.begin()));
  }
  return out;
}

}  // namespace

TEST_CASE("linear endomorphisms") {
  const std::vector<Word> basis = {Word{}, Word{0}};
  const LinearEndo id = LinearEndo::identity(basis);
  CHECK(id.is_identity());
  CHECK(id.rank() == 2);
  const LinearEndo swap = LinearEndo::from_map(basis, {{Word{}, NcPoly(Word{0})}, {Word{0}, NcPoly(Word{})}});
  CHECK(swap.invertible());
  CHECK(swap.compose(swap).is_identity());
  const LinearEndo zero = LinearEndo::from_map(basis, {});
  CHECK(zero.rank() == 0);
  CHECK_THROWS_AS(id.apply(Word{0, 0}), DomainError);
}

TEST_CASE("Sweedler's antipode has order four") {
  const Presentation b = sweedler_h4();
  const AntipodeResult res = solve_antipode(b, AntipodeSide::two_sided);
  REQUIRE(res.antipode);
  CHECK(res.unique);
  const LinearEndo& s = *res.antipode;
  CHECK(s.apply(Word{1}) == NcPoly(Word{0, 1}, Scalar(-1)));
  // S^2(y) = S(-x.y) = -S(y) S(x) = x.y.x = -y
  const LinearEndo s2 = s.compose(s);
  CHECK(s2.apply(Word{1}) == NcPoly(Word{1}, Scalar(-1)));
  CHECK_FALSE(s2.is_identity());
  CHECK(s2.compose(s2).is_identity());
  // the solved antipode agrees with the declared one
  for (const Word& w : b.full_basis()) CHECK(s.apply(w) == b.antipode(w));
  const OslashSpace os = OslashSpace::build(b);
  CHECK(check_antipode_properties(s, os, 0).ok());
  CHECK_FALSE(check_antipode_properties(LinearEndo::identity(b.full_basis()), os, 0).ok());
}

TEST_CASE("antipode existence across the catalog") {
  const AntipodeResult c2 = solve_antipode(group_c2(), AntipodeSide::two_sided);
  REQUIRE(c2.antipode);
  CHECK(c2.antipode->is_identity());
  CHECK_FALSE(solve_antipode(sixdim(), AntipodeSide::two_sided).antipode);
  CHECK_FALSE(solve_antipode(sixdim(), AntipodeSide::right).antipode);
  CHECK_FALSE(solve_antipode(a_times_k(2), AntipodeSide::left).antipode);
  const AntipodeResult kx = solve_antipode(poly_grouplike(), AntipodeSide::two_sided);
  CHECK_FALSE(kx.antipode);
  CHECK(kx.note.find("group-like") != std::string::npos);
  CHECK_FALSE(solve_antipode(quantum_plane(Scalar(2)), AntipodeSide::two_sided).antipode);
  CHECK_THROWS_AS(solve_antipode(laurent(), AntipodeSide::two_sided), UnsupportedMode);
  CHECK(parse_antipode_side("right") == AntipodeSide::right);
  CHECK_THROWS_AS(parse_antipode_side("up"), MalformedInput);
}

TEST_CASE("Hopf envelopes of finite examples") {
  const Envelope six = hopf_envelope_findim(sixdim());
  CHECK(six.hopf.dimension() == 4);
  CHECK(six.kernel.size() == 2);
  CHECK(six.axioms.passed());
  REQUIRE(six.antipode.antipode);
  const Presentation h4 = sweedler_h4();
  GeneratorMap id;
  id.images.emplace(0, NcPoly(Word{0}));
  id.images.emplace(1, NcPoly(Word{1}));
  CHECK(compare_structure(six.hopf, h4, id).empty());
  // the projection kills the kernel
  CHECK(six.projection.at(Word{0, 0}) == six.projection.at(Word{}));

  CHECK(hopf_envelope_findim(a_times_k(2)).hopf.dimension() == 1);
  CHECK(hopf_envelope_findim(h4).hopf.dimension() == 4);
  CHECK(hopf_envelope_findim(h4).kernel.empty());
  CHECK_THROWS_AS(hopf_envelope_findim(poly_grouplike()), UnsupportedMode);
}

TEST_CASE("structure comparison notices a changed product") {
  const Envelope six = hopf_envelope_findim(sixdim());
  std::string text = serialize_presentation(six.hopf);
  const std::string from = "mult b1.b2 = b3";
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), "mult b1.b2 = -b3");
  const Presentation changed = parse_presentation(text, false);
  GeneratorMap id;
  id.images.emplace(0, NcPoly(Word{0}));
  id.images.emplace(1, NcPoly(Word{1}));
  CHECK_FALSE(compare_structure(changed, sweedler_h4(), id).empty());
}

TEST_CASE("pulling back the H4 integral gives the sixdim integral") {
  const OslashSpace os = OslashSpace::build(sixdim());
  const Presentation h4 = sweedler_h4();
  GeneratorMap id;
  id.images.emplace(0, NcPoly(Word{0}));
  id.images.emplace(1, NcPoly(Word{1}));
  const FHat pi = build_fhat(os, h4, id);
  AlgebraFunctional tau;
  tau.values[Word{0, 1}] = Scalar(1);
  const EnvelopeIntegral ei = integral_via_envelope(os, h4, pi, tau, 0);
  CHECK(ei.ok());
  const SolutionSpace sol = solve_integrals(os, IntegralMode::oslash_new, 0, 0);
  REQUIRE(sol.dimension() == 1);
  SparseVector normalized = ei.lambda.values;
  normalized *= normalized.begin()->second.inverse();
  CHECK(normalized == sol.basis[0]);
  // a functional that is not an integral on the target
  AlgebraFunctional bad;
  bad.values[Word{}] = Scalar(1);
  CHECK_FALSE(integral_via_envelope(os, h4, pi, bad, 0).ok());
}

TEST_CASE("quantum plane against its localisation") {
  for (const Scalar& q : {Scalar(2), Scalar(-1)}) {
    const QuantumEnvelopeCheck c = check_quantum_envelope(build_oslash(quantum_plane(q), 5, 2), q);
    CHECK(c.ok());
    CHECK(c.checked > 0);
  }
}

TEST_CASE("dual actions follow their defining formulas") {
  const Presentation b = sweedler_h4();
  const OslashSpace os = OslashSpace::build(b);
  const std::vector<Word> basis = b.full_basis();
  std::mt19937_64 rng(12);
  for (int i = 0; i < 10; ++i) {
    const DualVector phi = random_dual(rng, basis.size());
    const DualVector psi = random_dual(rng, basis.size());
    for (const Word& x : basis) {
      const DualVector h = harpoon(b, x, phi);
      for (std::size_t a = 0; a < basis.size(); ++a) {
        CHECK(h.coefficient(a) == eval(b, phi, b.multiply(basis[a], x)));
      }
    }
    const DualVector c = convolve_op(b, phi, psi);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      Scalar expect(0);
      for (const auto& [k, coeff] : b.delta(basis[a])) {
        expect += coeff * eval(b, phi, NcPoly(k.second)) * eval(b, psi, NcPoly(k.first));
      }
      CHECK(c.coefficient(a) == expect);
    }
    // chi turns the product of *B into *op
    OslashFunctional f, g;
    f.values = random_dual(rng, os.dimension());
    g.values = random_dual(rng, os.dimension());
    CHECK(chi(os, convolve(os, f, g)) == convolve_op(b, chi(os, f), chi(os, g)));
  }
}

TEST_CASE("smash products of Sweedler's algebra") {
  const OslashSpace os = OslashSpace::build(sweedler_h4());
  const SmashAlgebra sd = SmashAlgebra::semidirect(os);
  const SmashAlgebra ps = SmashAlgebra::psi_smash(os);
  CHECK(sd.dimension() == 16);
  CHECK(ps.dimension() == 16);
  const SmashElement e(std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(sd.multiply(sd.unit(), e) == e);
  CHECK(sd.multiply(e, sd.unit()) == e);
  CHECK(xi(os, sd.unit()) == ps.unit());
  const SmashReport r = smash_products(os, 50, 3);
  CHECK(r.ok());
  CHECK(r.xi_pairs_checked == 256);
}

TEST_CASE("smash products of the six-dimensional example") {
  const SmashReport r = smash_products(OslashSpace::build(sixdim()), 30, 5);
  CHECK(r.ok());
  CHECK(r.xi_pairs_checked == 576);
}

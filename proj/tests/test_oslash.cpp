#include <catch_amalgamated.hpp>

#include <random>

#include "bialint/catalog.hpp"
#include "bialint/errors.hpp"
#include "bialint/oslash.hpp"

using namespace bialint;

namespace {

Word power(Letter g, int n) { return Word(std::vector<Letter>(static_cast<std::size_t>(n), g)); }

// dim (B (x) B) / span{(u (x) v)(Delta(m) - eps(m) 1 (x) 1)} for finite B,
// by plain elimination over the pairs of basis words.
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
        const TensorPoly t = b.multiply(tensor(NcPoly(u), NcPoly(v)), rel);
        SparseVector row;
        for (const auto& [k, c] : t) row.add_term(index.at(k), c);
        span.insert(row);
      }
    }
  }
  return index.size() - span.rank();
}

}  // namespace

TEST_CASE("exact B (/) B dimensions match direct elimination") {
  for (const char* name : {"sixdim", "sweedler_h4", "group_c2", "a_times_k", "trivial"}) {
    INFO(name);
    const Presentation b = catalog_load(name);
    const OslashSpace os = OslashSpace::build(b);
    CHECK(os.exact());
    CHECK(os.dimension() == quotient_dimension(b));
    CHECK(os.representative(os.unit_index()) == TensorKey{Word{}, Word{}});
  }
  CHECK(OslashSpace::build(sixdim()).dimension() == 4);
  CHECK(OslashSpace::build(a_times_k(2)).dimension() == 1);
  CHECK(OslashSpace::build(a_times_k(3)).dimension() == 1);
}

TEST_CASE("k[X] (/) k[X] has two cosets in each positive degree") {
  const Presentation b = poly_grouplike();
  const OslashSpace os = build_oslash(b, 6, 2);
  CHECK(os.stable());
  const auto dims = os.dimensions_per_degree();
  CHECK(dims[0] == 1);
  for (int k = 1; k <= 6; ++k) CHECK(dims[static_cast<std::size_t>(k)] == 2);
  // X^(a+1) (/) X^(b+1) = X^a (/) X^b since X is group-like
  for (int a = 0; a <= 3; ++a) {
    for (int c = 0; c <= 3; ++c) {
      const int m = std::min(a, c);
      CHECK(os.reduce_pair(power(0, a), power(0, c)) == os.reduce_pair(power(0, a - m), power(0, c - m)));
    }
  }
}

TEST_CASE("relations vanish in the quotient") {
  std::mt19937_64 rng(4);
  for (const char* name : {"poly_grouplike", "quantum_plane", "matrix_bialgebra", "sixdim"}) {
    INFO(name);
    const Presentation b = catalog_load(name);
    const OslashSpace os = build_oslash(b, 4, 2);
    const std::vector<Word> words = b.finite_dimensional() ? b.full_basis() : b.basis(2);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int i = 0; i < 40; ++i) {
      const Word& u = words[pick(rng)];
      const Word& v = words[pick(rng)];
      const Word& m = words[pick(rng)];
      if (!b.finite_dimensional() && b.degree(u) + b.degree(v) + 2 * b.degree(m) > os.window()) continue;
      TensorPoly rel = b.delta(m);
      rel.add_term({Word{}, Word{}}, -b.counit(m));
      CHECK(os.reduce(b.multiply(tensor(NcPoly(u), NcPoly(v)), rel)).is_zero());
    }
  }
}

TEST_CASE("lift and reduce are inverse on cosets") {
  const OslashSpace os = build_oslash(quantum_plane(Scalar(2)), 4, 2);
  for (std::size_t i = 0; i < os.dimension_up_to(4); ++i) {
    CHECK(os.reduce(os.lift(OslashElement(i))) == OslashElement(i));
  }
}

TEST_CASE("quantum plane reduction identities") {
  for (const Scalar& q : {Scalar(-1), Scalar(2), Scalar(1, 3)}) {
    const Presentation b = quantum_plane(q);
    const OslashSpace os = build_oslash(b, 5, 2);
    // from (1 (x) 1) Delta(y) = y (x) 1 + x (x) y and eps(y) = 0
    CHECK(os.reduce_pair(Word{0}, Word{1}) == -os.reduce_pair(Word{1}, Word{}));
    // x is group-like, so x (/) x = 1 (/) 1
    CHECK(os.reduce_pair(Word{0}, Word{0}) == os.reduce_pair(Word{}, Word{}));
  }
}

TEST_CASE("pairs above the window are refused") {
  const OslashSpace os = build_oslash(poly_grouplike(), 3, 1);
  CHECK(os.window() == 4);
  CHECK_THROWS_AS(os.reduce_pair(power(0, 3), power(0, 2)), WindowOverflow);
}

TEST_CASE("the coproduct of B (/) B is coassociative and counital") {
  for (const char* name : {"sixdim", "sweedler_h4", "quantum_plane", "poly_grouplike"}) {
    INFO(name);
    const Presentation b = catalog_load(name);
    const OslashSpace os = build_oslash(b, 4, 2);
    for (std::size_t i = 0; i < os.dimension(); ++i) {
      if (os.filtration_degree(i) > (os.exact() ? os.window() : 4)) break;
      const OslashTensor d = oslash_comult(os, OslashElement(i));
      OslashElement left, right;
      LinearCombination<std::array<std::size_t, 3>> l3, r3;
      for (const auto& [k, c] : d) {
        left.add_term(k.second, c * oslash_counit(os, OslashElement(k.first)));
        right.add_term(k.first, c * oslash_counit(os, OslashElement(k.second)));
        for (const auto& [k2, c2] : oslash_comult(os, OslashElement(k.first))) l3.add_term({k2.first, k2.second, k.second}, c * c2);
        for (const auto& [k2, c2] : oslash_comult(os, OslashElement(k.second))) r3.add_term({k.first, k2.first, k2.second}, c * c2);
      }
      CHECK(left == OslashElement(i));
      CHECK(right == OslashElement(i));
      CHECK(l3 == r3);
    }
  }
}

TEST_CASE("i_B injectivity and surjectivity") {
  const IBProbe kx = probe_iB(build_oslash(poly_grouplike(), 5, 2));
  CHECK(kx.injective);
  CHECK_FALSE(kx.surjective);

  const OslashSpace six = OslashSpace::build(sixdim());
  const IBProbe p6 = probe_iB(six);
  CHECK(p6.surjective);
  CHECK_FALSE(p6.injective);
  const std::vector<NcPoly> ker = kernel_iB(six);
  REQUIRE(ker.size() == 2);
  for (const NcPoly& k : ker) CHECK(map_iB(six, k).is_zero());
  CHECK(map_iB(six, NcPoly(Word{0, 0}) - NcPoly(Word{})).is_zero());
  CHECK(map_iB(six, NcPoly(Word{0, 0, 1}) - NcPoly(Word{1})).is_zero());

  const IBProbe h4 = probe_iB(OslashSpace::build(sweedler_h4()));
  CHECK(h4.injective);
  CHECK(h4.surjective);
}

TEST_CASE("f^ along bialgebra maps") {
  const OslashSpace six = OslashSpace::build(sixdim());
  const Presentation h4 = sweedler_h4();
  GeneratorMap id;
  id.images.emplace(0, NcPoly(Word{0}));
  id.images.emplace(1, NcPoly(Word{1}));
  const FHat pi = build_fhat(six, h4, id);
  CHECK(pi.well_defined);
  CHECK(pi.bijective);
  // f^(1 (/) y) = S(y) = -x.y
  CHECK(pi.apply(six.reduce_pair(Word{}, Word{1})) == NcPoly(Word{0, 1}, Scalar(-1)));

  GeneratorMap swap;
  swap.images.emplace(0, NcPoly(Word{1}));
  swap.images.emplace(1, NcPoly(Word{0}));
  CHECK_THROWS_AS(build_fhat(six, h4, swap), ValidationError);
  CHECK_THROWS_AS(build_fhat(six, sixdim(), id), PreconditionError);
}

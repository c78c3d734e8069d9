#include <catch_amalgamated.hpp>

#include <random>

#include "bialint/catalog.hpp"
#include "bialint/errors.hpp"
#include "bialint/hopf.hpp"
#include "bialint/presentation_io.hpp"

using namespace bialint;

namespace {

Word power(Letter g, int n) { return Word(std::vector<Letter>(static_cast<std::size_t>(n), g)); }

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Gaussian binomial as the inversion generating function of 0/1 strings with k ones.
Scalar gaussian(int n, int k, const Scalar& q) {
  Scalar total(0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    long inv = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inv += (mask >> i & 1u) && !(mask >> j & 1u);
    }
    total += q.pow(inv);
  }
  return total;
}

NcPoly random_element(const Presentation& b, std::mt19937_64& rng, int d) {
  const std::vector<Word> words = b.finite_dimensional() ? b.full_basis() : b.basis(d);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  NcPoly p;
  for (int i = 0; i < 3; ++i) p.add_term(words[pick(rng)], Scalar(c(rng)));
  return p;
}

}  // namespace

TEST_CASE("catalog entries satisfy the bialgebra axioms") {
  for (const std::string& name : catalog_names()) {
    INFO(name);
    const Presentation b = catalog_load(name);
    const AxiomReport r = check_axioms(b, b.finite_dimensional() ? b.top_degree() : 4);
    CHECK(r.passed());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("basis sizes") {
  CHECK(sixdim().dimension() == 6);
  CHECK(sweedler_h4().dimension() == 4);
  CHECK(group_c2().dimension() == 2);
  CHECK(a_times_k(2).dimension() == 3);
  CHECK(a_times_k(5).dimension() == 6);
  CHECK(trivial_bialgebra().dimension() == 1);
  for (int d = 0; d <= 5; ++d) {
    CHECK(poly_grouplike().basis(d).size() == static_cast<std::size_t>(d + 1));
    CHECK(quantum_plane(Scalar(2)).basis(d).size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    // monomials of degree <= d in four commuting variables
    CHECK(matrix_bialgebra(2).basis(d).size() == static_cast<std::size_t>(binomial(d + 4, 4)));
  }
  CHECK_FALSE(poly_grouplike().finite_dimensional());
}

TEST_CASE("quantum plane coproduct of y^n is q-binomial") {
  for (const Scalar& q : {Scalar(2), Scalar(-1), Scalar(1, 3)}) {
    const Presentation b = quantum_plane(q);
    for (int n = 0; n <= 5; ++n) {
      TensorPoly expect;
      for (int k = 0; k <= n; ++k) expect.add_term({power(0, k) * power(1, n - k), power(1, k)}, gaussian(n, k, q));
      CHECK(b.delta(power(1, n)) == expect);
    }
  }
}

TEST_CASE("sixdim coproduct kills y^2 only because q = -1") {
  const Presentation b = sixdim();
  CHECK(b.delta(Word{1, 1}).is_zero());
  // (1 + q) x.y (x) y vanishes at q = -1
  CHECK(gaussian(2, 1, Scalar(-1)).is_zero());
  CHECK(b.delta(power(0, 3)) == b.delta(Word{0}));
}

TEST_CASE("matrix coproduct is the matrix product of generators") {
  const Presentation b = matrix_bialgebra(2);
  const Alphabet& a = b.alphabet();
  auto g = [&](int i, int j) { return a.at("x" + std::to_string(i) + std::to_string(j)); };
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      TensorPoly expect;
      for (int k = 1; k <= 2; ++k) expect.add_term({Word{g(i, k)}, Word{g(k, j)}}, Scalar(1));
      CHECK(b.delta(Word{g(i, j)}) == expect);
      CHECK(b.counit(Word{g(i, j)}) == Scalar(i == j ? 1 : 0));
    }
  }
  // the determinant is group-like
  const NcPoly det = b.multiply(Word{g(1, 1)}, Word{g(2, 2)}) - b.multiply(Word{g(1, 2)}, Word{g(2, 1)});
  CHECK(b.delta(det) == b.reduce(tensor(det, det)));
}

TEST_CASE("coproduct and counit are multiplicative on random elements") {
  std::mt19937_64 rng(31);
  for (const char* name : {"quantum_plane", "sixdim", "sweedler_h4", "a_times_k", "matrix_bialgebra", "laurent"}) {
    INFO(name);
    const Presentation b = catalog_load(name);
    for (int i = 0; i < 20; ++i) {
      const NcPoly u = random_element(b, rng, 2), v = random_element(b, rng, 2);
      const NcPoly uv = b.multiply(u, v);
      CHECK(b.delta(uv) == b.multiply(b.delta(u), b.delta(v)));
      CHECK(b.counit(uv) == b.counit(u) * b.counit(v));
      CHECK(delta_left(b, b.delta(u)) == delta_right(b, b.delta(u)));
    }
  }
}

TEST_CASE("declared antipodes are convolution inverses on a window") {
  for (const char* name : {"laurent", "quantum_laurent", "sweedler_h4", "group_c2"}) {
    INFO(name);
    const Presentation b = catalog_load(name);
    REQUIRE(b.has_antipode());
    const std::vector<Word> words = b.finite_dimensional() ? b.full_basis() : b.basis(3);
    for (const Word& w : words) {
      NcPoly right, left;
      for (const auto& [k, c] : b.delta(w)) {
        right.add_scaled(b.multiply(NcPoly(k.first), b.antipode(k.second)), c);
        left.add_scaled(b.multiply(b.antipode(k.first), NcPoly(k.second)), c);
      }
      CHECK(right == NcPoly(Word{}, b.counit(w)));
      CHECK(left == NcPoly(Word{}, b.counit(w)));
    }
  }
}

TEST_CASE("presentations round-trip through the file format") {
  for (const std::string& name : catalog_names()) {
    INFO(name);
    const Presentation b = catalog_load(name);
    CHECK(parse_presentation(serialize_presentation(b)) == b);
  }
  const Presentation env = hopf_envelope_findim(sixdim()).hopf;
  CHECK(env.backend() == Backend::structure_constants);
  CHECK(parse_presentation(serialize_presentation(env)) == env);
}

TEST_CASE("file diagnostics") {
  const std::string head = "bialgebra t\nq = 2\ngens x y\norder deglex x < y\nrule y.x -> 2 x.y\n";
  const std::string coalg = "delta x = x (x) x\ndelta y = y (x) 1 + x (x) y\ncounit x = 1\ncounit y = 0\n";
  CHECK_NOTHROW(parse_presentation(head + coalg));

  try {
    parse_presentation(head + "rule x.x.x -> x\nrule y.y -> 0\n" + coalg);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("delta(y.y)") != std::string::npos);
    CHECK(msg.find("bi-ideal") != std::string::npos);
  }

  try {
    parse_presentation("bialgebra t\ngens x\norder deglex x\ndelta x = x (x) x\ncounit x = 1/0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(std::string(e.what()).find("malformed rational") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_presentation("bialgebra t\ngens x\nrule z -> x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("bialgebra t\ngens x\nfrobnicate\n"), ParseError);
  // eps is not a counit for this coproduct
  CHECK_THROWS_AS(parse_presentation("bialgebra t\ngens x\norder deglex x\ndelta x = x (x) 1\ncounit x = 0\n"),
                  ValidationError);
}

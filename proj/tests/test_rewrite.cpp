#include <catch_amalgamated.hpp>

#include <random>

#include "bialint/catalog.hpp"
#include "bialint/errors.hpp"
#include "bialint/rewrite.hpp"

using namespace bialint;

namespace {

Word power(Letter g, int n) { return Word(std::vector<Letter>(static_cast<std::size_t>(n), g)); }

// y.x -> q x.y on letters x = 0, y = 1
ReductionSystem quantum_rules(const Scalar& q) {
  return ReductionSystem({Rule{Word{1, 0}, NcPoly(Word{0, 1}, q)}}, MonomialOrder::deglex(2));
}

Word random_word(std::mt19937_64& rng, Letter letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Letter> g(0, letters - 1);
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = g(rng);
  return Word(out);
}

}  // namespace

TEST_CASE("quantum plane normal forms follow y^n x^m = q^(nm) x^m y^n") {
  for (const Scalar& q : {Scalar(2), Scalar(-1), Scalar(1, 3)}) {
    const ReductionSystem rs = quantum_rules(q);
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m <= 4; ++m) {
        const NcPoly nf = rs.normal_form(power(1, n) * power(0, m));
        CHECK(nf == NcPoly(power(0, m) * power(1, n), q.pow(n * m)));
      }
    }
  }
}

TEST_CASE("a general word counts its inversions") {
  // each y standing left of an x contributes one factor q
  const Scalar q(3);
  const ReductionSystem rs = quantum_rules(q);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(rng, 2, 8);
    long inversions = 0, xs = 0;
    for (std::size_t a = 0; a < w.size(); ++a) {
      if (w[a] == 0) ++xs;
      for (std::size_t b = a + 1; b < w.size(); ++b) inversions += (w[a] == 1 && w[b] == 0);
    }
    const Word sorted = power(0, static_cast<int>(xs)) * power(1, static_cast<int>(w.size() - xs));
    CHECK(rs.normal_form(w) == NcPoly(sorted, q.pow(inversions)));
  }
}

TEST_CASE("rules must decrease in the order") {
  CHECK_THROWS_AS(ReductionSystem({Rule{Word{0, 1}, NcPoly(Word{1, 0})}}, MonomialOrder::deglex(2)), NonTermination);
  CHECK_THROWS_AS(ReductionSystem({Rule{Word{0}, NcPoly(Word{0, 0})}}, MonomialOrder::deglex(1)), NonTermination);
  CHECK_THROWS_AS(ReductionSystem({Rule{Word{}, NcPoly(Word{})}}, MonomialOrder::deglex(1)), MalformedInput);
}

TEST_CASE("the reduction guard trips") {
  // x.x -> x reduces x^n in n - 1 steps
  const ReductionSystem rs({Rule{Word{0, 0}, NcPoly(Word{0})}}, MonomialOrder::deglex(1));
  CHECK(rs.normal_form(NcPoly(power(0, 10)), 9) == NcPoly(Word{0}));
  CHECK_THROWS_AS(rs.normal_form(NcPoly(power(0, 10)), 8), NonTermination);
}

TEST_CASE("overlaps of x.x.x -> x with itself") {
  const ReductionSystem rs({Rule{power(0, 3), NcPoly(Word{0})}}, MonomialOrder::deglex(1));
  const auto overlaps = rs.find_overlaps();
  // proper self-overlaps of length 1 and 2
  REQUIRE(overlaps.size() == 2);
  for (const Overlap& o : overlaps) {
    const auto [a, b] = rs.resolve(o);
    CHECK(rs.normal_form(a) == rs.normal_form(b));
  }
  CHECK(check_confluence(rs).confluent);
}

TEST_CASE("a non-confluent system is refuted with a witness") {
  // x.y -> x and y.x -> y disagree on x.y.x
  const ReductionSystem rs({Rule{Word{0, 1}, NcPoly(Word{0})}, Rule{Word{1, 0}, NcPoly(Word{1})}},
                           MonomialOrder::deglex(2));
  const ConfluenceResult res = check_confluence(rs);
  CHECK_FALSE(res.confluent);
  REQUIRE(res.counterexample);
  CHECK(rs.normal_form(res.counterexample->first) != rs.normal_form(res.counterexample->second));
}

TEST_CASE("catalog rule systems are confluent") {
  for (const std::string& name : catalog_names()) {
    const Presentation b = catalog_load(name);
    if (b.backend() != Backend::free_algebra) continue;
    INFO(name);
    const ConfluenceResult res = check_confluence(b.rules());
    CHECK(res.confluent);
  }
}

TEST_CASE("normal forms respect multiplication in a confluent system") {
  // Sweedler's relations: y.x = -x.y, x.x = 1, y.y = 0
  const ReductionSystem rs({Rule{Word{1, 0}, NcPoly(Word{0, 1}, Scalar(-1))}, Rule{Word{0, 0}, NcPoly(Word{})},
                            Rule{Word{1, 1}, NcPoly()}},
                           MonomialOrder::deglex(2));
  REQUIRE(check_confluence(rs).confluent);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const Word a = random_word(rng, 2, 5), b = random_word(rng, 2, 5);
    const NcPoly nf = rs.normal_form(a * b);
    CHECK(rs.normal_form(nc_mul(rs.normal_form(a), rs.normal_form(b))) == nf);
    CHECK(rs.normal_form(nf) == nf);
    for (const auto& [w, c] : nf) CHECK(rs.is_irreducible(w));
  }
}

TEST_CASE("bounded completion closes commutation with an involution") {
  // y.x - x.y and x.x.x - x: completion keeps both and the result is confluent
  const std::vector<NcPoly> rel = {NcPoly(Word{1, 0}) - NcPoly(Word{0, 1}), NcPoly(power(0, 3)) - NcPoly(Word{0})};
  const ReductionSystem rs = complete_bounded(rel, MonomialOrder::deglex(2), 6);
  CHECK(check_confluence(rs).confluent);
  CHECK(rs.normal_form(Word{1, 0, 0, 0}) == NcPoly(Word{0, 1}));
  // an ideal member reduces to zero
  CHECK(rs.normal_form(nc_mul(NcPoly(Word{1}), rel[1])).is_zero());
}

TEST_CASE("completion adds the missing overlap rule") {
  // x.y -> x and y.x -> y: completing gives x.x -> x and y.y -> y
  const std::vector<NcPoly> rel = {NcPoly(Word{0, 1}) - NcPoly(Word{0}), NcPoly(Word{1, 0}) - NcPoly(Word{1})};
  const ReductionSystem rs = complete_bounded(rel, MonomialOrder::deglex(2), 4);
  CHECK(check_confluence(rs).confluent);
  CHECK(rs.normal_form(Word{0, 0}) == NcPoly(Word{0}));
  CHECK(rs.normal_form(Word{1, 1}) == NcPoly(Word{1}));
}

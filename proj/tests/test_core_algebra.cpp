#include <catch_amalgamated.hpp>

#include <random>

#include "bialint/errors.hpp"
#include "bialint/linalg.hpp"
#include "bialint/linear_combination.hpp"
#include "bialint/monomial_order.hpp"
#include "bialint/presentation_io.hpp"

using namespace bialint;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Letter> g(0, static_cast<Letter>(letters - 1));
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = g(rng);
  return Word(out);
}

NcPoly random_poly(std::mt19937_64& rng, std::size_t terms) {
  std::uniform_int_distribution<int> c(-4, 4);
  NcPoly p;
  for (std::size_t i = 0; i < terms; ++i) p.add_term(random_word(rng, 2, 3), Scalar(c(rng), 1 + (i % 3)));
  return p;
}

// (n choose k)_q as the inversion generating function of 0/1 strings with k ones.
Scalar q_binomial_by_inversions(int n, int k, const Scalar& q) {
  Scalar total(0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    long inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if ((mask >> i & 1u) && !(mask >> j & 1u)) ++inversions;
      }
    }
    total += q.pow(inversions);
  }
  return total;
}

}  // namespace

TEST_CASE("scalars parse and normalise") {
  CHECK(Scalar::parse("3/6") == Scalar(1, 2));
  CHECK(Scalar::parse("-2/4") == Scalar(-1, 2));
  CHECK(Scalar::parse("+7") == Scalar(7));
  CHECK(Scalar::parse("0").is_zero());
  CHECK(Scalar(6, 4).to_string() == "3/2");
  CHECK(Scalar(-5).to_string() == "-5");
  CHECK_THROWS_AS(Scalar::parse("1/0"), MalformedInput);
  CHECK_THROWS_AS(Scalar::parse("x"), MalformedInput);
  CHECK_THROWS_AS(Scalar::parse("1.5"), MalformedInput);
  CHECK_THROWS_AS(Scalar(0).inverse(), DomainError);
}

TEST_CASE("scalar arithmetic is exact") {
  const Scalar third(1, 3);
  CHECK(third + third + third == Scalar(1));
  CHECK(Scalar(2).pow(-3) == Scalar(1, 8));
  CHECK(Scalar(-1, 2).pow(3) == Scalar(-1, 8));
  CHECK((Scalar(5, 7) / Scalar(5, 7)).is_one());
  CHECK(Scalar(1, 3) < Scalar(1, 2));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> v(-50, 50);
  for (int i = 0; i < 200; ++i) {
    const Scalar a(v(rng), 1 + std::labs(v(rng))), b(v(rng), 1 + std::labs(v(rng))), c(v(rng), 7);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - b + b == a);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("words concatenate and search") {
  const Word w{0, 1, 1, 0};
  CHECK(w * Word{2} == Word{0, 1, 1, 0, 2});
  CHECK(w.subword(1, 2) == Word{1, 1});
  CHECK(w.find(Word{1, 0}) == std::optional<std::size_t>(2));
  CHECK_FALSE(w.find(Word{2}).has_value());
  CHECK(w.reversed() == Word{0, 1, 1, 0});
  CHECK(Word{0, 1}.reversed() == Word{1, 0});
  CHECK(w.matches_at(Word{1, 1}, 1));
  CHECK(Word{}.empty());
}

TEST_CASE("alphabet formats and parses words") {
  const Alphabet a({"x", "y", "x11"});
  CHECK(a.format(Word{}) == "1");
  CHECK(a.format(Word{0, 2, 1}) == "x.x11.y");
  CHECK(a.parse("x.x11.y") == Word{0, 2, 1});
  CHECK(a.parse("1") == Word{});
  CHECK_THROWS_AS(a.parse("z"), MalformedInput);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(rng, 3, 6);
    CHECK(a.parse(a.format(w)) == w);
  }
}

TEST_CASE("linear combinations drop cancelled terms") {
  NcPoly p(Word{0}, Scalar(2));
  p.add_term(Word{0}, Scalar(-2));
  CHECK(p.is_zero());
  CHECK(p.size() == 0);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const NcPoly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 3);
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    CHECK(nc_mul(nc_mul(a, b), c) == nc_mul(a, nc_mul(b, c)));
    CHECK(nc_mul(a, b + c) == nc_mul(a, b) + nc_mul(a, c));
    for (const auto& [w, coeff] : a) CHECK_FALSE(coeff.is_zero());
  }
}

TEST_CASE("tensors and flips") {
  const NcPoly x(Word{0}), y(Word{1});
  const TensorPoly t = tensor(x + y, y);
  CHECK(t.coefficient({Word{0}, Word{1}}) == Scalar(1));
  CHECK(flip(flip(t)) == t);
  CHECK(flip(t).coefficient({Word{1}, Word{0}}) == Scalar(1));
  CHECK(tensor_mul(tensor(x, y), tensor(y, x)) == tensor(NcPoly(Word{0, 1}), NcPoly(Word{1, 0})));
}

TEST_CASE("deglex compares degree first, then letters") {
  const MonomialOrder o = MonomialOrder::deglex(2);
  CHECK(o.less(Word{}, Word{0}));
  CHECK(o.less(Word{0}, Word{1}));
  CHECK(o.less(Word{1}, Word{0, 0}));
  CHECK(o.less(Word{0, 1}, Word{1, 0}));
  const MonomialOrder swapped({1, 0}, {1, 1});
  CHECK(swapped.less(Word{1}, Word{0}));
  const MonomialOrder weighted({0, 1}, {1, 3});
  CHECK(weighted.degree(Word{1, 0}) == 4);
  CHECK(weighted.less(Word{0, 0}, Word{1}));
  CHECK_THROWS_AS(MonomialOrder({0, 0}, {1, 1}), MalformedInput);
  CHECK_THROWS_AS(MonomialOrder({0, 1}, {1, 0}), MalformedInput);
}

TEST_CASE("deglex is a monomial well-order on samples") {
  const MonomialOrder o = MonomialOrder::deglex(3);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Word a = random_word(rng, 3, 4), b = random_word(rng, 3, 4), c = random_word(rng, 3, 4);
    const auto ab = o.compare(a, b);
    CHECK((ab == 0) == (a == b));
    CHECK(o.compare(b, a) == (0 <=> ab));
    if (o.less(a, b) && o.less(b, c)) CHECK(o.less(a, c));
    // compatible with multiplication on both sides
    if (o.less(a, b)) {
      CHECK(o.less(c * a, c * b));
      CHECK(o.less(a * c, b * c));
    }
    CHECK_FALSE(o.less(a * c, a));
  }
}

TEST_CASE("q-binomials agree with inversion counts") {
  for (const Scalar& q : {Scalar(2), Scalar(-1), Scalar(1, 3), Scalar(1)}) {
    for (int n = 0; n <= 7; ++n) {
      for (int k = 0; k <= n; ++k) CHECK(q_binomial(n, k, q) == q_binomial_by_inversions(n, k, q));
    }
  }
  CHECK(q_integer(3, Scalar(2)) == Scalar(7));
  CHECK_THROWS_AS(q_binomial(2, 3, Scalar(2)), DomainError);
}

TEST_CASE("nullspace and solve_linear") {
  // x0 + x1 = 0, x1 - x2 = 0 over three unknowns
  std::vector<SparseVector> eq(2);
  eq[0].add_term(0, Scalar(1));
  eq[0].add_term(1, Scalar(1));
  eq[1].add_term(1, Scalar(1));
  eq[1].add_term(2, Scalar(-1));
  const auto ns = nullspace(eq, 3);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0].coefficient(0) == Scalar(1));
  CHECK(ns[0].coefficient(1) == Scalar(-1));
  CHECK(ns[0].coefficient(2) == Scalar(-1));
  const auto sol = solve_linear(eq, {Scalar(1), Scalar(2)}, 3);
  REQUIRE(sol);
  CHECK(dot(eq[0], *sol) == Scalar(1));
  CHECK(dot(eq[1], *sol) == Scalar(2));
  CHECK_FALSE(solve_linear({eq[0], eq[0]}, {Scalar(1), Scalar(2)}, 3).has_value());
}

TEST_CASE("random systems satisfy rank plus nullity") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 6, m = 1 + trial % 6;
    std::vector<SparseVector> eqs(m);
    for (auto& e : eqs) {
      for (std::size_t j = 0; j < n; ++j) e.add_term(j, Scalar(c(rng)));
    }
    const auto ns = nullspace(eqs, n);
    Echelon ech;
    for (const auto& e : eqs) ech.insert(e);
    CHECK(ech.rank() + ns.size() == n);
    for (const auto& v : ns) {
      for (const auto& e : eqs) CHECK(dot(e, v).is_zero());
    }
    // a right-hand side in the column space is always solvable
    SparseVector x;
    for (std::size_t j = 0; j < n; ++j) x.add_term(j, Scalar(c(rng)));
    std::vector<Scalar> rhs;
    for (const auto& e : eqs) rhs.push_back(dot(e, x));
    const auto sol = solve_linear(eqs, rhs, n);
    REQUIRE(sol);
    for (std::size_t i = 0; i < m; ++i) CHECK(dot(eqs[i], *sol) == rhs[i]);
  }
}

TEST_CASE("polynomials parse in the file syntax") {
  const Alphabet a({"x", "y"});
  const NcPoly p = parse_poly("2 x.y - 1/2 y + 3", a);
  CHECK(p.coefficient(Word{0, 1}) == Scalar(2));
  CHECK(p.coefficient(Word{1}) == Scalar(-1, 2));
  CHECK(p.coefficient(Word{}) == Scalar(3));
  CHECK(parse_poly(format_poly(p, a), a) == p);
  const TensorPoly t = parse_tensor("x (x) y + 2 (x) x", a);
  CHECK(t.coefficient({Word{0}, Word{1}}) == Scalar(1));
  CHECK(t.coefficient({Word{}, Word{0}}) == Scalar(2));
  CHECK(parse_tensor(format_tensor(t, a), a) == t);
  CHECK_THROWS_AS(parse_poly("x +", a), MalformedInput);
  CHECK_THROWS_AS(parse_poly("z", a), MalformedInput);
}

#include "bialint/monomial_order.hpp"

#include <numeric>

#include "bialint/errors.hpp"

namespace bialint {

MonomialOrder MonomialOrder::deglex(std::size_t num_generators) {
  std::vector<Letter> precedence(num_generators);
  std::iota(precedence.begin(), precedence.end(), Letter{0});
  return MonomialOrder(std::move(precedence), std::vector<int>(num_generators, 1));
}

MonomialOrder::MonomialOrder(std::vector<Letter> precedence, std::vector<int> weights)
    : precedence_(std::move(precedence)), rank_(precedence_.size(), precedence_.size()), weights_(std::move(weights)) {
  if (weights_.size() != precedence_.size()) throw MalformedInput("order: weight count mismatch");
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    const Letter g = precedence_[i];
    if (g >= rank_.size() || rank_[g] != rank_.size()) throw MalformedInput("order: precedence is not a permutation");
    rank_[g] = i;
  }
  for (int w : weights_) {
    if (w <= 0) throw MalformedInput("order: generator weights must be positive");
  }
}

int MonomialOrder::weight(Letter g) const {
  if (g >= weights_.size()) throw MalformedInput("unknown generator index " + std::to_string(g));
  return weights_[g];
}

int MonomialOrder::degree(const Word& w) const {
  int d = 0;
  for (Letter g : w) d += weight(g);
  return d;
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da <=> db;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return rank_[a[i]] <=> rank_[b[i]];
  }
  // Equal weighted degree with one word a proper prefix of the other cannot
  // happen for positive weights unless the words are equal.
  return a.size() <=> b.size();
}

Scalar q_binomial(long n, long k, const Scalar& q) {
  if (q.is_zero()) throw DomainError("q-binomial needs q != 0");
  if (k < 0 || n < 0 || k > n) throw DomainError("q-binomial needs 0 <= k <= n");
  // row[j] = (m choose j)_q, updated in place for m = 1..n.
  std::vector<Scalar> row(static_cast<std::size_t>(k) + 1, Scalar(0));
  row[0] = Scalar(1);
  for (long m = 1; m <= n; ++m) {
    for (long j = std::min(m, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + q.pow(j) * row[static_cast<std::size_t>(j)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

Scalar q_integer(long n, const Scalar& q) {
  Scalar total(0);
  Scalar power(1);
  for (long i = 0; i < n; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

}  // namespace bialint

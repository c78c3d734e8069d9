#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "bialint/scalar.hpp"
#include "bialint/word.hpp"

namespace bialint {

/// Degree-lexicographic order: weighted degree first, then letters left to
/// right by precedence rank.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// Identity precedence and unit weights on n generators.
  static MonomialOrder deglex(std::size_t num_generators);
  /// precedence[i] is the i-th smallest generator. Throws MalformedInput if
  /// it is not a permutation or a weight is not positive.
  MonomialOrder(std::vector<Letter> precedence, std::vector<int> weights);

  std::size_t num_generators() const { return rank_.size(); }
  const std::vector<Letter>& precedence() const { return precedence_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(Letter g) const;
  int degree(const Word& w) const;

  /// Throws MalformedInput for a letter outside the alphabet.
  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<Letter> precedence_;
  std::vector<std::size_t> rank_;
  std::vector<int> weights_;
};

/// Strict-weak-ordering adaptor for ordered containers.
struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

/// Free function form of MonomialOrder::compare.
inline std::strong_ordering deglex_compare(const Word& a, const Word& b, const MonomialOrder& order) {
  return order.compare(a, b);
}

/// Gaussian binomial (n choose k)_q from the q-Pascal recursion.
/// Throws DomainError if k > n or q = 0.
Scalar q_binomial(long n, long k, const Scalar& q);

/// (n)_q = 1 + q + ... + q^(n-1).
Scalar q_integer(long n, const Scalar& q);

}  // namespace bialint

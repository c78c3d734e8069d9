#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>

#include "bialint/scalar.hpp"
#include "bialint/word.hpp"

namespace bialint {

/// Finite formal sum of keys with nonzero rational coefficients.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal. Iteration follows Compare.
template <class Key, class Compare = std::less<Key>>
class LinearCombination {
 public:
  using map_type = std::map<Key, Scalar, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Compare cmp) : terms_(cmp) {}
  LinearCombination(const Key& key, Scalar coefficient = Scalar(1)) {  // NOLINT
    add_term(key, coefficient);
  }

  void add_term(const Key& key, const Scalar& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void set(const Key& key, const Scalar& coefficient) {
    if (coefficient.is_zero()) {
      terms_.erase(key);
    } else {
      terms_[key] = coefficient;
    }
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool contains(const Key& key) const { return terms_.count(key) != 0; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  /// Greatest key under Compare. Undefined on zero.
  const std::pair<const Key, Scalar>& leading() const { return *terms_.rbegin(); }

  void erase(const Key& key) { terms_.erase(key); }
  void clear() { terms_.clear(); }

  /// this += c * other
  void add_scaled(const LinearCombination& other, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : other.terms_) add_term(k, v * c);
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    add_scaled(other, Scalar(1));
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    add_scaled(other, Scalar(-1));
    return *this;
  }
  LinearCombination& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= c;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Scalar(-1); }
  friend LinearCombination operator*(LinearCombination a, const Scalar& c) { return a *= c; }
  friend LinearCombination operator*(const Scalar& c, LinearCombination a) { return a *= c; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

/// Noncommutative polynomial: a linear combination of words.
using NcPoly = LinearCombination<Word>;

/// Element of A (x) A written as a combination of pairs of words.
using TensorKey = std::pair<Word, Word>;
using TensorPoly = LinearCombination<TensorKey>;

/// Element of A (x) A (x) A.
using Tensor3Key = std::array<Word, 3>;
using Tensor3Poly = LinearCombination<Tensor3Key>;

/// Sparse vector indexed by coordinate position.
using SparseVector = LinearCombination<std::size_t>;

/// Product in the free algebra (concatenation, bilinear).
NcPoly nc_mul(const NcPoly& a, const NcPoly& b);
/// Factorwise product in the free algebra tensor square.
TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b);
/// a (x) b.
TensorPoly tensor(const NcPoly& a, const NcPoly& b);
/// Swaps the tensor factors.
TensorPoly flip(const TensorPoly& t);

/// Text form of an NcPoly, e.g. "2 x.y - 1/2 y + 3"; zero is "0".
std::string format_poly(const NcPoly& p, const Alphabet& alphabet);
/// Text form of a TensorPoly, e.g. "x (x) y + y (x) 1"; zero is "0".
std::string format_tensor(const TensorPoly& t, const Alphabet& alphabet);

}  // namespace bialint

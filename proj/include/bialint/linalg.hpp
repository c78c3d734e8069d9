#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bialint/linear_combination.hpp"

namespace bialint {

enum class PivotRule {
  /// Each row is led by its smallest nonzero column.
  least,
  /// Each row is led by its largest nonzero column.
  greatest,
};

/// Row space kept in echelon form over the rationals, built one vector at a
/// time. Pivot coefficients are 1.
class Echelon {
 public:
  explicit Echelon(PivotRule rule = PivotRule::least) : rule_(rule) {}

  PivotRule rule() const { return rule_; }

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(SparseVector v);
  /// Remainder of v after subtracting multiples of rows at pivot columns.
  /// Rows are fully reduced once reduce_rows() has run; otherwise the result
  /// is still well defined because every row only reaches columns on one
  /// side of its pivot.
  SparseVector reduce(SparseVector v) const;
  /// Brings the rows to reduced row echelon form.
  void reduce_rows();

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t column) const { return pivot_row_.count(column) != 0; }
  /// Rows sorted by pivot column.
  std::vector<SparseVector> rows() const;
  /// Pivot columns, ascending.
  std::vector<std::size_t> pivots() const;
  const SparseVector& row_for_pivot(std::size_t column) const { return rows_.at(pivot_row_.at(column)); }

 private:
  std::size_t pivot_of(const SparseVector& v) const;

  PivotRule rule_;
  std::vector<SparseVector> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

/// Canonical basis (reduced row echelon, least pivot, pivot value 1) of the
/// vectors x in k^n with e . x = 0 for every equation e.
std::vector<SparseVector> nullspace(const std::vector<SparseVector>& equations, std::size_t num_unknowns);

/// Canonical basis of the span of the given vectors.
std::vector<SparseVector> echelon_basis(const std::vector<SparseVector>& vectors, PivotRule rule = PivotRule::least);

/// One solution of e_i . x = rhs_i, with free unknowns set to zero, or
/// nothing when the system is inconsistent.
std::optional<SparseVector> solve_linear(const std::vector<SparseVector>& equations, const std::vector<Scalar>& rhs,
                                         std::size_t num_unknowns);

/// Dot product of sparse vectors.
Scalar dot(const SparseVector& a, const SparseVector& b);

}  // namespace bialint

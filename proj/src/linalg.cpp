#include "bialint/linalg.hpp"

#include <algorithm>

#include "bialint/errors.hpp"

namespace bialint {

std::size_t Echelon::pivot_of(const SparseVector& v) const {
  return rule_ == PivotRule::least ? v.begin()->first : v.leading().first;
}

SparseVector Echelon::reduce(SparseVector v) const {
  if (rows_.empty()) return v;
  if (rule_ == PivotRule::greatest) {
    // Subtracting a row only touches columns below its pivot, so one
    // descending sweep suffices.
    auto it = v.terms().end();
    while (it != v.terms().begin()) {
      --it;
      const std::size_t col = it->first;
      auto pr = pivot_row_.find(col);
      if (pr == pivot_row_.end()) continue;
      const Scalar c = it->second;
      v.add_scaled(rows_[pr->second], -c);
      it = v.terms().lower_bound(col);
    }
  } else {
    auto it = v.terms().begin();
    while (it != v.terms().end()) {
      const std::size_t col = it->first;
      auto pr = pivot_row_.find(col);
      if (pr == pivot_row_.end()) {
        ++it;
        continue;
      }
      const Scalar c = it->second;
      v.add_scaled(rows_[pr->second], -c);
      it = v.terms().upper_bound(col);
    }
  }
  return v;
}

bool Echelon::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  const std::size_t p = pivot_of(v);
  v *= v.coefficient(p).inverse();
  pivot_row_.emplace(p, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

void Echelon::reduce_rows() {
  // Process rows in the order their pivots are reached by reduce(): every
  // row then only meets rows that are already fully reduced.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const std::size_t pa = pivot_of(rows_[a]);
    const std::size_t pb = pivot_of(rows_[b]);
    return rule_ == PivotRule::least ? pa > pb : pa < pb;
  });
  for (std::size_t idx : order) {
    SparseVector& row = rows_[idx];
    const std::size_t p = pivot_of(row);
    SparseVector tail = row;
    tail.erase(p);
    SparseVector reduced = reduce(std::move(tail));
    reduced.add_term(p, Scalar(1));
    row = std::move(reduced);
  }
}

std::vector<SparseVector> Echelon::rows() const {
  std::vector<SparseVector> out;
  for (std::size_t p : pivots()) out.push_back(rows_[pivot_row_.at(p)]);
  return out;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(pivot_row_.size());
  for (const auto& kv : pivot_row_) out.push_back(kv.first);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SparseVector> echelon_basis(const std::vector<SparseVector>& vectors, PivotRule rule) {
  Echelon e(rule);
  for (const SparseVector& v : vectors) e.insert(v);
  e.reduce_rows();
  return e.rows();
}

std::vector<SparseVector> nullspace(const std::vector<SparseVector>& equations, std::size_t num_unknowns) {
  Echelon e(PivotRule::least);
  for (const SparseVector& eq : equations) {
    for (const auto& [col, c] : eq) {
      if (col >= num_unknowns) throw InternalConsistencyError("equation refers to an unknown out of range");
    }
    e.insert(eq);
  }
  e.reduce_rows();
  // With least pivots in RREF, x_p = -sum_f row_p[f] x_f over free columns f.
  std::vector<SparseVector> rows = e.rows();
  std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> by_free;
  for (const SparseVector& row : rows) {
    const std::size_t p = row.begin()->first;
    for (const auto& [col, c] : row) {
      if (col != p) by_free[col].emplace_back(p, -c);
    }
  }
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < num_unknowns; ++f) {
    if (e.is_pivot(f)) continue;
    SparseVector v(f);
    auto it = by_free.find(f);
    if (it != by_free.end()) {
      for (const auto& [p, c] : it->second) v.add_term(p, c);
    }
    basis.push_back(std::move(v));
  }
  return echelon_basis(basis, PivotRule::least);
}

std::optional<SparseVector> solve_linear(const std::vector<SparseVector>& equations, const std::vector<Scalar>& rhs,
                                         std::size_t num_unknowns) {
  if (equations.size() != rhs.size()) throw InternalConsistencyError("solve_linear: size mismatch");
  // The right-hand side sits in column num_unknowns, after every unknown, so
  // a row led by it means 0 = nonzero.
  Echelon e(PivotRule::least);
  for (std::size_t i = 0; i < equations.size(); ++i) {
    SparseVector row = equations[i];
    row.add_term(num_unknowns, rhs[i]);
    e.insert(std::move(row));
  }
  if (e.is_pivot(num_unknowns)) return std::nullopt;
  e.reduce_rows();
  SparseVector x;
  for (const SparseVector& row : e.rows()) x.add_term(row.begin()->first, row.coefficient(num_unknowns));
  return x;
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
  const SparseVector& small = a.size() <= b.size() ? a : b;
  const SparseVector& large = a.size() <= b.size() ? b : a;
  Scalar r(0);
  for (const auto& [k, c] : small) {
    auto it = large.terms().find(k);
    if (it != large.terms().end()) r += c * it->second;
  }
  return r;
}

}  // namespace bialint

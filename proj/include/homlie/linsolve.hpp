#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homlie/qfield.hpp"

namespace homlie {

using SparseRow = std::vector<std::pair<std::size_t, QScalar>>;  // sorted by column, no zeros
using DenseVec = std::vector<QScalar>;

/// Sparse homogeneous linear system over Q(q) with named unknowns.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(std::vector<std::string> unknowns);

  std::size_t columns() const noexcept { return unknowns_.size(); }
  const std::vector<std::string>& unknowns() const noexcept { return unknowns_; }
  /// Throws std::out_of_range for unknown ids.
  std::size_t column(const std::string& id) const;

  /// Adds sum_c entries[c] * x_c = 0. All-zero rows are dropped. Returns whether the row was kept.
  bool add_row(const std::map<std::size_t, QScalar>& entries, std::string label = {});
  void append(const ConstraintSystem& other);

  const std::vector<SparseRow>& rows() const noexcept { return rows_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Index of the first row not satisfied by x, or rows().size().
  std::size_t first_violated(const DenseVec& x) const;

 private:
  std::vector<std::string> unknowns_;
  std::map<std::string, std::size_t> index_;
  std::vector<SparseRow> rows_;
  std::vector<std::string> labels_;
};

struct Nullspace {
  std::size_t rank = 0;
  /// Reduced row echelon basis in natural column order: each vector's first
  /// nonzero entry is 1 and sits in a column where every other basis vector is 0.
  std::vector<DenseVec> basis;
};

/// Fraction-free sparse elimination with Markowitz pivoting, ties broken by
/// column then row index; back-substitution in Q(q).
Nullspace solve_nullspace(const ConstraintSystem& sys);

/// Rank of a list of equal-length vectors.
std::size_t rank_of(const std::vector<DenseVec>& vecs);

/// Gauss-Jordan normal form of the span, zero rows dropped.
std::vector<DenseVec> reduced_row_echelon(std::vector<DenseVec> vecs);

}  // namespace homlie

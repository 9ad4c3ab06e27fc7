#pragma once

// Exact dense linear algebra over a single Field.

#include "ecassoc/field.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ecassoc {

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  /// rows x cols zero matrix.
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  /// Throws MixedFields unless every entry lies in `field`, InvalidPoint for
  /// ragged input.
  static Matrix from_rows(const Field& field, std::vector<Vector> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const { return field_; }

  FieldElement& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Vector& row(std::size_t r) const { return rows_[r]; }
  const std::vector<Vector>& data() const noexcept { return rows_; }

  /// One row per line, entries separated by spaces.
  std::string dump() const;

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.field_ == b.field_ && a.rows_ == b.rows_; }

 private:
  Field field_;
  std::size_t cols_;
  std::vector<Vector> rows_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// Pivot column of each echelon row.
  std::vector<std::size_t> pivots;
  /// Right-kernel basis: one vector per non-pivot column f, with entry 1 at f
  /// and 0 at the other non-pivot columns.
  std::vector<Vector> kernel;
};

/// Gauss-Jordan elimination; pivots on the first nonzero entry scanning
/// columns left to right, rows top to bottom.
RankKernel rank_kernel(const Matrix& m);

/// Column j of the result is column perm[j] of `m`.
Matrix permute_columns(const Matrix& m, const std::vector<std::size_t>& perm);

/// rank_kernel of the column-permuted matrix, with the kernel mapped back to
/// the original column order.
RankKernel rank_kernel_permuted(const Matrix& m, const std::vector<std::size_t>& perm);

Vector multiply(const Matrix& m, const Vector& v);
bool is_zero_vector(const Vector& v);

/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace ecassoc

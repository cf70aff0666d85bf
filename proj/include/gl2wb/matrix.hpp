#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl2wb/field.hpp"

namespace gl2wb {

/// Dense row-major matrix over a small finite field. Row vectors are the
/// primary currency: subspaces are row spaces, maps act as v -> v * M.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& F, int rows, int cols)
      : F_(&F), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

  static Matrix identity(const Field& F, int n);
  static Matrix from_rows(const Field& F, int cols, const std::vector<std::vector<Elem>>& rows);

  const Field& field() const { return *F_; }
  bool has_field() const { return F_ != nullptr; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  Elem& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  Elem* row(int i) { return data_.data() + static_cast<size_t>(i) * cols_; }
  const Elem* row(int i) const { return data_.data() + static_cast<size_t>(i) * cols_; }
  std::vector<Elem> row_vec(int i) const { return {row(i), row(i) + cols_}; }
  const std::vector<Elem>& data() const { return data_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Elem c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  /// Rows [r0, r0+n).
  Matrix row_block(int r0, int n) const;
  /// Columns listed in `cols`, in that order.
  Matrix select_cols(const std::vector<int>& cols) const;
  Matrix select_rows(const std::vector<int>& rows) const;
  /// Vertical concatenation.
  Matrix stack(const Matrix& below) const;
  /// Horizontal concatenation.
  Matrix beside(const Matrix& right) const;
  void append_row(const Elem* v);

  std::string to_string() const;

 private:
  const Field* F_ = nullptr;
  int rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

/// dst += c * src over n entries.
void axpy(const Field& F, Elem* dst, const Elem* src, Elem c, int n);
void scale_row(const Field& F, Elem* v, Elem c, int n);

struct Rref {
  Matrix m;  // nonzero rows only
  std::vector<int> pivots;
  int rank = 0;
};

/// Full reduced row echelon form; zero rows are dropped.
Rref rref(const Matrix& m);
int rank(const Matrix& m);
/// Basis of the right null space, as rows: m * k^T = 0.
Matrix kernel(const Matrix& m);
/// Basis of {z : z * m = 0}, as rows.
Matrix left_kernel(const Matrix& m);
/// Kronecker product, left factor index major: (i*rB + k, j*cB + l).
Matrix kron(const Matrix& A, const Matrix& B);
/// Bases (in rref) of U meet V and U + V.
std::pair<Matrix, Matrix> subspace_meet_join(const Matrix& U, const Matrix& V);
Matrix inverse(const Matrix& m);
/// X with X * A = B, if one exists (rows of B in the row space of A).
std::optional<Matrix> solve_left(const Matrix& A, const Matrix& B);

/// Reduce v (in place) against an rref basis; returns true if v ends up zero.
bool reduce_against(const Rref& basis, Elem* v);
bool in_span(const Rref& basis, const Elem* v);
/// Row space containment: every row of U lies in the row space of V.
bool row_space_contains(const Matrix& V, const Matrix& U);
/// Coordinates of the rows of U with respect to the rref rows of `basis`;
/// throws if some row is outside the span.
Matrix coordinates(const Rref& basis, const Matrix& U);

}  // namespace gl2wb

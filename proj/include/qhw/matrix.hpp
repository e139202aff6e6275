#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhw/field.hpp"

namespace qw {

// Dense exact matrix over a Field.  Matrices act on column vectors:
// an r x c matrix is a linear map k^c -> k^r.  All eliminations use the
// leftmost-pivot rule, so every derived basis (kernel, image, complements)
// is deterministic.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0), F_(Field::rationals()) {}
  Matrix(const Field& F, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), F_(F), a_(rows * cols, Scalar(0)) {}
  static Matrix identity(const Field& F, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return F_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v) { a_[i * cols_ + j] = F_.reduce(v); }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // composition: (this ∘ o)
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;

  // Stack columns of blocks side by side / rows on top of each other.
  static Matrix hstack(const std::vector<Matrix>& blocks);
  static Matrix vstack(const std::vector<Matrix>& blocks);

  Matrix submatrix(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
  std::vector<Scalar> column(std::size_t j) const;
  std::vector<Scalar> row(std::size_t i) const;
  void set_column(std::size_t j, const std::vector<Scalar>& v);

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  // Basis of { x : A x = 0 }, one column per basis vector (canonical
  // free-variable form from the RREF).
  Matrix kernel_basis() const;

  // One solution of A x = b, if any.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

  // Inverse of a square invertible matrix (error if singular).
  Matrix inverse() const;

private:
  std::size_t rows_, cols_;
  Field F_;
  std::vector<Scalar> a_;
};

// Row-space tracker: maintains a set of vectors in reduced echelon form and
// answers "is v in the span so far?".  Used for deterministic basis extension
// (image bases, complements, cohomology representatives).
class EchelonSpan {
public:
  explicit EchelonSpan(const Field& F, std::size_t dim) : F_(F), dim_(dim) {}

  // Reduces v against the current span.  Returns the residue (zero vector if
  // v was dependent); if independent and `insert`, the normalized residue is
  // added to the span.
  std::vector<Scalar> residue(const std::vector<Scalar>& v) const;
  bool insert(const std::vector<Scalar>& v);
  bool contains(const std::vector<Scalar>& v) const;

  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
  Field F_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;   // echelon, pivot-normalized
  std::vector<std::size_t> pivots_;
};

}  // namespace qw

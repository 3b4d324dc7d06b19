#pragma once

// Dense exact linear algebra and canonical subspaces.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lieder/scalar.hpp"

namespace lieder {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, FieldSpec field);
/// e_i with 0-based i.
Vector unit_vector(std::size_t n, std::size_t i, FieldSpec field);
bool is_zero(std::span<const Scalar> v);
/// y += a * x
void axpy(const Scalar& a, std::span<const Scalar> x, std::span<Scalar> y);
Vector add(std::span<const Scalar> x, std::span<const Scalar> y);
Vector scale(const Scalar& a, std::span<const Scalar> x);

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, FieldSpec field);

  static Matrix identity(std::size_t n, FieldSpec field);
  /// Throws AmbientMismatch on ragged input. An empty list gives a 0 x cols matrix.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, FieldSpec field);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows, FieldSpec field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldSpec field() const noexcept { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;

  /// m * v
  Vector apply(std::span<const Scalar> v) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);

  bool operator==(const Matrix& rhs) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

Matrix power(const Matrix& m, std::size_t k);
Scalar trace(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some x with m * x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

struct RrefResult {
  Matrix form;                       ///< same shape as the input, zero rows last
  std::size_t rank;
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

RrefResult rref(const Matrix& m);

/// A subspace of F^n held by its reduced row echelon basis, so that equality
/// of subspaces is equality of bases.
class Subspace {
 public:
  static Subspace zero(std::size_t n, FieldSpec field);
  static Subspace full(std::size_t n, FieldSpec field);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t n, FieldSpec field);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  FieldSpec field() const noexcept { return basis_.field(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  const Matrix& basis() const noexcept { return basis_; }
  std::span<const Scalar> basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection along the pivot columns; zero iff v lies in the space.
  Vector reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;

  bool operator==(const Subspace& rhs) const;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0}.
Subspace kernel(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, std::span<const Scalar> v);
bool subspace_leq(const Subspace& a, const Subspace& b);
bool subspace_eq(const Subspace& a, const Subspace& b);
/// Image of a under the square matrix m.
Subspace apply_map(const Matrix& m, const Subspace& a);

}  // namespace lieder

#pragma once

// Exact rational linear algebra: scalars, dense matrices, reduced row echelon
// form, nullspaces and affine solves over Q.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace filippov {

/// Arbitrary-precision rational. GMP keeps every value canonical
/// (positive denominator, reduced fraction, zero as 0/1).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Malformed input: bad file contents, dimension mismatch, violated
/// preconditions on user-provided data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p", "p/q" or "-p/q" with q > 0. The result is normalized.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string format_scalar(const Scalar& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(std::span<const Scalar> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Builds a matrix from row vectors that all have length `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  /// Row-major reshape of a flat vector of length rows * cols.
  static Matrix from_flat(std::size_t rows, std::size_t cols, std::span<const Scalar> flat);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  /// Row-major entries.
  const Vector& flat() const { return data_; }

  Vector apply(std::span<const Scalar> v) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// Stacks `top` above `bottom`; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// Block-diagonal matrix diag(blocks...).
Matrix block_diagonal(const std::vector<Matrix>& blocks);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// The unique reduced row echelon form. Zero rows are kept at the bottom so
/// the result has the same shape as the input.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A linear subspace of Q^n stored by its canonical RREF basis, so two
/// subspaces are equal exactly when their basis grids are equal.
class Subspace {
 public:
  /// The zero subspace of Q^ambient_dim.
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  /// Basis vectors as rows, in reduced row echelon form.
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace nullspace(const Matrix& m);
/// Span of the columns of m.
Subspace column_space(const Matrix& m);

struct AffineSolution {
  /// Back-substitution solution with every free variable set to zero.
  Vector particular;
  Subspace homogeneous;
};

/// Solves m x = b exactly. Returns nothing when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Scalar> b);

}  // namespace filippov

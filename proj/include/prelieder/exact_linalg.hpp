#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace prelieder {

/// Exact rational number. GMP keeps every result of arithmetic canonical
/// (positive denominator, coprime parts); values built from raw numerator /
/// denominator pairs go through make_scalar() which canonicalizes.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

Scalar make_scalar(long numerator, long denominator = 1);

/// Parses "n", "-n", "p/q". Throws std::invalid_argument on anything else,
/// including a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical textual form: "n" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& s);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector& axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a*x
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& a, const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Scalar>& entries() const { return entries_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of ker(m); size is cols - rank.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m*x == b, or nothing when b is outside the column space.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Subspaces of K^n are passed around as matrices whose columns span them.
/// A matrix with zero columns is the zero subspace.
Matrix column_space_basis(const Matrix& m);
Matrix span_of(std::size_t ambient, const std::vector<Vector>& vectors);
Matrix subspace_sum(const Matrix& a, const Matrix& b);
bool subspace_contains(const Matrix& big, const Matrix& small);
bool subspace_equal(const Matrix& a, const Matrix& b);
/// {x : m*x in span(target)}.
Matrix preimage(const Matrix& m, const Matrix& target);
Matrix kernel_matrix(const Matrix& m);

}  // namespace prelieder

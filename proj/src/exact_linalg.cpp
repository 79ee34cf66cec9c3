#include "prelieder/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace prelieder {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool is_natural_literal(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Scalar s(numerator, denominator);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!is_natural_literal(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

std::string format_scalar(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vector& axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (sgn(a) == 0) return y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  }
  return y;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  return axpy(r, 1, b);
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  return axpy(r, -1, b);
}

Vector operator*(const Scalar& a, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = a * v[i];
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const { return prelieder::is_zero(entries_); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(v[k]) != 0 && sgn(a(i, k)) != 0) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& e : r.entries_) e *= s;
  return r;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat column mismatch");
  Matrix r(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
  }
  return r;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(a(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
    }
    const Scalar inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a(r, j)) != 0) a(i, j) -= factor * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = rr.reduced(r, m.cols());
  return x;
}

Matrix column_space_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  Matrix basis(m.rows(), rr.rank);
  for (std::size_t k = 0; k < rr.rank; ++k) basis.set_column(k, m.column(rr.pivots[k]));
  return basis;
}

Matrix span_of(std::size_t ambient, const std::vector<Vector>& vectors) {
  return column_space_basis(Matrix::from_columns(ambient, vectors));
}

Matrix subspace_sum(const Matrix& a, const Matrix& b) { return column_space_basis(hconcat(a, b)); }

bool subspace_contains(const Matrix& big, const Matrix& small) {
  return rank(hconcat(big, small)) == rank(big);
}

bool subspace_equal(const Matrix& a, const Matrix& b) {
  const std::size_t ra = rank(a);
  return ra == rank(b) && rank(hconcat(a, b)) == ra;
}

Matrix kernel_matrix(const Matrix& m) { return Matrix::from_columns(m.cols(), kernel_basis(m)); }

Matrix preimage(const Matrix& m, const Matrix& target) {
  if (m.rows() != target.rows()) throw std::invalid_argument("preimage: ambient mismatch");
  // ker [m | -target], projected to the first m.cols() coordinates.
  const Matrix joined = hconcat(m, Scalar(-1) * target);
  std::vector<Vector> projected;
  for (const auto& v : kernel_basis(joined)) {
    projected.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m.cols()));
  }
  return span_of(m.cols(), projected);
}

}  // namespace prelieder

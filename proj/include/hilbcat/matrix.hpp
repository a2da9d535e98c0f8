#ifndef HILBCAT_MATRIX_HPP
#define HILBCAT_MATRIX_HPP

#include <hilbcat/scalar.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hilbcat {

/// Dense row-major matrix of exact scalars. Zero rows or zero columns are
/// legal; they stand for maps into or out of the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw usage_error("matrix entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw usage_error("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }
  static Matrix column(std::span<const Scalar> entries) {
    return Matrix(entries.size(), 1, std::vector<Scalar>(entries.begin(), entries.end()));
  }
  static Matrix column(std::initializer_list<Scalar> entries) {
    return Matrix(entries.size(), 1, std::vector<Scalar>(entries));
  }
  /// Columns side by side; all must share `rows`.
  static Matrix from_columns(std::size_t rows, std::span<const Matrix> cols) {
    std::size_t total = 0;
    for (const auto& c : cols) {
      if (c.rows() != rows) throw usage_error("column height mismatch");
      total += c.cols();
    }
    Matrix out(rows, total);
    std::size_t at = 0;
    for (const auto& c : cols) {
      for (std::size_t j = 0; j < c.cols(); ++j, ++at) {
        for (std::size_t r = 0; r < rows; ++r) out(r, at) = c(r, j);
      }
    }
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const {
    for (const auto& s : data_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  Matrix col(std::size_t j) const {
    Matrix out(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, j);
    return out;
  }
  Matrix select_columns(std::span<const std::size_t> which) const {
    Matrix out(rows_, which.size());
    for (std::size_t k = 0; k < which.size(); ++k) {
      for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, which[k]);
    }
    return out;
  }
  /// Rows [begin, end).
  Matrix row_range(std::size_t begin, std::size_t end) const {
    Matrix out(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r - begin, c) = (*this)(r, c);
    }
    return out;
  }

  Scalar trace() const {
    if (!is_square()) throw usage_error("trace of a non-square matrix");
    Scalar t;
    for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& s : a.data_) s = -s;
    return a;
  }
  friend Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& e : a.data_) e *= s;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw usage_error("matrix product: " + a.shape() + " * " + b.shape());
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  /// Shape first, then entries; gives matrices a canonical total order.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// `[[a, b], [c, d]]` with canonical scalar text.
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) out += ", ";
      out += "[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) out += ", ";
        out += (*this)(r, c).to_string();
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw usage_error("matrix shape mismatch: " + shape() + " vs " + o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

/// Conjugate transpose.
inline Matrix mat_dagger(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c).conj();
  }
  return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Scalar& x = a(ar, ac);
      if (x.is_zero()) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
        }
      }
    }
  }
  return out;
}

/// [a | b]
inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw usage_error("hstack: " + a.shape() + " | " + b.shape());
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

/// [a ; b]
inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw usage_error("vstack: " + a.shape() + " / " + b.shape());
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  }
  return out;
}

struct RowEchelon {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
inline RowEchelon rref(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    }
    Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), pivots.size(), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return rref(a).rank; }

/// Columns form a basis of {x : a x = 0}, one per free column of rref(a),
/// in increasing free-column order.
inline Matrix nullspace_basis(const Matrix& a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivot_cols) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(a.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t k = 0; k < e.rank; ++k) v(e.pivot_cols[k], 0) = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(a.cols(), basis);
}

/// Some x with a x = b (b may have several columns), or nothing when b is
/// not in the column space of a. Free variables are set to zero.
inline std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw usage_error("solve_linear: " + a.shape() + " against right-hand side " + b.shape());
  }
  RowEchelon e = rref(hstack(a, b));
  for (std::size_t p : e.pivot_cols) {
    if (p >= a.cols()) return std::nullopt;
  }
  Matrix x(a.cols(), b.cols());
  for (std::size_t k = 0; k < e.rank; ++k) {
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivot_cols[k], c) = e.reduced(k, a.cols() + c);
  }
  return x;
}

/// A maximal linearly independent subset of the columns of a (the pivot
/// columns), in original order.
inline Matrix independent_columns(const Matrix& a) {
  RowEchelon e = rref(a);
  return a.select_columns(e.pivot_cols);
}

inline std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw usage_error("inverse of a non-square matrix");
  auto x = solve_linear(a, Matrix::identity(a.rows()));
  if (!x || rank(a) != a.rows()) return std::nullopt;
  return x;
}

}  // namespace hilbcat

#endif  // HILBCAT_MATRIX_HPP

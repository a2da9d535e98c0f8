// Test-only reference computations. These deliberately avoid the library's
// rref/nullspace/from_span so they can check them.
#ifndef HILBCAT_TESTS_ORACLES_HPP
#define HILBCAT_TESTS_ORACLES_HPP

#include <hilbcat/matrix.hpp>

#include <cstddef>
#include <vector>

namespace oracle {

using hilbcat::Matrix;
using hilbcat::Scalar;

/// Rank by plain forward elimination over a copy of the rows.
inline std::size_t rank(const Matrix& a) {
  std::vector<std::vector<Scalar>> rows(a.rows(), std::vector<Scalar>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = a(r, c);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      Scalar k = rows[r][c] / rows[rank][c];
      for (std::size_t cc = c; cc < a.cols(); ++cc) rows[r][cc] -= k * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

/// [a | b] without the library helper.
inline Matrix side_by_side(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

/// Columns of v lie in the column space of span.
inline bool in_span(const Matrix& span, const Matrix& v) { return oracle::rank(side_by_side(span, v)) == oracle::rank(span); }

/// Column spaces agree.
inline bool same_span(const Matrix& a, const Matrix& b) { return in_span(a, b) && in_span(b, a); }

/// v v^dagger / (v^dagger v) for a single nonzero column.
inline Matrix line_projection(const Matrix& v) {
  Scalar norm;
  for (std::size_t r = 0; r < v.rows(); ++r) norm += v(r, 0) * v(r, 0).conj();
  Matrix p(v.rows(), v.rows());
  for (std::size_t r = 0; r < v.rows(); ++r) {
    for (std::size_t c = 0; c < v.rows(); ++c) p(r, c) = v(r, 0) * v(c, 0).conj() / norm;
  }
  return p;
}

/// Entrywise naive product.
inline Matrix product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Scalar s;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  }
  return out;
}

/// x^dagger y for columns.
inline Scalar inner(const Matrix& x, const Matrix& y) {
  Scalar s;
  for (std::size_t r = 0; r < x.rows(); ++r) s += x(r, 0).conj() * y(r, 0);
  return s;
}

}  // namespace oracle

#endif  // HILBCAT_TESTS_ORACLES_HPP

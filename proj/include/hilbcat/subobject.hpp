#ifndef HILBCAT_SUBOBJECT_HPP
#define HILBCAT_SUBOBJECT_HPP

#include <hilbcat/morphism.hpp>

#include <span>
#include <string>
#include <vector>

namespace hilbcat {

/// A closed subobject of an `ambient`-dimensional space, held as its
/// orthogonal projection P = P^2 = P^dagger. Two subobjects are equal iff
/// their projections are equal, and M <= N iff P_M P_N = P_M.
class Subobject {
 public:
  Subobject() = default;

  static Subobject top(std::size_t ambient) { return Subobject(ambient, Matrix::identity(ambient)); }
  static Subobject bottom(std::size_t ambient) { return Subobject(ambient, Matrix::zero(ambient, ambient)); }

  /// Validates P^2 = P = P^dagger.
  static Subobject from_projection(Matrix proj) {
    if (!proj.is_square()) throw usage_error("projection must be square, got " + proj.shape());
    if (!(proj * proj == proj)) throw usage_error("matrix is not idempotent: " + proj.to_string());
    if (!(mat_dagger(proj) == proj)) throw usage_error("matrix is not self-adjoint: " + proj.to_string());
    std::size_t n = proj.rows();
    return Subobject(n, std::move(proj));
  }

  std::size_t ambient() const { return ambient_; }
  const Matrix& proj() const { return proj_; }

  /// Dimension of the range; equals the trace.
  std::size_t rank() const { return hilbcat::rank(proj_); }

  /// A basis of the range, drawn from the columns of the projection.
  Matrix basis() const { return independent_columns(proj_); }

  /// Comprehension: the domain of a representing mono.
  std::size_t comprehension_dim() const { return rank(); }

  bool is_bottom() const { return proj_.is_zero(); }
  bool is_top() const { return proj_ == Matrix::identity(ambient_); }

  bool contains(const Matrix& columns) const { return proj_ * columns == columns; }

  friend bool operator==(const Subobject&, const Subobject&) = default;
  friend bool operator<(const Subobject& a, const Subobject& b) { return a.proj_ < b.proj_; }

  std::string to_string() const { return proj_.to_string(); }

 private:
  Subobject(std::size_t ambient, Matrix proj) : ambient_(ambient), proj_(std::move(proj)) {}
  friend Subobject projection_onto(std::size_t, const Matrix&);

  std::size_t ambient_ = 0;
  Matrix proj_;
};

inline std::ostream& operator<<(std::ostream& os, const Subobject& s) { return os << s.to_string(); }

/// A (A^dagger A)^-1 A^dagger for a matrix with independent columns.
inline Subobject projection_onto(std::size_t ambient, const Matrix& independent) {
  if (independent.rows() != ambient) {
    throw usage_error("spanning vectors have length " + std::to_string(independent.rows()) +
                      ", ambient is " + std::to_string(ambient));
  }
  if (independent.cols() == 0) return Subobject::bottom(ambient);
  Matrix adj = mat_dagger(independent);
  auto gram_inv = inverse(adj * independent);
  if (!gram_inv) throw usage_error("projection_onto: columns are dependent");
  return Subobject(ambient, independent * *gram_inv * adj);
}

/// Orthogonal projection onto the span of the columns of `vectors`;
/// dependent and zero columns are dropped first.
inline Subobject from_span(std::size_t ambient, const Matrix& vectors) {
  if (vectors.rows() != ambient) {
    throw usage_error("spanning vectors have length " + std::to_string(vectors.rows()) +
                      ", ambient is " + std::to_string(ambient));
  }
  return projection_onto(ambient, independent_columns(vectors));
}

inline Subobject from_span(std::size_t ambient, std::span<const Matrix> vectors) {
  return from_span(ambient, Matrix::from_columns(ambient, vectors));
}

namespace detail {
inline void require_same_ambient(const Subobject& m, const Subobject& n, const char* op) {
  if (m.ambient() != n.ambient()) {
    throw usage_error(std::string(op) + ": ambient " + std::to_string(m.ambient()) + " vs " +
                      std::to_string(n.ambient()));
  }
}
}  // namespace detail

inline bool sub_leq(const Subobject& m, const Subobject& n) {
  detail::require_same_ambient(m, n, "sub_leq");
  return m.proj() * n.proj() == m.proj();
}

/// Intersection of ranges: solve A x = B y through the nullspace of
/// [A | -B] and keep A x.
inline Subobject sub_meet(const Subobject& m, const Subobject& n) {
  detail::require_same_ambient(m, n, "sub_meet");
  Matrix a = m.basis();
  Matrix b = n.basis();
  if (a.cols() == 0 || b.cols() == 0) return Subobject::bottom(m.ambient());
  Matrix kernel = nullspace_basis(hstack(a, -b));
  return from_span(m.ambient(), a * kernel.row_range(0, a.cols()));
}

inline Subobject sub_join(const Subobject& m, const Subobject& n) {
  detail::require_same_ambient(m, n, "sub_join");
  return from_span(m.ambient(), hstack(m.basis(), n.basis()));
}

inline Subobject sub_perp(const Subobject& m) {
  return Subobject::from_projection(Matrix::identity(m.ambient()) - m.proj());
}

/// Closure of the mono given by the columns of `mono_cols`. In finite
/// dimension every subspace is closed, so this is the span itself.
inline Subobject closure(std::size_t ambient, const Matrix& mono_cols) {
  if (mono_cols.rows() != ambient) {
    throw usage_error("closure: columns of length " + std::to_string(mono_cols.rows()) +
                      " in ambient " + std::to_string(ambient));
  }
  if (rank(mono_cols) != mono_cols.cols()) {
    throw usage_error("closure: columns are dependent, not a mono");
  }
  return projection_onto(ambient, mono_cols);
}

/// f^-1(N) = {x : f x in N} = ker((1 - P_N) f).
inline Subobject preimage(const Morphism& f, const Subobject& n) {
  if (n.ambient() != f.cod()) {
    throw usage_error("preimage: subobject of " + std::to_string(n.ambient()) +
                      " along a morphism into " + std::to_string(f.cod()));
  }
  Matrix outside = (Matrix::identity(n.ambient()) - n.proj()) * f.mat();
  return from_span(f.dom(), nullspace_basis(outside));
}

/// m m^dagger for an isometry m.
inline Subobject sub_from_isometry(const Morphism& m) {
  if (!is_dagger_mono(m)) throw usage_error("sub_from_isometry: morphism is not a dagger mono");
  return Subobject::from_projection(m.mat() * mat_dagger(m.mat()));
}

}  // namespace hilbcat

#endif  // HILBCAT_SUBOBJECT_HPP
